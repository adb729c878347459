"""Division-free determinant and adjugate over any commutative ring.

Entries only need ``+``, ``-`` and ``*``.  The determinant is a Laplace
expansion memoised on the set of remaining columns, so an n x n matrix costs
O(n 2^n) ring operations.  That is fine for the small sizes used here and,
unlike Gaussian elimination, never divides by a zero divisor.
"""

from functools import lru_cache


def det(rows, zero, one):
    n = len(rows)
    if n == 0:
        return one

    @lru_cache(maxsize=None)
    def expand(depth, cols):
        # cols: bitmask of columns still available; depth is the current row
        if depth == n:
            return one
        total = zero
        sign = 0
        for j in range(n):
            if not cols >> j & 1:
                continue
            entry = rows[depth][j]
            term = entry * expand(depth + 1, cols & ~(1 << j))
            total = total - term if sign else total + term
            sign ^= 1
        return total

    return expand(0, (1 << n) - 1)


def minor(rows, i, j):
    return [row[:j] + row[j + 1:] for k, row in enumerate(rows) if k != i]


def adjugate(rows, zero, one):
    """Transpose of the cofactor matrix, so that M adj(M) = det(M) I."""
    n = len(rows)
    adj = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = det(minor(rows, j, i), zero, one)
            adj[i][j] = -cof if (i + j) % 2 else cof
    return adj
