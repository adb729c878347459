"""Brute-force reference computations.

Nothing here calls into galring's arithmetic; inputs and outputs are plain
ints and lists so the tests can compare two independent routes.
"""

import itertools


def inverse_mod(a, q):
    """Extended Euclid."""
    r0, r1, s0, s1 = a % q, q, 1, 0
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    if r0 != 1:
        return None
    return s0 % q


def perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def leibniz_det(rows, q):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = perm_sign(perm)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total % q


def poly_mul(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return out


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_rem_monic(a, h, q):
    """Remainder of a by the monic h, schoolbook long division."""
    a = [x % q for x in a]
    d = len(h) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for i in range(d + 1):
                a[k - d + i] = (a[k - d + i] - c * h[i]) % q
    return (a + [0] * d)[:d]


def all_monic(p, degree):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible_by_products(f, p):
    """f is reducible iff it equals a product of two monic polys of positive degree."""
    n = len(f) - 1
    target = [c % p for c in f]
    for d in range(1, n):
        for a in all_monic(p, d):
            for b in all_monic(p, n - d):
                if poly_mul(a, b, p) == target:
                    return False
    return True


def order_of_x(f, p):
    """Multiplicative order of x modulo f over F_p, by repeated multiplication."""
    m = len(f) - 1
    x = poly_rem_monic([0, 1], f, p)
    one = poly_rem_monic([1], f, p)
    if not any(x):
        return None
    cur = x
    for k in range(1, p**m):
        if cur == one:
            return k
        cur = poly_rem_monic(poly_mul(cur, x, p), f, p)
    return None


def divides_binomial(h, n, q):
    """Does the monic h divide x^n - 1 over Z_q?"""
    target = [q - 1] + [0] * (n - 1) + [1]
    return not any(poly_rem_monic(target, h, q))


def lift_by_search(pi, p, r):
    """Monic lift of pi to Z_{p^r} dividing x^(p^m-1) - 1, one digit level at a time."""
    m = len(pi) - 1
    n = p**m - 1
    h = list(pi)
    for k in range(1, r):
        q = p ** (k + 1)
        found = []
        for corr in itertools.product(range(p), repeat=m):
            cand = [h[i] + p**k * corr[i] for i in range(m)] + [1]
            if divides_binomial(cand, n, q):
                found.append(cand)
        assert len(found) == 1, found
        h = found[0]
    return h


class RefRing:
    """GR(p^r, m) by schoolbook polynomial arithmetic modulo (h, p^r)."""

    def __init__(self, p, r, h):
        self.p, self.r, self.q = p, r, p**r
        self.h = list(h)
        self.m = len(h) - 1

    def mul(self, a, b):
        return tuple(poly_rem_monic(poly_mul(list(a), list(b), self.q), self.h, self.q))

    def add(self, a, b):
        return tuple((x + y) % self.q for x, y in zip(a, b))

    def power(self, a, e):
        out = tuple([1] + [0] * (self.m - 1))
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def elements(self):
        return list(itertools.product(range(self.q), repeat=self.m))

    def teichmuller(self):
        """Solutions of t^(p^m) = t, by exhaustive search (cached)."""
        if not hasattr(self, "_teich"):
            self._teich = [t for t in self.elements() if self.power(t, self.p**self.m) == t]
        return self._teich

    def frobenius(self, z):
        """Sum of p^i t_i^p over a p-adic expansion found by search."""
        teich = self.teichmuller()
        digits = []
        rest = tuple(z)
        for i in range(self.r):
            scale = self.p**i
            hit = [t for t in teich if all((c - scale * d) % (scale * self.p) == 0 for c, d in zip(rest, t))]
            assert len(hit) == 1
            digits.append(hit[0])
            rest = tuple((c - scale * d) % self.q for c, d in zip(rest, hit[0]))
        out = tuple([0] * self.m)
        for i, d in enumerate(digits):
            out = self.add(out, tuple(self.p**i * c % self.q for c in self.power(d, self.p)))
        return out

    def trace(self, z):
        total, cur = tuple([0] * self.m), tuple(z)
        for _ in range(self.m):
            total = self.add(total, cur)
            cur = self.frobenius(cur)
        assert not any(total[1:]), total
        return total[0]
