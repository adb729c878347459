"""Arithmetic and linear algebra over the integers modulo a prime power.

Elements of Z_{p^r} are plain Python ints held in canonical form
``0 <= a < p**r``.  :class:`ZrModulus` carries the modulus and the few
operations that need it; :class:`ZrMatrix` is an immutable matrix over it.

Z_{p^r} is local but not a field when r > 1, so a matrix is invertible iff its
determinant is a unit (not merely nonzero), and determinants are computed
without division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _linalg
from .errors import BadLiteral, NonSquare, NotAUnit, Singular, UsageError

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ZrModulus:
    """The ring Z_{p^r}."""

    p: int
    r: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise UsageError(f"p={self.p!r} is not a prime")
        if not isinstance(self.r, int) or self.r < 1:
            raise UsageError(f"r={self.r!r} must be a positive integer")
        q = self.p**self.r
        if q > MAX_MODULUS:
            raise UsageError(f"p^r = {q} exceeds 2^31")
        object.__setattr__(self, "modulus", q)

    def __str__(self):
        return f"Z_{self.modulus}"

    def reduce(self, a: int) -> int:
        return a % self.modulus

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inverse(self, a: int) -> int:
        return zr_inverse(a, self)

    def valuation(self, a: int) -> int:
        """Largest i <= r with p^i dividing ``a`` (r for zero)."""
        a %= self.modulus
        if a == 0:
            return self.r
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def elements(self) -> range:
        return range(self.modulus)

    def units(self) -> list[int]:
        return [a for a in range(self.modulus) if a % self.p]


def zr_inverse(a: int, zr: ZrModulus) -> int:
    """Inverse of ``a`` modulo p^r.

    >>> zr_inverse(3, ZrModulus(2, 3))
    3
    """
    a %= zr.modulus
    if a % zr.p == 0:
        raise NotAUnit(f"{a} is not a unit mod {zr.modulus}")
    return pow(a, -1, zr.modulus)


@dataclass(frozen=True)
class ZrMatrix:
    """Rectangular matrix with entries in Z_{p^r}, stored as a tuple of rows."""

    zr: ZrModulus
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.zr.modulus for x in row) for row in self.entries)
        if rows and len({len(row) for row in rows}) != 1:
            raise UsageError("matrix rows have different lengths")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, zr: ZrModulus, n: int) -> ZrMatrix:
        return cls(zr, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, zr: ZrModulus, rows: int, cols: int) -> ZrMatrix:
        return cls(zr, ((0,) * cols,) * rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> ZrMatrix:
        return ZrMatrix(self.zr, tuple(zip(*self.entries)))

    @property
    def T(self) -> ZrMatrix:
        return self.transpose()

    def __add__(self, other: ZrMatrix) -> ZrMatrix:
        return ZrMatrix(
            self.zr,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def scale(self, c: int) -> ZrMatrix:
        return ZrMatrix(self.zr, tuple(tuple(c * a for a in row) for row in self.entries))

    def __matmul__(self, other: ZrMatrix) -> ZrMatrix:
        if self.cols != other.rows:
            raise UsageError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return ZrMatrix(
            self.zr,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries),
        )

    def apply_left(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix."""
        q = self.zr.modulus
        return tuple(sum(v * row[j] for v, row in zip(vec, self.entries)) % q for j in range(self.cols))

    def det(self) -> int:
        return zr_mat_det(self)

    def adjugate(self) -> ZrMatrix:
        return zr_mat_adjugate(self)

    def inverse(self) -> ZrMatrix:
        return zr_mat_inverse(self)

    def is_invertible(self) -> bool:
        return self.is_square and self.zr.is_unit(self.det())

    def to_literal(self) -> str:
        return format_matrix(self.entries)


def _require_square(M: ZrMatrix):
    if not M.is_square:
        raise NonSquare(f"{M.rows}x{M.cols} matrix is not square")


def zr_mat_det(M: ZrMatrix) -> int:
    _require_square(M)
    return _linalg.det(M.entries, 0, 1) % M.zr.modulus


def zr_mat_adjugate(M: ZrMatrix) -> ZrMatrix:
    _require_square(M)
    return ZrMatrix(M.zr, tuple(map(tuple, _linalg.adjugate(M.entries, 0, 1))))


def zr_mat_inverse(M: ZrMatrix) -> ZrMatrix:
    """``det(M)^-1 * adj(M)``; raises :class:`Singular` unless det(M) is a unit."""
    d = zr_mat_det(M)
    if not M.zr.is_unit(d):
        raise Singular(f"determinant {d} is not a unit mod {M.zr.modulus}")
    return zr_mat_adjugate(M).scale(zr_inverse(d, M.zr))


# literals: entries split by ',', rows by ';'


def parse_vector(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise BadLiteral(f"bad integer vector literal {text!r}") from None


def parse_matrix(text: str) -> list[list[int]]:
    text = text.strip()
    if not text:
        raise BadLiteral("empty matrix literal")
    return [parse_vector(row) for row in text.split(";")]


def format_vector(vec: Iterable[int]) -> str:
    return ",".join(str(int(a)) for a in vec)


def format_matrix(rows: Iterable[Iterable[int]]) -> str:
    return ";".join(format_vector(row) for row in rows)
