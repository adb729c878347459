"""Homogeneous weight, linear codes over GR(p^r, m) and their p^r-ary images.

On GR(p^r, m) the homogeneous weight is

    w(0) = 0,
    w(x) = p^(m(r-1))          for x in p^(r-1) R, x != 0,
    w(x) = (p^m - 1) p^(m(r-2)) otherwise,

with average value Gamma = (p^m - 1) p^(m(r-2)).  Gamma is a Fraction because
it is not an integer when r = 1 (the weight is then the Hamming weight).
All weight sums are exact; the only floating point is in
:func:`whom_character_oracle`, which rebuilds w from the generating character.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .bases import Basis, coordinates, polynomial_basis
from .errors import TooLarge, UsageError
from .galois import DEFAULT_GUARD, GaloisRing, GrElem
from .modring import ZrModulus, parse_matrix


def gamma(p: int, r: int, m: int = 1) -> Fraction:
    """Average value (p^m - 1) p^(m(r-2)) of the homogeneous weight."""
    return (p**m - 1) * Fraction(p) ** (m * (r - 2))


def ring_gamma(ring: GaloisRing) -> Fraction:
    return gamma(ring.p, ring.r, ring.m)


@dataclass(frozen=True)
class HomWeightParams:
    ring: GaloisRing
    normalized: bool = False

    @property
    def gamma(self) -> Fraction:
        return Fraction(1) if self.normalized else ring_gamma(self.ring)

    def weight(self, z: GrElem) -> Fraction:
        w = Fraction(whom(z))
        return w / ring_gamma(self.ring) if self.normalized else w


def _weight_by_valuation(v: int, p: int, r: int, m: int) -> int:
    if v >= r:
        return 0
    if v == r - 1:
        return p ** (m * (r - 1))
    return (p**m - 1) * p ** (m * (r - 2))


def whom(z: GrElem) -> int:
    ring = z.ring
    return _weight_by_valuation(ring.valuation(z), ring.p, ring.r, ring.m)


def whom_zr(a: int, zr: ZrModulus) -> int:
    """Homogeneous weight on Z_{p^r} (the m = 1 case)."""
    return _weight_by_valuation(zr.valuation(a), zr.p, zr.r, 1)


def whom_vec(vec: Iterable[int], zr: ZrModulus) -> int:
    return sum(whom_zr(a, zr) for a in vec)


def whom_gr_vec(vec: Iterable[GrElem]) -> int:
    return sum(whom(z) for z in vec)


def hom_distance(x: Sequence[int], y: Sequence[int], zr: ZrModulus) -> int:
    return whom_vec(((a - b) for a, b in zip(x, y)), zr)


def generating_character(z: GrElem) -> complex:
    """chi(z) = exp(2 pi i b / p^r) with b the w^(m-1) coefficient of z."""
    q = z.ring.q
    return cmath.exp(2j * math.pi * z.coeffs[-1] / q)


def whom_character_oracle(z: GrElem, guard: int | None = None) -> float:
    """Gamma (1 - |R^x|^-1 sum_{u in R^x} chi(z u)), in floating point."""
    ring = z.ring
    units = ring.units(guard)
    total = sum(generating_character(z * u) for u in units)
    value = float(ring_gamma(ring)) * (1 - total / len(units))
    if abs(value.imag) > 1e-9:
        raise ArithmeticError(f"character sum for {z} has imaginary part {value.imag}")
    return value.real


@dataclass(frozen=True)
class HomogeneityResult:
    gamma: Fraction
    constant_on_associates: bool
    average_ok: bool

    @property
    def ok(self) -> bool:
        return self.constant_on_associates and self.average_ok


def homogeneity_check(ring: GaloisRing, weight=whom, guard: int | None = None) -> HomogeneityResult:
    """Check both homogeneity axioms exhaustively.

    (i) Rx = Ry implies w(x) = w(y); (ii) the sum of w over Rx is Gamma |Rx|
    for every x != 0.
    """
    g = ring_gamma(ring)
    elems = list(ring.elements(guard))
    ideals: dict[frozenset, set] = {}
    for x in elems:
        ideal = frozenset(y * x for y in elems)
        ideals.setdefault(ideal, set()).add(weight(x))
    constant = all(len(ws) == 1 for ws in ideals.values())
    average = all(
        sum(Fraction(weight(y)) for y in ideal) == g * len(ideal) for ideal in ideals if len(ideal) > 1
    )
    return HomogeneityResult(g, constant, average)


# codes over GR


@dataclass(frozen=True)
class LinearCode:
    """Left GR-linear code spanned by the rows of ``generator`` (k x n)."""

    ring: GaloisRing
    generator: tuple[tuple[GrElem, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(self.ring(x) for x in row) for row in self.generator)
        if not rows or len({len(row) for row in rows}) != 1:
            raise UsageError("generator must be a non-empty rectangular matrix")
        object.__setattr__(self, "generator", rows)

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def n(self) -> int:
        return len(self.generator[0])

    def codewords(self, guard: int | None = None) -> list[tuple[GrElem, ...]]:
        return code_enumerate(self, guard)


def parse_generator(text: str, ring: GaloisRing) -> LinearCode:
    """Rows split by '|', symbols by ';', coefficients by ','.

    ``"1,0;0,1|0,1;1,0"`` is the 2 x 2 matrix [[1, w], [w, 1]].
    """
    rows = [[ring.parse_element(sym) for sym in row.split(";")] for row in text.strip().split("|")]
    return LinearCode(ring, tuple(tuple(r) for r in rows))


def code_enumerate(code: LinearCode, guard: int | None = None) -> list[tuple[GrElem, ...]]:
    """All distinct codewords, sorted by coefficient tuples."""
    ring = code.ring
    limit = ring.guard if guard is None else guard
    if ring.order**code.k > limit:
        raise TooLarge(f"|GR|^k = {ring.order ** code.k} exceeds guard {limit}")
    elems = list(ring.elements(guard))
    seen = set()
    for combo in itertools.product(elems, repeat=code.k):
        word = []
        for j in range(code.n):
            acc = ring.zero
            for c, row in zip(combo, code.generator):
                acc = acc + c * row[j]
            word.append(acc)
        seen.add(tuple(word))
    return sorted(seen, key=lambda w: tuple(z.coeffs for z in w))


@dataclass(frozen=True)
class ZrCode:
    """A block code over Z_{p^r}, held as its sorted list of codewords.

    ``source`` and ``basis`` are set when the code is the image of a code over
    a Galois ring.
    """

    zr: ZrModulus
    length: int
    codewords: tuple[tuple[int, ...], ...]
    source: LinearCode | None = field(default=None, compare=False, repr=False)
    basis: Basis | None = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    @classmethod
    def from_words(cls, zr: ZrModulus, words: Iterable[Sequence[int]], **kw) -> ZrCode:
        words = sorted({tuple(int(a) % zr.modulus for a in w) for w in words})
        if not words:
            raise UsageError("a code must be non-empty")
        lengths = {len(w) for w in words}
        if len(lengths) != 1:
            raise UsageError("codewords have different lengths")
        return cls(zr, lengths.pop(), tuple(words), **kw)

    @classmethod
    def from_generator(cls, zr: ZrModulus, rows: Sequence[Sequence[int]], guard: int = DEFAULT_GUARD) -> ZrCode:
        rows = [list(r) for r in rows]
        if not rows:
            raise UsageError("empty generator")
        if zr.modulus ** len(rows) > guard:
            raise TooLarge(f"{zr.modulus}^{len(rows)} combinations exceed guard {guard}")
        n = len(rows[0])
        q = zr.modulus
        words = set()
        for combo in itertools.product(range(q), repeat=len(rows)):
            words.add(tuple(sum(c * row[j] for c, row in zip(combo, rows)) % q for j in range(n)))
        return cls.from_words(zr, words)

    def support(self) -> list[int]:
        """Coordinates i with pi_i(C) != 0."""
        return [i for i in range(self.length) if any(w[i] for w in self.codewords)]

    def is_linear(self) -> bool:
        """Closed under addition and Z_{p^r}-scaling."""
        q = self.zr.modulus
        words = set(self.codewords)
        for a, b in itertools.product(self.codewords, repeat=2):
            if tuple((x + y) % q for x, y in zip(a, b)) not in words:
                return False
        return all(tuple(c * x % q for x in w) in words for w in self.codewords for c in range(q))


def tau_image(word: Sequence[GrElem], b: Basis) -> tuple[int, ...]:
    """Concatenated coordinates of each symbol over ``b``."""
    out: list[int] = []
    for z in word:
        out.extend(coordinates(z, b))
    return tuple(out)


def code_image(code: LinearCode, b: Basis | None = None, guard: int | None = None) -> ZrCode:
    b = b or polynomial_basis(code.ring)
    words = [tau_image(w, b) for w in code_enumerate(code, guard)]
    return ZrCode.from_words(code.ring.zr, words, source=code, basis=b)


# weight sums


@dataclass(frozen=True)
class SupportSumResult:
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "ok": self.ok}


def lemma3_check(code: ZrCode) -> SupportSumResult:
    """Compare w(C)/|C| with Gamma times the support size of C."""
    zr = code.zr
    total = sum(whom_vec(w, zr) for w in code.codewords)
    lhs = Fraction(total, len(code))
    rhs = gamma(zr.p, zr.r) * len(code.support())
    return SupportSumResult(lhs, rhs)


@dataclass(frozen=True)
class WeightSum:
    computed: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    def to_dict(self) -> dict:
        return {"computed": self.computed, "expected": self.expected, "ok": self.ok}


def proposition_expected(p: int, r: int, m: int) -> int:
    """m (p - 1) p^(rm + r - 2); for r = 1 this is m (p - 1) p^(m - 1)."""
    return m * (p - 1) * p ** (r * m + r - 2)


def proposition_sum(ring: GaloisRing, b: Basis | None = None, guard: int | None = None) -> WeightSum:
    """Sum over all x of the homogeneous weight of tau(x)."""
    b = b or polynomial_basis(ring)
    zr = ring.zr
    computed = sum(whom_vec(coordinates(x, b), zr) for x in ring.elements(guard))
    return WeightSum(computed, proposition_expected(ring.p, ring.r, ring.m))


@dataclass(frozen=True)
class WeightStats:
    total: int
    min_nonzero: int | None
    distribution: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "sum": self.total,
            "min_nonzero": self.min_nonzero,
            "distribution": {str(k): v for k, v in sorted(self.distribution.items())},
        }


def zr_code_weight_stats(code: ZrCode) -> WeightStats:
    dist = Counter(whom_vec(w, code.zr) for w in code.codewords)
    nonzero = [w for w in dist if w > 0]
    return WeightStats(sum(w * c for w, c in dist.items()), min(nonzero) if nonzero else None, dict(dist))


def code_weight_stats(code: LinearCode, b: Basis | None = None, guard: int | None = None) -> WeightStats:
    """Weight statistics of the p^r-ary image; min_nonzero is the minimum distance."""
    return zr_code_weight_stats(code_image(code, b, guard))


def random_zr_generator(zr: ZrModulus, k: int, n: int, rng) -> list[list[int]]:
    return [[rng.randrange(zr.modulus) for _ in range(n)] for _ in range(k)]


def parse_zr_generator(text: str) -> list[list[int]]:
    """Z_{p^r} generator literal, rows split by ';' (or '|')."""
    return parse_matrix(text.replace("|", ";"))
