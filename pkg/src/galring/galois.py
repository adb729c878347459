"""The Galois ring GR(p^r, m) = Z_{p^r}[x] / (h).

Elements are stored in the additive representation a_0 + a_1 w + ... +
a_{m-1} w^{m-1} over the polynomial basis, where w is the class of x.  The
modulus h must be basic primitive and divide x^(p^m - 1) - 1, which makes w
itself a generator of the Teichmuller set

    T = {0, 1, w, w^2, ..., w^(p^m - 2)}.

With that choice the generalized Frobenius f is the Z_{p^r}-linear map fixed
by w^j -> w^(p j), so it is stored as a table of images of the basis.  The
digit-wise definition through the p-adic expansion z = sum_i p^i z_i (z_i in
T) is kept in :meth:`GaloisRing.frobenius_padic` as an independent route.

>>> R = GaloisRing(2, 2, 2)
>>> w = R.omega
>>> print(w * w)
3 + 3*w
>>> R.trace(R([3, 1]))
1
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import (
    BadLiteral,
    BadRingSpec,
    DigitNotTeichmuller,
    InternalError,
    NotAUnit,
    NotPrimitiveInput,
    RingMismatch,
    Singular,
    TooLarge,
    UsageError,
)
from .modring import ZrMatrix, ZrModulus, parse_vector
from .polyring import Poly, PolyClass, classify, cyclotomic_binomial, find_basic_primitive, mu_reduce

DEFAULT_GUARD = 10**6

PadicDigits = tuple  # r-tuple of GrElem, each in the Teichmuller set


class GaloisRing:
    """GR(p^r, m) with a fixed basic primitive modulus ``h``.

    ``h`` defaults to :func:`find_basic_primitive` ``(p, r, m)``.  It may be given as a
    :class:`Poly` or as ascending integer coefficients.
    """

    def __init__(self, p: int, r: int, m: int, h: Union[Poly, Sequence[int], None] = None, guard: int = DEFAULT_GUARD):
        self.zr = ZrModulus(p, r)
        if not isinstance(m, int) or m < 1:
            raise BadRingSpec(f"m={m!r} must be a positive integer")
        self.p, self.r, self.m = p, r, m
        self.q = self.zr.modulus
        self.n = p**m - 1
        self.guard = guard
        if h is None:
            h = find_basic_primitive(p, r, m)
        elif not isinstance(h, Poly):
            h = Poly(self.zr, tuple(h))
        h = h.change_ring(self.zr)
        if h.degree != m:
            raise BadRingSpec(f"modulus {h} has degree {h.degree}, expected {m}")
        kind = classify(h)
        if kind is not PolyClass.BASIC_PRIMITIVE:
            raise NotPrimitiveInput(f"modulus {h} is {kind.value}; a basic primitive polynomial is required")
        if not h.divides(cyclotomic_binomial(self.zr, self.n)):
            raise NotPrimitiveInput(
                f"modulus {h} does not divide x^{self.n} - 1 over Z_{self.q}; "
                "use the Hensel lift of its reduction mod p"
            )
        self.h = h
        self._build_tables()

    def _build_tables(self):
        m, q, p, n = self.m, self.q, self.p, self.n
        # w^k for k = m .. 2m-2, used to reduce products
        tail = [-c % q for c in self.h.coeffs[:m]]
        red = [tuple(tail)]
        for _ in range(m - 2):
            prev = red[-1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            red.append(tuple((s + top * t) % q for s, t in zip(shifted, tail)))
        self._reduce = red

        powers = [self._unit_vec(0)]
        w = self._unit_vec(1) if m > 1 else tuple(tail)
        for _ in range(n - 1):
            powers.append(self._mul(powers[-1], w))
        if self._mul(powers[-1], w) != powers[0]:
            raise InternalError("w^(p^m - 1) != 1")
        self._powers = powers
        self._omega = w
        zero = (0,) * m
        self._teich = [zero] + powers
        self._teich_of_residue = {tuple(c % p for c in t): t for t in self._teich}
        if len(self._teich_of_residue) != n + 1:
            raise InternalError("Teichmuller set does not map onto the residue field")
        # conj[k][j] = (w^j)^(f^k) = w^(j p^k)
        self._conj = [[powers[(j * p**k) % n] for j in range(m)] for k in range(m)]
        trace_vec = []
        for j in range(m):
            s = [sum(col) % q for col in zip(*(self._conj[k][j] for k in range(m)))]
            if any(s[1:]):
                raise InternalError(f"T(w^{j}) is not in Z_{q}")
            trace_vec.append(s[0])
        self._trace_vec = tuple(trace_vec)

    def _unit_vec(self, i: int) -> tuple[int, ...]:
        v = [0] * self.m
        v[i] = 1
        return tuple(v)

    def _mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        m, q = self.m, self.q
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = prod[:m]
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                for i, t in enumerate(self._reduce[k - m]):
                    out[i] += c * t
        return tuple(x % q for x in out)

    # -- identity ----------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.r, self.m, self.h.coeffs)

    def __eq__(self, other):
        return self is other or (isinstance(other, GaloisRing) and self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GaloisRing(p={self.p}, r={self.r}, m={self.m}, h={list(self.h.coeffs)})"

    def spec(self) -> str:
        return f"GR(p={self.p},r={self.r},m={self.m};h={self.h.to_literal()})"

    @classmethod
    def from_spec(cls, text: str, guard: int = DEFAULT_GUARD) -> GaloisRing:
        """Parse ``GR(p=2,r=2,m=3)`` or ``GR(p=2,r=2,m=3;h=3,1,2,1)``."""
        match = _SPEC_RE.fullmatch(text.strip())
        if not match:
            raise BadRingSpec(f"cannot parse ring spec {text!r}")
        p, r, m = (int(match.group(k)) for k in "prm")
        h = parse_vector(match.group("h")) if match.group("h") else None
        try:
            return cls(p, r, m, h, guard=guard)
        except BadLiteral as exc:
            raise BadRingSpec(str(exc)) from None

    # -- sizes -------------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.q

    @property
    def order(self) -> int:
        return self.q**self.m

    @property
    def unit_group_order(self) -> int:
        return self.n * self.p ** ((self.r - 1) * self.m)

    def ideal_sizes(self) -> list[int]:
        """|p^i R| for i = 0..r."""
        return [self.p ** ((self.r - i) * self.m) for i in range(self.r + 1)]

    def is_field(self) -> bool:
        return self.r == 1

    # -- elements ----------------------------------------------------------

    def __call__(self, value) -> GrElem:
        if isinstance(value, GrElem):
            self.check(value)
            return value
        if isinstance(value, int):
            return GrElem(self, (value % self.q,) + (0,) * (self.m - 1))
        coeffs = tuple(int(c) % self.q for c in value)
        if len(coeffs) > self.m:
            raise BadLiteral(f"{len(coeffs)} coefficients given for a rank-{self.m} ring")
        return GrElem(self, coeffs + (0,) * (self.m - len(coeffs)))

    def parse_element(self, text: str) -> GrElem:
        return self(parse_vector(text))

    def check(self, *elems: GrElem):
        for z in elems:
            if z.ring is not self and z.ring != self:
                raise RingMismatch(f"element of {z.ring!r} used in {self!r}")

    @property
    def zero(self) -> GrElem:
        return GrElem(self, (0,) * self.m)

    @property
    def one(self) -> GrElem:
        return GrElem(self, self._unit_vec(0))

    @property
    def omega(self) -> GrElem:
        return GrElem(self, self._omega)

    def polynomial_basis(self) -> list[GrElem]:
        return [self.omega_power(j) for j in range(self.m)]

    def omega_power(self, k: int) -> GrElem:
        return GrElem(self, self._powers[k % self.n])

    def _require_enumerable(self, count: int, guard: int | None = None):
        limit = self.guard if guard is None else guard
        if count > limit:
            raise TooLarge(f"enumeration of {count} items exceeds guard {limit}")

    def elements(self, guard: int | None = None) -> Iterator[GrElem]:
        """Every element, in ascending lexicographic order of (a_0, ..., a_{m-1})."""
        self._require_enumerable(self.order, guard)
        for coeffs in itertools.product(range(self.q), repeat=self.m):
            yield GrElem(self, coeffs)

    def units(self, guard: int | None = None) -> list[GrElem]:
        return [z for z in self.elements(guard) if self.is_unit(z)]

    def scalars(self) -> list[GrElem]:
        """The copy of Z_{p^r} inside the ring."""
        return [self(a) for a in range(self.q)]

    def ideal(self, i: int, guard: int | None = None) -> list[GrElem]:
        """The elements of p^i R, deduplicated and sorted."""
        pi = self.p**i
        return sorted({pi * z for z in self.elements(guard)})

    def principal_ideal(self, x: GrElem, guard: int | None = None) -> frozenset[GrElem]:
        return frozenset(y * x for y in self.elements(guard))

    # -- structure ---------------------------------------------------------

    def residue(self, z: GrElem) -> tuple[int, ...]:
        """mu(z): coefficients reduced mod p, an element of F_{p^m}."""
        p = self.p
        return tuple(c % p for c in z.coeffs)

    def residue_field(self) -> GaloisRing:
        return GaloisRing(self.p, 1, self.m, mu_reduce(self.h))

    def to_residue_field(self, z: GrElem, field: GaloisRing | None = None) -> GrElem:
        field = field or self.residue_field()
        return GrElem(field, self.residue(z))

    def is_unit(self, z: GrElem) -> bool:
        return any(c % self.p for c in z.coeffs)

    def valuation(self, z: GrElem) -> int:
        """Largest i <= r with z in p^i R."""
        return min(self.zr.valuation(c) for c in z.coeffs)

    def teichmuller_set(self) -> list[GrElem]:
        return [GrElem(self, t) for t in self._teich]

    def teichmuller_lift(self, z: GrElem) -> GrElem:
        """The unique t in T with mu(t) = mu(z)."""
        return GrElem(self, self._teich_of_residue[self.residue(z)])

    def is_teichmuller(self, z: GrElem) -> bool:
        return self._teich_of_residue.get(self.residue(z)) == z.coeffs

    def padic_decompose(self, z: GrElem) -> PadicDigits:
        self.check(z)
        p, q = self.p, self.q
        rest = list(z.coeffs)
        digits = []
        for i in range(self.r):
            pi = p**i
            # rest is divisible by p^i coefficient-wise
            t = self._teich_of_residue[tuple((c // pi) % p for c in rest)]
            digits.append(GrElem(self, t))
            rest = [(c - pi * d) % q for c, d in zip(rest, t)]
        if any(rest):
            raise InternalError(f"p-adic expansion of {z} did not terminate")
        return tuple(digits)

    def padic_compose(self, digits: Sequence[GrElem]) -> GrElem:
        if len(digits) != self.r:
            raise BadLiteral(f"expected {self.r} p-adic digits, got {len(digits)}")
        total = self.zero
        for i, d in enumerate(digits):
            self.check(d)
            if not self.is_teichmuller(d):
                raise DigitNotTeichmuller(f"digit {d} is not a Teichmuller representative")
            total = total + self.p**i * d
        return total

    # -- Frobenius and trace -----------------------------------------------

    def _apply_conj(self, coeffs: Sequence[int], k: int) -> tuple[int, ...]:
        table = self._conj[k % self.m]
        out = [0] * self.m
        for a, img in zip(coeffs, table):
            if a:
                for i, c in enumerate(img):
                    out[i] += a * c
        q = self.q
        return tuple(x % q for x in out)

    def frobenius(self, z: GrElem) -> GrElem:
        self.check(z)
        return GrElem(self, self._apply_conj(z.coeffs, 1))

    def frobenius_iter(self, z: GrElem, k: int) -> GrElem:
        """f^k(z) for k >= 0."""
        if k < 0:
            raise UsageError("Frobenius power must be non-negative")
        self.check(z)
        return GrElem(self, self._apply_conj(z.coeffs, k))

    def frobenius_padic(self, z: GrElem) -> GrElem:
        """f(z) = sum_i p^i z_i^p from the p-adic digits of z."""
        total = self.zero
        for i, d in enumerate(self.padic_decompose(z)):
            total = total + self.p**i * d**self.p
        return total

    def frobenius_matrix(self, k: int = 1) -> ZrMatrix:
        """Row j holds the coordinates of f^k(w^j)."""
        return ZrMatrix(self.zr, tuple(self._conj[k % self.m]))

    def conjugates(self, z: GrElem) -> list[GrElem]:
        """[z, f(z), ..., f^(m-1)(z)]."""
        return [self.frobenius_iter(z, k) for k in range(self.m)]

    def trace(self, z: GrElem) -> int:
        self.check(z)
        return sum(a * t for a, t in zip(z.coeffs, self._trace_vec)) % self.q

    def trace_by_conjugates(self, z: GrElem) -> int:
        """T(z) summed as z + f(z) + ... + f^(m-1)(z), with the scalar check."""
        s = self.zero
        for c in self.conjugates(z):
            s = s + c
        if any(s.coeffs[1:]):
            raise InternalError(f"trace of {z} is not a scalar: {s}")
        return s.coeffs[0]

    def multiplication_matrix(self, z: GrElem) -> ZrMatrix:
        """Row j is z * w^j, so a row vector of coordinates y maps to y z."""
        return ZrMatrix(self.zr, tuple(self._mul(z.coeffs, self._unit_vec(j)) for j in range(self.m)))

    def inverse(self, z: GrElem) -> GrElem:
        if not self.is_unit(z):
            raise NotAUnit(f"{z} is not a unit of {self.spec()}")
        try:
            inv = self.multiplication_matrix(z).inverse()
        except Singular:  # unreachable for a unit
            raise InternalError(f"multiplication by the unit {z} is singular") from None
        return GrElem(self, inv.entries[0])


_SPEC_RE = re.compile(
    r"GR\(\s*p\s*=\s*(?P<p>\d+)\s*,\s*r\s*=\s*(?P<r>\d+)\s*,\s*m\s*=\s*(?P<m>\d+)"
    r"\s*(?:;\s*h\s*=\s*(?P<h>-?\d+(?:\s*,\s*-?\d+)*))?\s*\)"
)


@dataclass(frozen=True, slots=True, eq=False)
class GrElem:
    """Element of a :class:`GaloisRing`, immutable, with ring operators."""

    ring: GaloisRing
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> GrElem | None:
        if isinstance(other, GrElem):
            self.ring.check(other)
            return other
        if isinstance(other, int):
            return self.ring(other)
        return None

    def __eq__(self, other):
        if isinstance(other, GrElem):
            return self.coeffs == other.coeffs and self.ring == other.ring
        if isinstance(other, int):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other: GrElem) -> bool:
        return self.coeffs < other.coeffs

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q = self.ring.q
        return GrElem(self.ring, tuple((a + b) % q for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q = self.ring.q
        return GrElem(self.ring, tuple((a - b) % q for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        q = self.ring.q
        return GrElem(self.ring, tuple(-a % q for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            q = self.ring.q
            return GrElem(self.ring, tuple(a * other % q for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GrElem(self.ring, self.ring._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self) -> GrElem:
        return self.ring.inverse(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self)

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    def frobenius(self, k: int = 1) -> GrElem:
        return self.ring.frobenius_iter(self, k)

    def trace(self) -> int:
        return self.ring.trace(self)

    def to_literal(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"GrElem({self}; {self.ring.spec()})"


# spec-named conveniences


def is_unit(z: GrElem) -> bool:
    return z.ring.is_unit(z)


def teichmuller_set(ring: GaloisRing) -> list[GrElem]:
    return ring.teichmuller_set()


def padic_decompose(z: GrElem) -> PadicDigits:
    return z.ring.padic_decompose(z)


def padic_compose(digits: Sequence[GrElem]) -> GrElem:
    if not digits:
        raise BadLiteral("no digits given")
    return digits[0].ring.padic_compose(digits)


def frobenius(z: GrElem) -> GrElem:
    return z.ring.frobenius(z)


def frobenius_iter(z: GrElem, k: int) -> GrElem:
    return z.ring.frobenius_iter(z, k)


def trace(z: GrElem) -> int:
    return z.ring.trace(z)
