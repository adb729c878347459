"""Polynomials over Z_{p^r} and the search for basic primitive moduli.

A :class:`Poly` stores ascending coefficients with trailing zeros trimmed, so
``Poly.from_coeffs([3, 1, 2, 1], Z4)`` is 3 + x + 2x^2 + x^3.

The Galois ring construction needs a monic *basic primitive* polynomial h over
Z_{p^r}: its reduction mod p is primitive over F_p, and additionally h divides
x^(p^m - 1) - 1.  The second condition pins h down uniquely among the lifts of
a given primitive polynomial; :func:`hensel_lift_primitive` computes it by
lifting the factorisation x^n - 1 = h g one power of p at a time.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MathError, NotIrreducible, NotMonic, NotPrimitiveInput, UsageError
from .modring import ZrModulus, parse_vector, prime_factors


def _trim(coeffs: Iterable[int], q: int) -> tuple[int, ...]:
    out = [c % q for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    zr: ZrModulus
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs, self.zr.modulus))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], zr: ZrModulus) -> Poly:
        return cls(zr, tuple(coeffs))

    @classmethod
    def monomial(cls, zr: ZrModulus, degree: int, c: int = 1) -> Poly:
        return cls(zr, (0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Poly):
        if self.zr != other.zr:
            raise UsageError(f"polynomials over {self.zr} and {other.zr}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.zr, tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.zr, tuple(self[i] - other[i] for i in range(n)))

    def __neg__(self) -> Poly:
        return Poly(self.zr, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly(self.zr, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.zr, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.zr, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Division by a polynomial whose leading coefficient is a unit."""
        self._check(divisor)
        if divisor.is_zero() or not self.zr.is_unit(divisor.lead):
            raise MathError("divisor must have a unit leading coefficient")
        q = self.zr.modulus
        inv = pow(divisor.lead, -1, q)
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] * inv % q
            if c:
                quot[k - d] = c
                for i, b in enumerate(divisor.coeffs):
                    rem[k - d + i] -= c * b
        return Poly(self.zr, tuple(quot)), Poly(self.zr, tuple(rem[:d]))

    def __floordiv__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[1]

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def powmod(self, e: int, modulus: Poly) -> Poly:
        result = Poly(self.zr, (1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc % self.zr.modulus

    def change_ring(self, zr: ZrModulus) -> Poly:
        return Poly(zr, self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def to_literal(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


class PolyClass(enum.Enum):
    NOT_MONIC = "NotMonic"
    REDUCIBLE = "Reducible"
    BASIC_IRREDUCIBLE = "BasicIrreducible"
    BASIC_PRIMITIVE = "BasicPrimitive"


def residue_field_modulus(zr: ZrModulus) -> ZrModulus:
    return ZrModulus(zr.p, 1)


def mu_reduce(f: Poly) -> Poly:
    """Coefficient-wise reduction mod p, landing in F_p[x]."""
    return f.change_ring(residue_field_modulus(f.zr))


def monic_polys(fp: ZrModulus, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree.

    Ordered by the integer sum(c_i p^i), i.e. comparing coefficients from the
    top degree down; x^3 + x + 1 comes before x^3 + x^2 + 1.
    """
    for high in itertools.product(range(fp.modulus), repeat=degree):
        yield Poly(fp, high[::-1] + (1,))


def _require_fp_monic(f: Poly):
    if f.zr.r != 1:
        raise UsageError(f"expected a polynomial over F_p, got one over {f.zr}")
    if not f.is_monic() or f.degree < 1:
        raise NotMonic(f"{f} is not monic of positive degree")


def is_irreducible_fp(f: Poly) -> bool:
    """Irreducibility over F_p by trial division with every monic candidate factor."""
    _require_fp_monic(f)
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.zr, d):
            if g.divides(f):
                return False
    return True


def is_primitive_fp(f: Poly) -> bool:
    """True iff x has multiplicative order p^m - 1 modulo the irreducible ``f``."""
    _require_fp_monic(f)
    if not is_irreducible_fp(f):
        raise NotIrreducible(f"{f} is reducible over F_{f.zr.p}")
    n = f.zr.p**f.degree - 1
    x = Poly.monomial(f.zr, 1)
    one = Poly(f.zr, (1,))
    if x.powmod(n, f) != one:
        return False
    return all(x.powmod(n // ell, f) != one for ell in prime_factors(n))


def classify(g: Poly) -> PolyClass:
    if not g.is_monic():
        return PolyClass.NOT_MONIC
    if g.degree < 1:
        return PolyClass.REDUCIBLE
    pi = mu_reduce(g)
    if not is_irreducible_fp(pi):
        return PolyClass.REDUCIBLE
    if is_primitive_fp(pi):
        return PolyClass.BASIC_PRIMITIVE
    return PolyClass.BASIC_IRREDUCIBLE


def cyclotomic_binomial(zr: ZrModulus, n: int) -> Poly:
    """x^n - 1 over ``zr``."""
    return Poly(zr, (-1,) + (0,) * (n - 1) + (1,))


def _xgcd_fp(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s a + t b = g monic, over a prime field."""
    zero = Poly(a.zr, ())
    one = Poly(a.zr, (1,))
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    inv = pow(r0.lead, -1, a.zr.p)
    return r0 * inv, s0 * inv, t0 * inv


def hensel_lift_primitive(pi: Poly, r: int) -> Poly:
    """The monic lift h of ``pi`` to Z_{p^r} that divides x^(p^m - 1) - 1.

    Starting from x^n - 1 = pi * g over F_p (n = p^m - 1 is prime to p, so the
    factors are coprime), each step corrects h and g by multiples of p^k so
    that the factorisation holds modulo p^(k+1).
    """
    _require_fp_monic(pi)
    if not is_irreducible_fp(pi) or not is_primitive_fp(pi):
        raise NotPrimitiveInput(f"{pi} is not primitive over F_{pi.zr.p}")
    fp = pi.zr
    p, m = fp.p, pi.degree
    n = p**m - 1
    g = cyclotomic_binomial(fp, n) // pi
    gcd, s, t = _xgcd_fp(pi, g)
    if gcd.degree != 0:
        raise MathError("x^n - 1 is not squarefree mod p")  # unreachable for gcd(n, p) = 1
    # s pi + t g = 1 mod p
    h_c, g_c = list(pi.coeffs), list(g.coeffs)
    for k in range(1, r):
        zk1 = ZrModulus(p, k + 1)
        h = Poly(zk1, tuple(h_c))
        gg = Poly(zk1, tuple(g_c))
        err = cyclotomic_binomial(zk1, n) - h * gg
        pk = p**k
        if any(c % pk for c in err.coeffs):
            raise MathError("Hensel invariant broken")  # unreachable
        e = Poly(fp, tuple(c // pk for c in err.coeffs))
        # a g + b h = e mod p with deg a < m
        a = (t * e) % Poly(fp, tuple(h_c))
        b, rem = divmod(e - a * Poly(fp, tuple(g_c)), Poly(fp, tuple(h_c)))
        if not rem.is_zero():
            raise MathError("Hensel correction not exact")  # unreachable
        h_c = [hc + pk * a[i] for i, hc in enumerate(h_c)]
        g_c = [gc + pk * b[i] for i, gc in enumerate(g_c)]
    zr = ZrModulus(p, r)
    h = Poly(zr, tuple(h_c))
    if not h.divides(cyclotomic_binomial(zr, n)):
        raise MathError(f"lift {h} does not divide x^{n} - 1")  # unreachable
    return h


def smallest_primitive_fp(p: int, m: int) -> Poly:
    """First monic primitive polynomial of degree ``m`` in :func:`monic_polys` order.

    For m = 1 the answer is x - g with g the smallest primitive root mod p,
    which is what a reader expects even though it is not first in that order.
    """
    if m < 1:
        raise UsageError("degree must be at least 1")
    fp = ZrModulus(p, 1)
    if m == 1:
        for g in range(1, p):
            f = Poly(fp, (-g, 1))
            if is_primitive_fp(f):
                return f
    for f in monic_polys(fp, m):
        if f[0] != 0 and is_irreducible_fp(f) and is_primitive_fp(f):
            return f
    raise MathError(f"no primitive polynomial of degree {m} over F_{p}")  # unreachable


def find_basic_primitive(p: int, r: int, m: int) -> Poly:
    return hensel_lift_primitive(smallest_primitive_fp(p, m), r)


def parse_poly(text: str, zr: ZrModulus) -> Poly:
    return Poly(zr, tuple(parse_vector(text)))
