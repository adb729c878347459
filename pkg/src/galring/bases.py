"""Bases of GR(p^r, m) over Z_{p^r}: coordinates, automorphism matrices, duals.

For a basis beta_0, ..., beta_{m-1} the automorphism matrix is
B[i][j] = f^j(beta_i).  Because f fixes Z_{p^r}, B B^t is the Gram matrix of
the trace form, (B B^t)[i][j] = T(beta_i beta_j).  The dual basis is read off
B^-1 = adj(B) / det(B): row k of B^-1 is f^k applied to row 0, hence

    B B^-1 = I   <=>   T(beta_i delta_j) = [i == j]

where delta_j = (B^-1)[0][j].

Indexing is 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import _linalg
from .errors import (
    InternalError,
    NonScalarResult,
    NonSquare,
    NotABasis,
    RingMismatch,
    SingularOverGR,
    UsageError,
    WrongCardinality,
)
from .galois import GaloisRing, GrElem
from .modring import ZrMatrix, format_matrix, parse_matrix


class GrMatrix:
    """Immutable rectangular matrix over a Galois ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: GaloisRing, entries: Iterable[Iterable]):
        rows = tuple(tuple(ring(x) for x in row) for row in entries)
        if rows and len({len(row) for row in rows}) != 1:
            raise UsageError("matrix rows have different lengths")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("GrMatrix is immutable")

    @classmethod
    def identity(cls, ring: GaloisRing, n: int) -> GrMatrix:
        return cls(ring, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> GrElem:
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, GrMatrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"GrMatrix([{body}])"

    def transpose(self) -> GrMatrix:
        return GrMatrix(self.ring, zip(*self.entries))

    @property
    def T(self) -> GrMatrix:
        return self.transpose()

    def __matmul__(self, other: GrMatrix) -> GrMatrix:
        if self.ring != other.ring:
            raise RingMismatch("matrices over different rings")
        if self.cols != other.rows:
            raise UsageError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            new = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                new.append(acc)
            out.append(new)
        return GrMatrix(self.ring, out)

    def scale(self, c) -> GrMatrix:
        return GrMatrix(self.ring, [[c * x for x in row] for row in self.entries])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_identity(self) -> bool:
        return self == GrMatrix.identity(self.ring, self.rows)

    def is_orthogonal(self) -> bool:
        """A A^t = A^t A = I."""
        return self.is_square() and (self @ self.T).is_identity() and (self.T @ self).is_identity()

    def det(self) -> GrElem:
        return gr_mat_det(self)

    def adjugate(self) -> GrMatrix:
        return gr_mat_adjugate(self)

    def inverse(self) -> GrMatrix:
        return gr_mat_inverse(self)

    def is_scalar_matrix(self) -> bool:
        """Every entry lies in Z_{p^r}."""
        return all(x.is_scalar() for row in self.entries for x in row)

    def to_zr(self) -> ZrMatrix:
        if not self.is_scalar_matrix():
            raise NonScalarResult(f"{self!r} has entries outside Z_{self.ring.q}")
        return ZrMatrix(self.ring.zr, tuple(tuple(x.coeffs[0] for x in row) for row in self.entries))

    def to_lists(self) -> list[list[list[int]]]:
        return [[list(x.coeffs) for x in row] for row in self.entries]


def _require_square(M: GrMatrix):
    if not M.is_square():
        raise NonSquare(f"{M.rows}x{M.cols} matrix is not square")


def gr_mat_det(M: GrMatrix) -> GrElem:
    _require_square(M)
    return _linalg.det(M.entries, M.ring.zero, M.ring.one)


def gr_mat_adjugate(M: GrMatrix) -> GrMatrix:
    _require_square(M)
    return GrMatrix(M.ring, _linalg.adjugate(M.entries, M.ring.zero, M.ring.one))


def gr_mat_inverse(M: GrMatrix) -> GrMatrix:
    d = gr_mat_det(M)
    if not d.is_unit():
        raise SingularOverGR(f"determinant {d} is not a unit")
    return gr_mat_adjugate(M).scale(d.inverse())


@dataclass(frozen=True, eq=False)
class Basis:
    """An ordered free basis of the ring over Z_{p^r}.

    ``coordinate_matrix`` has row i equal to the polynomial-basis coefficients
    of ``elements[i]``.  Build instances with :func:`check_basis`.
    """

    ring: GaloisRing
    elements: tuple[GrElem, ...]
    coordinate_matrix: ZrMatrix
    _inverse: ZrMatrix = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> GrElem:
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash(tuple(z.coeffs for z in self.elements))

    def __repr__(self):
        return "Basis{" + ", ".join(str(z) for z in self.elements) + "}"

    def to_lists(self) -> list[list[int]]:
        return [list(z.coeffs) for z in self.elements]

    def to_literal(self) -> str:
        return format_matrix(self.to_lists())

    def coordinates(self, z: GrElem) -> tuple[int, ...]:
        return coordinates(z, self)


def check_basis(cands: Sequence, ring: GaloisRing | None = None) -> Basis:
    """Validate ``cands`` as a basis; raises :class:`NotABasis` otherwise.

    Over the local ring Z_{p^r}, m elements form a free basis exactly when
    their coordinate matrix has unit determinant.
    """
    if ring is None:
        if not cands or not isinstance(cands[0], GrElem):
            raise WrongCardinality("cannot infer the ring from an empty candidate list")
        ring = cands[0].ring
    elems = tuple(ring(c) for c in cands)
    if len(elems) != ring.m:
        raise WrongCardinality(f"a basis of {ring.spec()} has {ring.m} elements, got {len(elems)}")
    C = ZrMatrix(ring.zr, tuple(z.coeffs for z in elems))
    d = C.det()
    if not ring.zr.is_unit(d):
        raise NotABasis(f"coordinate determinant {d} is not a unit mod {ring.q}")
    return Basis(ring, elems, C, C.inverse())


def parse_basis(text: str, ring: GaloisRing) -> Basis:
    """Basis literal: one element per ';'-separated row, ``"1,0;0,1"``."""
    return check_basis(parse_matrix(text), ring)


def is_basis(cands: Sequence, ring: GaloisRing | None = None) -> bool:
    try:
        check_basis(cands, ring)
    except NotABasis:
        return False
    return True


def polynomial_basis(ring: GaloisRing) -> Basis:
    return check_basis(ring.polynomial_basis(), ring)


def span(cands: Sequence[GrElem], ring: GaloisRing) -> set[GrElem]:
    """Z_{p^r}-linear span, by enumeration over all coefficient tuples."""
    ring._require_enumerable(ring.q ** len(cands))
    out = set()
    for coeffs in itertools.product(range(ring.q), repeat=len(cands)):
        acc = ring.zero
        for a, z in zip(coeffs, cands):
            acc = acc + a * z
        out.add(acc)
    return out


def coordinates(z: GrElem, b: Basis) -> tuple[int, ...]:
    """tau(z): the a_i in Z_{p^r} with z = sum_i a_i beta_i."""
    b.ring.check(z)
    return b._inverse.apply_left(z.coeffs)


def from_coordinates(coords: Sequence[int], b: Basis) -> GrElem:
    return GrElem(b.ring, b.coordinate_matrix.apply_left(coords))


def all_bases(ring: GaloisRing, guard: int | None = None) -> Iterator[Basis]:
    """Every ordered basis, in lexicographic order of the coordinate matrices."""
    m, q = ring.m, ring.q
    ring._require_enumerable(q ** (m * m), guard)
    for flat in itertools.product(range(q), repeat=m * m):
        C = ZrMatrix(ring.zr, tuple(flat[i * m:(i + 1) * m] for i in range(m)))
        if ring.zr.is_unit(C.det()):
            yield Basis(ring, tuple(GrElem(ring, row) for row in C.entries), C, C.inverse())


def random_basis(ring: GaloisRing, rng) -> Basis:
    """Uniform random basis, by rejection on the coordinate matrix."""
    m, q = ring.m, ring.q
    while True:
        rows = [tuple(rng.randrange(q) for _ in range(m)) for _ in range(m)]
        C = ZrMatrix(ring.zr, tuple(rows))
        if ring.zr.is_unit(C.det()):
            return Basis(ring, tuple(GrElem(ring, row) for row in rows), C, C.inverse())


# automorphism matrix, Vandermonde matrix


def automorphism_matrix(b: Basis) -> GrMatrix:
    """B[i][j] = f^j(beta_i)."""
    return GrMatrix(b.ring, [b.ring.conjugates(z) for z in b.elements])


def vandermonde_omega(ring: GaloisRing) -> GrMatrix:
    """Omega[i][j] = (w^(p^j))^i, computed from powers of w rather than from f."""
    p, m = ring.p, ring.m
    return GrMatrix(ring, [[ring.omega_power(i * p**j) for j in range(m)] for i in range(m)])


def vandermonde_factors(ring: GaloisRing) -> list[GrElem]:
    """The factors w^(p^i) - w^(p^j), 0 <= j < i < m, of det Omega."""
    p, m = ring.p, ring.m
    nodes = [ring.omega_power(p**k) for k in range(m)]
    return [nodes[i] - nodes[j] for j in range(m) for i in range(j + 1, m)]


def vandermonde_det_product(ring: GaloisRing) -> GrElem:
    out = ring.one
    for factor in vandermonde_factors(ring):
        out = out * factor
    return out


def gram_matrix(b: Basis) -> ZrMatrix:
    """Trace form T(beta_i beta_j)."""
    ring = b.ring
    return ZrMatrix(ring.zr, tuple(tuple(ring.trace(x * y) for y in b.elements) for x in b.elements))


def det_b_squared(b: Basis) -> int:
    """(det B)^2, which lies in Z_{p^r} and is a unit there."""
    d = gr_mat_det(automorphism_matrix(b))
    sq = d * d
    if not sq.is_scalar():
        raise NonScalarResult(f"(det B)^2 = {sq} is not in Z_{b.ring.q}")
    value = sq.coeffs[0]
    if not b.ring.zr.is_unit(value):
        raise InternalError(f"(det B)^2 = {value} is not a unit")
    return value


# duality


def dual_basis(b: Basis) -> Basis:
    """The unique basis {delta_j} with T(beta_i delta_j) = [i == j].

    Taken from row 0 of B^-1 = adj(B) / det(B), then checked against the trace
    pairing before it is returned.
    """
    ring = b.ring
    B = automorphism_matrix(b)
    try:
        Binv = gr_mat_inverse(B)
    except SingularOverGR:
        raise InternalError(f"automorphism matrix of {b!r} is singular") from None
    dual = check_basis(list(Binv.entries[0]), ring)
    if not is_dual_pair(b, dual):
        raise InternalError(f"adjugate construction did not give a trace-dual of {b!r}")
    return dual


def is_dual_pair(a: Basis, b: Basis) -> bool:
    """T(b_i a_j) = [i == j] for all i, j."""
    if a.ring != b.ring:
        raise RingMismatch("bases over different rings")
    ring = a.ring
    return all(
        ring.trace(x * y) == int(i == j) for i, x in enumerate(b.elements) for j, y in enumerate(a.elements)
    )


def is_self_dual(b: Basis) -> bool:
    return gram_matrix(b) == ZrMatrix.identity(b.ring.zr, b.ring.m)


def is_normal(b: Basis) -> bool:
    """True iff b is, in this order, (alpha, f(alpha), ..., f^(m-1)(alpha))."""
    ring = b.ring
    alpha = b.elements[0]
    return all(ring.frobenius_iter(alpha, k) == z for k, z in enumerate(b.elements))


def is_normal_as_set(b: Basis) -> bool:
    """Order-insensitive variant of :func:`is_normal`."""
    ring = b.ring
    target = sorted(b.elements)
    return any(sorted(ring.conjugates(alpha)) == target for alpha in b.elements)


def frobenius_is_cycle(b: Basis) -> bool:
    """f maps beta_i to beta_{i+1}, indices mod m."""
    ring, m = b.ring, len(b)
    return all(ring.frobenius(b[i]) == b[(i + 1) % m] for i in range(m))


def normal_closure(alpha: GrElem) -> Basis:
    """The f-orbit of ``alpha`` as a basis; :class:`NotABasis` if it is not one."""
    return check_basis(alpha.ring.conjugates(alpha), alpha.ring)


def search_normal_bases(ring: GaloisRing, limit: int | None = None, guard: int | None = None) -> list[GrElem]:
    """Normal-basis generators in lexicographic coefficient order, at most ``limit``."""
    out = []
    for alpha in ring.elements(guard):
        if limit is not None and len(out) >= limit:
            break
        if is_basis(ring.conjugates(alpha), ring):
            out.append(alpha)
    return out


def search_self_dual_bases(ring: GaloisRing, limit: int | None = None, guard: int | None = None) -> list[Basis]:
    """Self-dual bases listed as increasing tuples (one ordering per set).

    Depth-first over candidates with T(x^2) = 1 that are trace-orthogonal to
    the earlier choices, in lexicographic order.
    """
    cands = [z for z in ring.elements(guard) if ring.trace(z * z) == 1]
    out: list[Basis] = []

    def extend(chosen: list[GrElem], start: int):
        if limit is not None and len(out) >= limit:
            return
        if len(chosen) == ring.m:
            out.append(check_basis(chosen, ring))
            return
        for k in range(start, len(cands)):
            z = cands[k]
            if all(ring.trace(z * y) == 0 for y in chosen):
                extend(chosen + [z], k + 1)
                if limit is not None and len(out) >= limit:
                    return

    extend([], 0)
    return out


@dataclass(frozen=True)
class BasisReport:
    is_basis: bool
    is_self_dual: bool
    is_normal: bool
    det_B: GrElem
    det_B_squared: int
    dual: Basis
    automorphism: GrMatrix = field(repr=False)
    is_symmetric: bool = False
    is_orthogonal: bool = False

    def to_dict(self) -> dict:
        return {
            "is_basis": self.is_basis,
            "is_self_dual": self.is_self_dual,
            "is_normal": self.is_normal,
            "is_symmetric": self.is_symmetric,
            "is_orthogonal": self.is_orthogonal,
            "det_B": self.det_B.to_literal(),
            "det_B_squared": self.det_B_squared,
            "dual": self.dual.to_lists(),
            "automorphism_matrix": self.automorphism.to_lists(),
        }


def basis_report(b: Basis) -> BasisReport:
    B = automorphism_matrix(b)
    return BasisReport(
        is_basis=True,
        is_self_dual=is_self_dual(b),
        is_normal=is_normal(b),
        det_B=gr_mat_det(B),
        det_B_squared=det_b_squared(b),
        dual=dual_basis(b),
        automorphism=B,
        is_symmetric=B.is_symmetric(),
        is_orthogonal=B.is_orthogonal(),
    )
