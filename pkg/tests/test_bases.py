import itertools
import random

import pytest

from galring import GaloisRing
from galring import bases as bs
from galring.bases import GrMatrix
from galring.errors import NotABasis, RingMismatch, SingularOverGR, WrongCardinality
from galring.modring import ZrMatrix
from oracles import RefRing


def E(ring, *coeffs):
    return ring(list(coeffs))


@pytest.fixture(scope="module")
def normal42(gr4_2):
    return bs.check_basis([gr4_2.omega, E(gr4_2, 3, 3)])


@pytest.fixture(scope="module")
def sdn43(gr4_3):
    return bs.check_basis([E(gr4_3, 1, 1, 0), E(gr4_3, 1, 0, 1), E(gr4_3, 3, 3, 3)])


def test_check_basis_examples(gr4_2, normal42):
    assert bs.polynomial_basis(gr4_2).coordinate_matrix == ZrMatrix.identity(gr4_2.zr, 2)
    assert len(normal42) == 2
    with pytest.raises(NotABasis):
        bs.check_basis([gr4_2.one, E(gr4_2, 0, 2)])
    with pytest.raises(WrongCardinality):
        bs.check_basis([gr4_2.one])
    with pytest.raises(WrongCardinality):
        bs.check_basis([gr4_2.one, gr4_2.omega, gr4_2.omega])


def test_basis_iff_span_is_everything(gr4_2):
    # The unit-determinant test agrees with an explicit span computation.
    elems = list(gr4_2.elements())
    for a, b in itertools.product(elems, repeat=2):
        spans = len(bs.span([a, b], gr4_2)) == gr4_2.order
        assert bs.is_basis([a, b], gr4_2) == spans


def test_all_bases_count(gr4_2):
    assert sum(1 for _ in bs.all_bases(gr4_2)) == 96  # |GL_2(Z_4)|


def test_coordinates_examples(gr4_2, normal42):
    assert bs.coordinates(E(gr4_2, 3, 2), bs.polynomial_basis(gr4_2)) == (3, 2)
    assert bs.coordinates(gr4_2.one, normal42) == (3, 3)
    for i, z in enumerate(normal42):
        assert bs.coordinates(z, normal42) == tuple(int(i == j) for j in range(2))


@pytest.mark.parametrize("spec", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_coordinates_reconstruct(spec):
    ring = GaloisRing(*spec)
    rng = random.Random(1)
    for _ in range(5):
        b = bs.random_basis(ring, rng)
        for z in ring.elements():
            coords = bs.coordinates(z, b)
            acc = ring.zero
            for a, beta in zip(coords, b):
                acc = acc + a * beta
            assert acc == z == bs.from_coordinates(coords, b)


def test_automorphism_matrix_examples(gr4_2, gr4_3, normal42):
    w = gr4_2.omega
    assert bs.automorphism_matrix(bs.polynomial_basis(gr4_2)) == GrMatrix(gr4_2, [[1, 1], [w, E(gr4_2, 3, 3)]])
    v = gr4_3.omega
    assert bs.automorphism_matrix(bs.polynomial_basis(gr4_3)) == GrMatrix(
        gr4_3, [[1, 1, 1], [v, v**2, v**4], [v**2, v**4, v]]
    )
    assert bs.automorphism_matrix(normal42) == GrMatrix(gr4_2, [[w, E(gr4_2, 3, 3)], [E(gr4_2, 3, 3), w]])


def test_gr4_2_inverse_and_dual(gr4_2):
    R = gr4_2
    B = bs.automorphism_matrix(bs.polynomial_basis(R))
    assert B.det() == E(R, 3, 2) and B.det().is_unit()
    assert B.inverse() == GrMatrix(R, [[E(R, 3, 1), E(R, 1, 2)], [E(R, 2, 3), E(R, 3, 2)]])
    assert (B @ B.inverse()).is_identity()
    dual = bs.dual_basis(bs.polynomial_basis(R))
    assert dual.to_lists() == [[3, 1], [1, 2]]
    assert bs.det_b_squared(bs.polynomial_basis(R)) == 1


def test_gr4_3_polynomial_dual(gr4_3):
    b = bs.polynomial_basis(gr4_3)
    assert bs.automorphism_matrix(b).det() == 3
    assert bs.dual_basis(b).to_lists() == [[3, 2, 2], [2, 2, 1], [2, 1, 2]]
    assert bs.det_b_squared(b) == 1


def test_gr8_3_polynomial_dual(gr8_3):
    assert gr8_3.h.coeffs == (7, 5, 6, 1)
    assert bs.dual_basis(bs.polynomial_basis(gr8_3)).to_lists() == [[3, 6, 6], [6, 2, 5], [6, 5, 2]]


def test_normal_not_self_dual(normal42):
    assert bs.is_normal(normal42)
    assert not bs.is_self_dual(normal42)
    assert not bs.automorphism_matrix(normal42).is_orthogonal()
    assert bs.automorphism_matrix(normal42).is_symmetric()


def test_self_dual_normal(gr4_3, sdn43):
    assert bs.is_self_dual(sdn43) and bs.is_normal(sdn43)
    assert bs.is_dual_pair(sdn43, sdn43)
    assert bs.automorphism_matrix(sdn43).is_orthogonal()
    assert bs.normal_closure(E(gr4_3, 1, 1)) == sdn43
    assert bs.det_b_squared(sdn43) == 1


def test_is_dual_pair_examples(gr4_2, gr8_2):
    poly = bs.polynomial_basis(gr4_2)
    assert bs.is_dual_pair(poly, bs.check_basis([E(gr4_2, 3, 1), E(gr4_2, 1, 2)]))
    assert not bs.is_dual_pair(poly, poly)
    assert not bs.is_self_dual(poly)
    with pytest.raises(RingMismatch):
        bs.is_dual_pair(poly, bs.polynomial_basis(gr8_2))


def test_gr_matrix_inverse_errors(gr4_2):
    M = GrMatrix(gr4_2, [[2, 0], [0, 1]])
    with pytest.raises(SingularOverGR):
        M.inverse()
    I = GrMatrix.identity(gr4_2, 2)
    assert I.inverse() == I


def test_gr_det_matches_leibniz(gr4_3):
    rng = random.Random(4)
    elems = list(gr4_3.elements())
    for _ in range(20):
        rows = [[rng.choice(elems) for _ in range(3)] for _ in range(3)]
        leib = gr4_3.zero
        for perm in itertools.permutations(range(3)):
            sign = 1
            for i, j in itertools.combinations(range(3), 2):
                if perm[i] > perm[j]:
                    sign = -sign
            term = gr4_3(sign)
            for i in range(3):
                term = term * rows[i][perm[i]]
            leib = leib + term
        assert GrMatrix(gr4_3, rows).det() == leib


@pytest.mark.parametrize("spec", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (2, 2, 4)])
def test_vandermonde(spec):
    ring = GaloisRing(*spec)
    omega = bs.vandermonde_omega(ring)
    assert omega == bs.automorphism_matrix(bs.polynomial_basis(ring))
    assert omega.det() == bs.vandermonde_det_product(ring)
    assert omega.det().is_unit()
    assert all(f.is_unit() for f in bs.vandermonde_factors(ring))


def test_vandermonde_gr4_2_det(gr4_2):
    assert bs.vandermonde_omega(gr4_2).det() == E(gr4_2, 3, 2)


@pytest.mark.parametrize("spec", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_ab_equals_omega_and_gram(spec):
    ring = GaloisRing(*spec)
    rng = random.Random(2)
    omega = bs.vandermonde_omega(ring)
    for _ in range(10):
        b = bs.random_basis(ring, rng)
        B = bs.automorphism_matrix(b)
        A = GrMatrix(ring, [bs.coordinates(ring.omega_power(i), b) for i in range(ring.m)])
        assert A @ B == omega
        BBt = B @ B.T
        assert BBt.is_scalar_matrix()
        assert BBt.to_zr() == bs.gram_matrix(b)
        assert ring.zr.is_unit(bs.det_b_squared(b))
        assert bs.det_b_squared(b) == bs.gram_matrix(b).det()


def test_dual_involution_exhaustive(gr4_2):
    for b in bs.all_bases(gr4_2):
        d = bs.dual_basis(b)
        assert bs.is_dual_pair(b, d)
        assert bs.dual_basis(d) == b


@pytest.mark.parametrize("spec", [(2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_dual_involution_sampled(spec):
    ring = GaloisRing(*spec)
    rng = random.Random(3)
    for _ in range(20):
        b = bs.random_basis(ring, rng)
        d = bs.dual_basis(b)
        assert bs.is_dual_pair(b, d) and bs.dual_basis(d) == b


def test_dual_matches_reference_gram_inverse(gr4_3):
    # an independent route: delta_j solves sum_k T(beta_i beta_k) c_jk = [i == j]
    ref = RefRing(2, 2, list(gr4_3.h.coeffs))
    rng = random.Random(8)
    for _ in range(10):
        b = bs.random_basis(gr4_3, rng)
        G = [[ref.trace(ref.mul(x.coeffs, y.coeffs)) for y in b] for x in b]
        Ginv = ZrMatrix(gr4_3.zr, G).inverse()
        expected = [bs.from_coordinates(Ginv.entries[j], b) for j in range(3)]
        assert list(bs.dual_basis(b).elements) == expected


def test_characterizations_exhaustive_gr4_2(gr4_2):
    for b in bs.all_bases(gr4_2):
        B = bs.automorphism_matrix(b)
        assert bs.is_self_dual(b) == (B @ B.T).is_identity() == B.is_orthogonal()
        assert bs.is_normal(b) == B.is_symmetric() == bs.frobenius_is_cycle(b)


def test_characterizations_normal_bases_gr4_3(gr4_3):
    gens = bs.search_normal_bases(gr4_3)
    assert gens
    for alpha in gens:
        b = bs.normal_closure(alpha)
        B = bs.automorphism_matrix(b)
        assert bs.is_normal(b) and B.is_symmetric() and bs.frobenius_is_cycle(b)
        assert bs.is_self_dual(b) == B.is_orthogonal()


def test_normal_is_order_sensitive(normal42, gr4_2):
    swapped = bs.check_basis([E(gr4_2, 3, 3), gr4_2.omega])
    assert bs.is_normal(swapped)  # (w^2, w^4 = w) is still an orbit in order
    poly = bs.polynomial_basis(gr4_2)
    assert not bs.is_normal(poly) and not bs.is_normal_as_set(poly)


def test_normal_order_sensitive_gr4_3(sdn43, gr4_3):
    a, b, c = sdn43.elements
    shuffled = bs.check_basis([a, c, b])
    assert not bs.is_normal(shuffled)
    assert bs.is_normal_as_set(shuffled)


def test_normal_search(gr4_2, gr4_3):
    gens = bs.search_normal_bases(gr4_2)
    assert gr4_2.omega in gens and gr4_2.one not in gens
    assert gens == sorted(gens)
    assert bs.search_normal_bases(gr4_2, limit=1) == gens[:1]
    assert E(gr4_3, 1, 1) in bs.search_normal_bases(gr4_3)
    with pytest.raises(NotABasis):
        bs.normal_closure(gr4_2.one)


def test_self_dual_search(gr4_3, sdn43, gr4_2):
    found = bs.search_self_dual_bases(gr4_3)
    assert all(bs.is_self_dual(b) for b in found)
    assert bs.check_basis(sorted(sdn43.elements)) in found
    # GR(4,2) has no self-dual basis: T(x^2) is always even there
    assert bs.search_self_dual_bases(gr4_2) == []


def test_report(gr4_2):
    rep = bs.basis_report(bs.polynomial_basis(gr4_2)).to_dict()
    assert rep["is_basis"] and rep["det_B"] == "3,2" and rep["dual"] == [[3, 1], [1, 2]]
    assert rep["det_B_squared"] == 1 and not rep["is_normal"] and not rep["is_self_dual"]
