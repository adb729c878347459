"""Exact arithmetic in Galois rings GR(p^r, m) and their bases over Z_{p^r}."""

from .bases import (
    Basis,
    BasisReport,
    GrMatrix,
    all_bases,
    automorphism_matrix,
    basis_report,
    check_basis,
    coordinates,
    det_b_squared,
    dual_basis,
    gram_matrix,
    is_dual_pair,
    is_normal,
    is_normal_as_set,
    is_self_dual,
    normal_closure,
    polynomial_basis,
    search_normal_bases,
    search_self_dual_bases,
    vandermonde_omega,
)
from .codes import (
    LinearCode,
    ZrCode,
    code_enumerate,
    code_image,
    code_weight_stats,
    homogeneity_check,
    lemma3_check,
    proposition_sum,
    tau_image,
    whom,
    whom_character_oracle,
    whom_zr,
)
from .errors import GaloisRingError, MathError, NotABasis, NotAUnit, UsageError
from .galois import GaloisRing, GrElem
from .modring import ZrMatrix, ZrModulus, zr_inverse, zr_mat_det, zr_mat_inverse
from .polyring import Poly, PolyClass, classify, find_basic_primitive, hensel_lift_primitive, mu_reduce

__version__ = "0.1.0"
