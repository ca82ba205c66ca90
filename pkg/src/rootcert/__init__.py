"""Exact root-subset certificates for 2 rho and L^p exponent ranges of solvable groups."""

from .arith import DimensionError, DomainError, cone_is_trivial, rank, solve_strict_positive
from .psi import (
    PsiCertificate,
    VerificationReport,
    construct_certificate,
    lemma_S,
    search_certificate,
    verify_certificate,
)
from .real_forms import RealFormClass, make_class, two_rho, weighted_datum
from .roots import RootSystem, build, is_root, norm_class_sum
from .spectral import (
    SolvableDatum,
    WeightEntry,
    check_condition1,
    check_nC,
    check_nT,
    dual_exponent,
    exponent_report,
    iwasawa_datum,
    spectral_profile,
)

__all__ = [
    "DimensionError", "DomainError", "cone_is_trivial", "rank", "solve_strict_positive",
    "PsiCertificate", "VerificationReport", "construct_certificate", "lemma_S", "search_certificate",
    "verify_certificate", "RealFormClass", "make_class", "two_rho", "weighted_datum", "RootSystem",
    "build", "is_root", "norm_class_sum", "SolvableDatum", "WeightEntry", "check_condition1", "check_nC",
    "check_nT", "dual_exponent", "exponent_report", "iwasawa_datum", "spectral_profile",
]
