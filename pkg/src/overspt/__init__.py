"""Exact q-series verification for overpartitions with repeated smallest non-overlined part."""

from .enumeration import CountFunction, Overpartition, classify, count, enumerate_overpartitions
from .genfun import AuxName, SptKind, aux_gf, gf_definitional, rhs_theorem
from .qproducts import Monomial, pochhammer_finite, pochhammer_infinite
from .series import Series
from .verify import IdentityId, VerificationReport, verify_all, verify_identity

__version__ = "0.1.0"

__all__ = [
    "AuxName",
    "CountFunction",
    "IdentityId",
    "Monomial",
    "Overpartition",
    "Series",
    "SptKind",
    "VerificationReport",
    "aux_gf",
    "classify",
    "count",
    "enumerate_overpartitions",
    "gf_definitional",
    "pochhammer_finite",
    "pochhammer_infinite",
    "rhs_theorem",
    "verify_all",
    "verify_identity",
]
