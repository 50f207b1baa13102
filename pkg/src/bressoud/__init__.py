"""Overpartition analogues of Bressoud's identities: predicates, bands, bijection, products."""
from .bands import Band, BandType, Parity, Window, band_parity, band_type, find_bands, g_of
from .bijection import Action, BijectionResult, PsiResult, TraceStep, augment, phi, psi, reduce
from .errors import BressoudError
from .families import WindowKind, classify_window, member
from .params import Family, FamilyParams
from .parts import INF, Overpartition, Part, parse_overpartition, parse_partition
from .qseries import TruncatedSeries, gf_A0bar, gf_B0bar_product, gf_Bj, product_factor
from .verify import Identity, VerifyReport, count_family, enumerate_family, roundtrip_check, verify_identity

__version__ = "0.1.0"

__all__ = [
    "Action",
    "Band",
    "BandType",
    "BijectionResult",
    "BressoudError",
    "Family",
    "FamilyParams",
    "INF",
    "Identity",
    "Overpartition",
    "Parity",
    "Part",
    "PsiResult",
    "TraceStep",
    "TruncatedSeries",
    "VerifyReport",
    "Window",
    "WindowKind",
    "augment",
    "band_parity",
    "band_type",
    "classify_window",
    "count_family",
    "enumerate_family",
    "find_bands",
    "g_of",
    "gf_A0bar",
    "gf_B0bar_product",
    "gf_Bj",
    "member",
    "parse_overpartition",
    "parse_partition",
    "phi",
    "product_factor",
    "psi",
    "reduce",
    "roundtrip_check",
    "verify_identity",
]
