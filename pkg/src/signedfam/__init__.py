"""Intersecting families of signed sets.

Canonical types and operations, shadow machinery, an explicit verified
injection of any in-range intersecting family into the star at (1, 1),
and exact brute-force search oracles confirming the extremal bound
r^(k-1) * C(n-1, k-1) at desk scale.
"""

from .core import (
    DEFAULT_CAP,
    Pair,
    Params,
    PlainFamily,
    PlainSet,
    SignedFamily,
    SignedSet,
    bound_value,
    intersects,
    is_intersecting,
    make_signed_set,
    mod_one_based,
    shift_signs,
    shift_signs_family,
    star,
    support,
    universe,
)
from .injection import (
    CertificateReport,
    InjectionCertificate,
    MatchingResult,
    Partition,
    assemble_injection,
    build_supports,
    complements_in_tail,
    match_to_shadow,
    partition_family,
    sign_assign,
    signed_versions,
    strip_first,
    verify_certificate,
)
from .search import (
    DEFAULT_NODE_BUDGET,
    BoundReport,
    SearchResult,
    SplitMix64,
    enumerate_maximal_intersecting,
    max_intersecting_exact,
    random_maximal_intersecting,
    verify_bound,
)
from .shadow import KatonaReport, katona_check, min_pairwise_intersection, shadow_to
from . import errors, jsonl

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_NODE_BUDGET",
    "BoundReport",
    "CertificateReport",
    "InjectionCertificate",
    "KatonaReport",
    "MatchingResult",
    "Pair",
    "Params",
    "Partition",
    "PlainFamily",
    "PlainSet",
    "SearchResult",
    "SignedFamily",
    "SignedSet",
    "SplitMix64",
    "assemble_injection",
    "bound_value",
    "build_supports",
    "complements_in_tail",
    "enumerate_maximal_intersecting",
    "errors",
    "intersects",
    "is_intersecting",
    "jsonl",
    "katona_check",
    "make_signed_set",
    "match_to_shadow",
    "max_intersecting_exact",
    "min_pairwise_intersection",
    "mod_one_based",
    "partition_family",
    "random_maximal_intersecting",
    "shadow_to",
    "shift_signs",
    "shift_signs_family",
    "sign_assign",
    "signed_versions",
    "star",
    "strip_first",
    "support",
    "universe",
    "verify_bound",
    "verify_certificate",
]
