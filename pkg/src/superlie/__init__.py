"""Exact-arithmetic toolkit for free Lie superalgebras.

Super-Lyndon-Shirshov word combinatorics, bracketings and their expansions,
rewriting with composition closure checking, and construction/verification
of extensions of finite-dimensional Lie superalgebras by a stable letter.
Everything works over exact rationals; no floating point anywhere.
"""

from .words import (
    EQ,
    GT,
    LT,
    Alphabet,
    Symbol,
    Word,
    deglex_cmp,
    deglex_key,
    enumerate_super_ls,
    is_lyndon_shirshov,
    is_super_ls,
    lex_cmp,
)
from .poly import EVEN, MIXED, ODD, Poly, parse_poly, poly_to_text, scale, superbracket
from .bracketing import (
    NcMonomial,
    expand,
    forget,
    is_admissible,
    is_ls_monomial,
    is_super_ls_monomial,
    parse_monomial,
    right_normed_bracket,
    standard_bracket,
)
from .linalg import is_unitriangular, rank
from .rewrite import (
    LARGEST_LEFTMOST,
    SMALLEST_RIGHTMOST,
    CompositionCheck,
    GsbReport,
    ReductionStep,
    ReductionTrace,
    RewriteRule,
    RewriteSystem,
    assoc_compositions,
    enumerate_reduced_super_ls,
    is_gsb,
    is_reduced_word,
    lie_composition_len2,
    reduce,
)
from .hnn import (
    HnnGsbReport,
    HnnPresentation,
    LieCompositionCheck,
    PbwPattern,
    StructureConstants,
    StructureLengthCheck,
    StructureReport,
    ValidationReport,
    Violation,
    build_relations,
    enumerate_h_basis,
    enumerate_pbw_patterns,
    enumerate_uh_basis,
    free_generators_W,
    load_presentation,
    presentation_to_dict,
    validate,
    verify_hnn_gsb,
    verify_structure_theorem,
)
from . import fixtures

__all__ = [
    "Alphabet",
    "CompositionCheck",
    "EQ",
    "EVEN",
    "GT",
    "GsbReport",
    "HnnGsbReport",
    "HnnPresentation",
    "LARGEST_LEFTMOST",
    "LT",
    "LieCompositionCheck",
    "MIXED",
    "NcMonomial",
    "ODD",
    "PbwPattern",
    "Poly",
    "ReductionStep",
    "ReductionTrace",
    "RewriteRule",
    "RewriteSystem",
    "SMALLEST_RIGHTMOST",
    "StructureConstants",
    "StructureLengthCheck",
    "StructureReport",
    "Symbol",
    "ValidationReport",
    "Violation",
    "Word",
    "assoc_compositions",
    "build_relations",
    "deglex_cmp",
    "deglex_key",
    "enumerate_h_basis",
    "enumerate_pbw_patterns",
    "enumerate_reduced_super_ls",
    "enumerate_super_ls",
    "enumerate_uh_basis",
    "expand",
    "fixtures",
    "forget",
    "free_generators_W",
    "is_admissible",
    "is_gsb",
    "is_ls_monomial",
    "is_lyndon_shirshov",
    "is_reduced_word",
    "is_super_ls",
    "is_super_ls_monomial",
    "is_unitriangular",
    "lex_cmp",
    "lie_composition_len2",
    "load_presentation",
    "parse_monomial",
    "parse_poly",
    "poly_to_text",
    "presentation_to_dict",
    "rank",
    "reduce",
    "right_normed_bracket",
    "scale",
    "standard_bracket",
    "superbracket",
    "validate",
    "verify_hnn_gsb",
    "verify_structure_theorem",
]
