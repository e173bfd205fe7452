"""Exact-arithmetic construction, verification and classification of the
finite-dimensional modules R_d(a,b,c) of the Racah algebra."""

from .analyzer import (
    AnalysisReport,
    ConsistencyError,
    IdentifyResult,
    IsoResult,
    analyze,
    diagonalizable,
    identify,
    irreducible_criterion,
    irreducible_oracle,
    isomorphic,
    l_matrix,
)
from .linalg import (
    Subspace,
    eigenspace,
    intertwiner_space,
    invertible,
    kernel,
    minimal_polynomial,
    rank,
    rref,
    spin,
)
from .matrix import Mat, ShapeError, commutator
from .modules import ModuleRep, RelationReport, build_R, verify_relations
from .params import (
    ALL_FLIPS,
    IDENTITY_FLIP,
    ParamTriple,
    Scalars,
    SignFlip,
    Witness,
    act,
    canonical,
    in_P,
    phi,
    scalars,
    theta,
    theta_star,
    trace_formula,
    varphi,
)
from .poly import Poly, poly_gcd, rational_roots, squarefree
from .rational import Rat, format_rat, parse_rat, rat
from .rewriter import (
    FreeElement,
    NormalElement,
    ParseError,
    RewriteLimitError,
    eliminate,
    evaluate,
    format_element,
    normal_form,
    parse,
)
from .verma import VermaTruncation, build_verma, verma_checks
from .golden import golden_example

__version__ = "0.1.0"

__all__ = [
    "ALL_FLIPS",
    "AnalysisReport",
    "ConsistencyError",
    "FreeElement",
    "IDENTITY_FLIP",
    "IdentifyResult",
    "IsoResult",
    "Mat",
    "ModuleRep",
    "NormalElement",
    "ParamTriple",
    "ParseError",
    "Poly",
    "Rat",
    "RelationReport",
    "RewriteLimitError",
    "Scalars",
    "ShapeError",
    "SignFlip",
    "Subspace",
    "VermaTruncation",
    "Witness",
    "act",
    "analyze",
    "build_R",
    "build_verma",
    "canonical",
    "commutator",
    "diagonalizable",
    "eigenspace",
    "eliminate",
    "evaluate",
    "format_element",
    "format_rat",
    "golden_example",
    "identify",
    "in_P",
    "intertwiner_space",
    "invertible",
    "irreducible_criterion",
    "irreducible_oracle",
    "isomorphic",
    "kernel",
    "l_matrix",
    "minimal_polynomial",
    "normal_form",
    "parse",
    "parse_rat",
    "phi",
    "poly_gcd",
    "rank",
    "rat",
    "rational_roots",
    "rref",
    "scalars",
    "spin",
    "squarefree",
    "theta",
    "theta_star",
    "trace_formula",
    "varphi",
    "verify_relations",
    "verma_checks",
]
