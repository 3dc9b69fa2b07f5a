"""Exact computation in skew PBW extensions and their quantum Laurent
localizations.

An algebra is described by a Presentation: n generators over a rational
function field, the first r of them invertible, with quadratic relations
x_j x_i = q_ij x_i x_j + c0_ij + sum_t c1_ij^t x_t.  Elements are kept in
a canonical normal form (scalar combinations of sorted monomials) and all
arithmetic is exact.  On top of the rewriting core the package computes
with twisted derivations (check, adjoint preimages, inner-plus-toric
decomposition) and Poisson brackets (axiom verification and classification
as a scalar multiple of the commutator), and ships a small catalog of
standard quantum algebras plus a file format and CLI tying it together.
"""

from .algebra import (
    Element,
    Presentation,
    deglex_compare,
    deglex_key,
    validate_presentation,
)
from .catalog import (
    CatalogEntry,
    build_example,
    eligible_purposes,
    example_entry,
    list_examples,
)
from .derivations import (
    GammaDerivation,
    ToricAutomorphism,
    adjoint_preimage,
    apply_derivation,
    check_derivation,
    decompose_derivation,
    inner_apply,
    inner_derivation,
    validate_automorphism,
)
from .errors import (
    AllCommutatorsZero,
    DecompositionFailure,
    DivisionByZero,
    ExprSyntaxError,
    FileFormatError,
    HypothesisViolation,
    InvalidOptions,
    NDependenceViolation,
    NotClassifiable,
    NotInvertible,
    SkewPBWError,
    UnknownExample,
    UnknownSymbol,
    UnsupportedRelation,
    ValidationFailure,
    ZeroElement,
)
from .exprs import format_element, parse_element, parse_scalar
from .files import (
    read_bracket,
    read_derivation,
    read_presentation,
    write_bracket,
    write_derivation,
    write_presentation,
)
from .poisson import (
    ClassificationResult,
    GeneratorBracket,
    VerifyReport,
    bracket_eval,
    classify_bracket,
    laurent_extend,
    localize_presentation,
    verify_poisson,
)
from .rewrite import (
    RewriteEngine,
    check_overlaps,
    commutator,
    derive_swap,
    monomial_inverse,
    multiply,
)
from .scalars import Scalar, ScalarField, scalar_field

__all__ = [
    "AllCommutatorsZero",
    "CatalogEntry",
    "ClassificationResult",
    "DecompositionFailure",
    "DivisionByZero",
    "Element",
    "ExprSyntaxError",
    "FileFormatError",
    "GammaDerivation",
    "GeneratorBracket",
    "HypothesisViolation",
    "InvalidOptions",
    "NDependenceViolation",
    "NotClassifiable",
    "NotInvertible",
    "Presentation",
    "RewriteEngine",
    "Scalar",
    "ScalarField",
    "SkewPBWError",
    "ToricAutomorphism",
    "UnknownExample",
    "UnknownSymbol",
    "UnsupportedRelation",
    "ValidationFailure",
    "VerifyReport",
    "ZeroElement",
    "adjoint_preimage",
    "apply_derivation",
    "bracket_eval",
    "build_example",
    "check_derivation",
    "check_overlaps",
    "classify_bracket",
    "commutator",
    "decompose_derivation",
    "deglex_compare",
    "deglex_key",
    "derive_swap",
    "eligible_purposes",
    "example_entry",
    "format_element",
    "inner_apply",
    "inner_derivation",
    "laurent_extend",
    "list_examples",
    "localize_presentation",
    "monomial_inverse",
    "multiply",
    "parse_element",
    "parse_scalar",
    "read_bracket",
    "read_derivation",
    "read_presentation",
    "scalar_field",
    "validate_automorphism",
    "validate_presentation",
    "verify_poisson",
    "write_bracket",
    "write_derivation",
    "write_presentation",
]
