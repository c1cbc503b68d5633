"""Weak-commutativity algebras and Schur multipliers over Q."""

from .catalog import (
    BUILDERS,
    ENTRIES,
    CatalogEntry,
    abelian,
    build,
    free_nilpotent,
    heisenberg,
    listing,
    paper_example_1,
    sl2,
    upper_triangular_nil,
)
from .chi import (
    ChiAlgebra,
    chi_presentation,
    compute_chi,
    compute_chi_superperfect,
    image_rho_subspace,
    predicted_rho_image,
)
from .errors import (
    AmbientMismatch,
    BadParams,
    BudgetExceeded,
    ChiLieError,
    ConsistencyFailure,
    DimensionMismatch,
    IndexOutOfRange,
    InputMismatch,
    InvalidAlgebra,
    NonvanishingH2,
    NotAnIdeal,
    NotGenerating,
    NotNilpotent,
    NotPerfect,
    NotStabilized,
    NotWellDefined,
    UnknownName,
)
from .freelie import (
    BracketExpr,
    FreeNilpotentAlgebra,
    LyndonElement,
    build_free_nilpotent,
    eval_expr,
    eval_in_algebra,
    lyndon_basis,
    lyndon_words,
    normal_form,
    standard_factorization,
    witt_dim,
)
from .homology import (
    ExteriorSquare,
    HomologyReport,
    compute_homology,
    exterior_square,
    h1,
    h2_ce,
    h2_hopf,
    schur_via_exterior,
    stem_extension,
)
from .liealg import (
    LieAlgebra,
    LieHom,
    center,
    derived_subalgebra,
    direct_sum,
    hom_from_generator_images,
    ideal_closure,
    is_abelian,
    is_nilpotent,
    is_perfect,
    lower_central_series,
    nilpotency_class,
    quotient,
    subalgebra_closure,
    validate,
)
from .linalg import (
    Matrix,
    SparseEchelon,
    Subspace,
    complement_coords,
    format_rational,
    intersect,
    kernel,
    rank,
    rref,
)
from .nilquot import (
    Presentation,
    QuotientResult,
    class_quotient,
    eliminate_redundant_generators,
    stable_quotient,
    structure_presentation,
)
from .verify import CheckResult, VerificationReport, run_checks

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BUILDERS",
    "BadParams",
    "BracketExpr",
    "BudgetExceeded",
    "CatalogEntry",
    "CheckResult",
    "ChiAlgebra",
    "ChiLieError",
    "ConsistencyFailure",
    "DimensionMismatch",
    "ENTRIES",
    "ExteriorSquare",
    "FreeNilpotentAlgebra",
    "HomologyReport",
    "IndexOutOfRange",
    "InputMismatch",
    "InvalidAlgebra",
    "LieAlgebra",
    "LieHom",
    "LyndonElement",
    "Matrix",
    "NonvanishingH2",
    "NotAnIdeal",
    "NotGenerating",
    "NotNilpotent",
    "NotPerfect",
    "NotStabilized",
    "NotWellDefined",
    "Presentation",
    "QuotientResult",
    "SparseEchelon",
    "Subspace",
    "UnknownName",
    "VerificationReport",
    "abelian",
    "build",
    "build_free_nilpotent",
    "center",
    "chi_presentation",
    "class_quotient",
    "complement_coords",
    "compute_chi",
    "compute_chi_superperfect",
    "compute_homology",
    "derived_subalgebra",
    "direct_sum",
    "eliminate_redundant_generators",
    "eval_expr",
    "eval_in_algebra",
    "exterior_square",
    "format_rational",
    "free_nilpotent",
    "h1",
    "h2_ce",
    "h2_hopf",
    "heisenberg",
    "hom_from_generator_images",
    "ideal_closure",
    "image_rho_subspace",
    "intersect",
    "is_abelian",
    "is_nilpotent",
    "is_perfect",
    "kernel",
    "listing",
    "lower_central_series",
    "lyndon_basis",
    "lyndon_words",
    "nilpotency_class",
    "normal_form",
    "paper_example_1",
    "predicted_rho_image",
    "quotient",
    "rank",
    "rref",
    "run_checks",
    "schur_via_exterior",
    "sl2",
    "stable_quotient",
    "standard_factorization",
    "stem_extension",
    "structure_presentation",
    "subalgebra_closure",
    "upper_triangular_nil",
    "validate",
    "witt_dim",
    "__version__",
]
