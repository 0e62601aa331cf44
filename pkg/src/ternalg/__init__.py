"""Exact verification of ternary hom-algebra structures."""

from .scalars import (
    BACKEND,
    QuadScalar,
    RadicandMismatch,
    ScalarParseError,
    format_scalar,
    parse_scalar,
)
from .report import LawReport, Report, Violation
from .algebra import (
    NotEndomorphism,
    PreconditionNotClassical,
    TernaryHomAlgebra,
    check_algebra_morphism,
    classical,
    is_algebra_isomorphism,
)
from .coalgebra import (
    TernaryHomCoalgebra,
    check_coalgebra_morphism,
    classical_coalgebra,
    is_coalgebra_isomorphism,
    tensor3_map,
)
from .duality import dualize_algebra, dualize_coalgebra, dualize_linear_map
from .trimodule import (
    BihomModule,
    NotMultiplicative,
    TrimoduleActions,
    check_trimodule,
    regular_actions,
    semidirect_product,
)
from .matched_pair import (
    MatchedPairData,
    bicrossed_product,
    check_matched_pair,
)
from .bialgebra import (
    MismatchedStructures,
    TernaryBialgebra,
    bialgebra,
    check_bialgebra,
    check_bialgebra_equivalence,
    check_compatibility,
    check_compatibility_sigma_form,
    compatibility_identity_check,
    dualize_bialgebra,
    is_bialgebra_equivalence,
    sign_variant,
)
from .serialization import (
    ModuleBundle,
    StructureFileError,
    dump_file,
    dump_structure,
    dump_text,
    load_file,
    load_structure,
)

__version__ = "0.1.0"
