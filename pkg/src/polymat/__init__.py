"""Interior and exterior polynomials of integer polymatroids.

The core objects are rank tables over {1..n} validated as polymatroid
rank functions, their lattice-point bases, and the two activity
polynomials those bases carry.  Frontends build the same objects from
graphs (cycle matroid), matroids (base lists), and hypergraphs
(incidence-rank function), and every computed quantity has a second,
independent route used by the verification suites.
"""

from .activity import (
    ActivityReport,
    DualityReport,
    InvarianceReport,
    activity,
    check_duality,
    check_permutation_invariance,
    exterior_by_slices,
    exterior_polynomial,
    interior_by_slices,
    interior_polynomial,
    point_set_polynomials,
    polynomial_pair,
)
from .core import (
    DEFAULT_MAX_GROUND_SET,
    MonotonicityError,
    NormalizationError,
    Polymatroid,
    RankTable,
    SizeLimitError,
    SubmodularityError,
    ValidationError,
    negate,
    translate,
)
from .documents import (
    GraphDocument,
    HypergraphDocument,
    InputDocument,
    MatroidDocument,
    ParseError,
    RankTableDocument,
    emit_document,
    parse_document,
)
from .graphs import CutFormulaReport, CutFormulaRow, Graph, cut_formula_check
from .hypergraphs import (
    GirthPrefixRow,
    Hypergraph,
    HypergraphStructureReport,
    double_cycle_threshold,
    printed_prefix_binomial,
    split_threshold,
    structure_report,
    two_component_families,
    unique_cycle_families,
)
from .matroids import (
    BaseExchangeError,
    DEFAULT_MAX_ELEMENTS,
    Matroid,
    MatroidPolynomialReport,
    TuttePolynomial,
    check_matroid_polynomials,
    tutte_polynomial,
)
from .polynomials import Polynomial
from .subsets import bit, complement, elements_of, full_mask, iter_masks, mask_of
from .structure import (
    FormulaRangeError,
    PrefixEquivalence,
    StructureSummary,
    binom,
    binomial_prefix_check,
    circuit_family,
    circuit_sets,
    closure,
    deficiency,
    deficiency_thresholds,
    exterior_coefficient_formula,
    exterior_formula_range,
    first_exterior_coefficients,
    flats,
    full_deficiency,
    hyperplane_sets,
    interior_coefficient_formula,
    interior_formula_range,
    is_flat,
    is_unimodal,
    rank_drop_thresholds,
    structure_summary,
)
from .verify import (
    CheckResult,
    verify_graph,
    verify_hypergraph,
    verify_matroid,
    verify_polymatroid,
)

__version__ = "0.1.0"

__all__ = [
    "ActivityReport",
    "BaseExchangeError",
    "CheckResult",
    "CutFormulaReport",
    "CutFormulaRow",
    "DEFAULT_MAX_ELEMENTS",
    "DEFAULT_MAX_GROUND_SET",
    "DualityReport",
    "FormulaRangeError",
    "GirthPrefixRow",
    "Graph",
    "GraphDocument",
    "Hypergraph",
    "HypergraphDocument",
    "HypergraphStructureReport",
    "InputDocument",
    "InvarianceReport",
    "Matroid",
    "MatroidDocument",
    "MatroidPolynomialReport",
    "MonotonicityError",
    "NormalizationError",
    "ParseError",
    "Polymatroid",
    "Polynomial",
    "PrefixEquivalence",
    "RankTable",
    "RankTableDocument",
    "SizeLimitError",
    "StructureSummary",
    "SubmodularityError",
    "TuttePolynomial",
    "ValidationError",
    "activity",
    "binom",
    "binomial_prefix_check",
    "bit",
    "complement",
    "elements_of",
    "full_mask",
    "iter_masks",
    "mask_of",
    "check_duality",
    "check_matroid_polynomials",
    "check_permutation_invariance",
    "circuit_family",
    "circuit_sets",
    "closure",
    "cut_formula_check",
    "deficiency",
    "deficiency_thresholds",
    "double_cycle_threshold",
    "emit_document",
    "exterior_by_slices",
    "exterior_coefficient_formula",
    "exterior_formula_range",
    "exterior_polynomial",
    "first_exterior_coefficients",
    "flats",
    "full_deficiency",
    "hyperplane_sets",
    "interior_by_slices",
    "interior_coefficient_formula",
    "interior_formula_range",
    "interior_polynomial",
    "is_flat",
    "is_unimodal",
    "negate",
    "parse_document",
    "point_set_polynomials",
    "polynomial_pair",
    "printed_prefix_binomial",
    "rank_drop_thresholds",
    "split_threshold",
    "structure_report",
    "structure_summary",
    "translate",
    "tutte_polynomial",
    "two_component_families",
    "unique_cycle_families",
    "verify_graph",
    "verify_hypergraph",
    "verify_matroid",
    "verify_polymatroid",
]
