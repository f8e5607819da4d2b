__version__ = "0.1.0"

from hilbert_growth.binomial_calculus import (
    BinomialExpansion,
    HilbertPolynomial,
    HVector,
    binomial,
    curve_degree_bound,
    gotzmann_values,
    green_bound,
    growth_gap,
    hilbert_polynomial_from_expansion,
    is_o_sequence,
    macaulay_bound,
    macaulay_expand,
    mg_dimension,
)
from hilbert_growth.constructions import (
    ConstructionRecipe,
    build_plane_regime,
    build_prop_4_4,
    designed_plane,
    example_3_3,
    example_4_6,
    general_points,
    line_grid,
    points_on_lines,
    points_on_plane_curve,
    truncate_hvector,
)
from hilbert_growth.errors import (
    GenericityError,
    HilbertGrowthError,
    HilbertGrowthFormatError,
    HilbertGrowthValueError,
    HilbertGrowthWindowError,
    HypothesisError,
    TheoremViolationError,
)
from hilbert_growth.exact_algebra import Form, LinearSubspace, form_gcd
from hilbert_growth.graded_ideals import (
    BaseLocusProfile,
    BaseLocusStatus,
    GradedSpan,
    MonomialIdeal,
    base_locus_profile,
    basepoint_free_check,
    colon_span,
    hilbert_polynomial_fit,
    lex_segment_ideal,
    min_generator_count,
    prop61_tail_check,
    restriction_dimension,
    socle_dimension,
    span_from_generators,
    span_from_monomial_ideal,
)
from hilbert_growth.growth_classifier import (
    GrowthRegime,
    GrowthReport,
    bounds_report,
    classify,
    classify_points,
    colon_table,
    theorem_31_pattern,
    verify_prediction,
)
from hilbert_growth.plane_finder import (
    PlaneCertificate,
    annihilator_line,
    check_hypotheses,
    find_plane,
)
from hilbert_growth.point_geometry import (
    ArtinianReduction,
    PointSet,
    artinian_reduction,
    davis_decompose,
    h_vector,
    hf_points,
    multiplication_pencil,
    points_span,
)

__all__ = [
    "ArtinianReduction",
    "BaseLocusProfile",
    "BaseLocusStatus",
    "BinomialExpansion",
    "ConstructionRecipe",
    "Form",
    "GenericityError",
    "GradedSpan",
    "GrowthRegime",
    "GrowthReport",
    "HVector",
    "HilbertGrowthError",
    "HilbertGrowthFormatError",
    "HilbertGrowthValueError",
    "HilbertGrowthWindowError",
    "HilbertPolynomial",
    "HypothesisError",
    "LinearSubspace",
    "MonomialIdeal",
    "PlaneCertificate",
    "PointSet",
    "TheoremViolationError",
    "annihilator_line",
    "artinian_reduction",
    "base_locus_profile",
    "basepoint_free_check",
    "binomial",
    "bounds_report",
    "build_plane_regime",
    "build_prop_4_4",
    "check_hypotheses",
    "classify",
    "classify_points",
    "colon_span",
    "colon_table",
    "curve_degree_bound",
    "davis_decompose",
    "designed_plane",
    "example_3_3",
    "example_4_6",
    "find_plane",
    "form_gcd",
    "general_points",
    "gotzmann_values",
    "green_bound",
    "growth_gap",
    "h_vector",
    "hf_points",
    "hilbert_polynomial_fit",
    "hilbert_polynomial_from_expansion",
    "is_o_sequence",
    "lex_segment_ideal",
    "line_grid",
    "macaulay_bound",
    "macaulay_expand",
    "mg_dimension",
    "min_generator_count",
    "multiplication_pencil",
    "points_on_lines",
    "points_on_plane_curve",
    "points_span",
    "prop61_tail_check",
    "restriction_dimension",
    "socle_dimension",
    "span_from_generators",
    "span_from_monomial_ideal",
    "theorem_31_pattern",
    "truncate_hvector",
    "verify_prediction",
]
