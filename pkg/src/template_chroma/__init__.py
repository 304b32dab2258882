"""Exact finite computations for combinatorial templates and their
hypergraphs, plus a symbolic aleph layer evaluating chromatic-number
formulas under a configurable continuum assumption."""

from .budget import Budget, default_budget
from .cardinals import (
    aleph,
    ALEPH_0,
    ALEPH_OMEGA,
    card_sum,
    Cardinal,
    compare,
    ContinuumSetting,
    finite,
    least_aleph_reaching,
    OMEGA,
    parse_cardinal,
    successor_n,
)
from .chromatic import (
    achievable_chromatics,
    AchievableSet,
    chi_simple_dim,
    chi_template,
    ChromaticVerdict,
    construct_template_with_chi,
    distance_chromatic_upper,
    forbidden_family,
    ForbiddenFamily,
    registry_avoidable,
    registry_entry,
    registry_names,
    RegistryEntry,
)
from .distinguishers import DistinguisherResult, is_distinguisher, min_distinguisher, min_distinguisher_size
from .embeddings import (
    cantor_pair,
    cantor_unpair,
    distinguisher_restriction_check,
    DistinguisherReduction,
    EmbeddingReport,
    lift_once,
    lift_to_dim,
    LiftResult,
    pairing_map,
    pairing_map_chain,
    reduce_to_distinguisher,
    SamplerSpec,
    verify_embedding,
)
from .finite_lab import (
    build_shift_graph,
    build_template_hypergraph,
    chromatic_exact,
    ColoringResult,
    FiniteHypergraph,
    greedy_bound,
    GridSpec,
    is_proper_coloring,
    shift_color,
    ShiftColorToken,
    simplest_rational_between,
    ZERO_TOKEN,
)
from .polynomials import (
    evaluate,
    parse_polynomial,
    polynomial_to_template,
    Product,
    render_polynomial,
    SquaredDiff,
    Sum,
    template_to_polynomial,
    TemplatePolynomial,
    vanishes_unordered,
    zero_hypergraph_on_grid,
)
from .templates import (
    basis_template,
    canonical_form,
    connected_components,
    coordinate_partitions,
    enumerate_templates,
    homomorphic_images,
    is_connected,
    is_homomorphic_image,
    is_isomorphic,
    is_simple,
    pad_with_constant,
    PartitionTuple,
    project,
    Template,
    validate_template,
)

__version__ = "0.1.0"
