"""Spectra, energies, and machine-verified eigenvalue bounds for graphs with
self-loops."""

from .graphcore import (
    DegreeClassification,
    DegreeSummary,
    LoopedGraph,
    SimpleGraph,
    classify_bidegreed,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    degree_summary,
    detect_regular_complete_multipartite,
    empty_graph,
    family,
    instance_digest,
    is_clique,
    is_connected,
    is_independent_set,
    make_looped,
    multipartite_parts,
    path_graph,
)
from .construct import (
    LoopedLineGraph,
    adjacency,
    complement,
    incidence,
    line_graph,
    ng_energy_aux_matrix,
    quotient_2block,
    signless_laplacian,
)
from .numerics import (
    IntPoly,
    LineGraphIdentity,
    NumericIntegrityError,
    QuadExt,
    Spectrum,
    charpoly_exact,
    closed_form_Kn_sigma_spectrum,
    eig_sym,
    min_eigenvalue,
    multiset_distance,
    poly_add,
    poly_compose_rational,
    poly_mul,
    poly_pow,
    spectral_radius,
    verify_linegraph_identity,
)
from .invariants import (
    EnergyValue,
    NGEnergyBounds,
    ZagrebPair,
    check_interlacing,
    check_shift_interlacing,
    degree_deviation,
    energy,
    ng_energy_closed_forms,
    ng_lower_bound_exact,
    ng_lower_bound_remark_exact,
    trace_identities,
    zagreb,
)
from .bounds import (
    CATALOG,
    CATALOG_IDS,
    BoundReport,
    CertificationError,
    certify_equality_family,
    evaluate_all,
    evaluate_bound,
)
from .harness import (
    CampaignConfig,
    CampaignReport,
    HardGateViolation,
    OracleReport,
    gen_exhaustive,
    gen_exhaustive_layer,
    gen_random,
    oracle_ng_aux,
    run_campaign,
)
from .shell import (
    ParseError,
    parse_graph6,
    parse_loopline,
    print_graph6,
    print_loopline,
)

__version__ = "0.1.0"
