"""Spectral radius vs. (fractional) matching number: computation, extremal
families, certificates, and exhaustive small-graph verification."""

from .halfint import HalfIntegral
from .graphs import (
    Graph,
    Graph6Error,
    GraphError,
    complete,
    components,
    empty,
    from_edge_list,
    from_edge_list_text,
    from_graph6,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    join,
    max_degree,
    min_degree,
    to_edge_list_text,
    to_graph6,
    union,
)
from .roots import NoRealRootError, largest_real_root
from .spectral import (
    ConvergenceError,
    QuotientMatrix,
    RhoResult,
    adjacency_quotient,
    char_poly_f,
    char_poly_f_coeffs,
    char_poly_g,
    char_poly_g_coeffs,
    charpoly_int,
    exact_char_poly,
    poly_divmod,
    quotient_spectral_radius,
    spectral_radius,
)
from .matching import (
    FpmPart,
    FpmPartition,
    FractionalMatching,
    MatchingResult,
    Transversal,
    WrcReport,
    bipartite_double_cover,
    fpm_partition,
    fractional_matching_number,
    fractional_transversal,
    has_fractional_perfect_matching,
    matching_number,
    optimal_fractional_matching,
    wrc_decomposition,
)
from .extremal import (
    ExtremalSpec,
    RegimePrediction,
    build_extremal,
    matching_bound_connected,
    matching_bound_general,
    predicted_maximizer_connected,
    predicted_maximizer_general,
    rho_join_formula,
    theta_cubic,
    theta_n,
)
from .certify import (
    CertificateRecord,
    CertificateReport,
    SoundnessError,
    cert_beta_increment,
    cert_beta_star_increment,
    cert_fpm_spectral,
    cert_min_degree_fpm,
    cert_pm_spectral,
    certify_all,
)
from .verify import (
    audit_duality,
    audit_structures,
    cross_check_matching_implementations,
    enumerate_graphs,
    oracle_beta,
    oracle_beta_star,
    verify_certificates,
    verify_theorem,
    verify_tie_class_n8,
)

__version__ = "0.1.0"
