"""Exact Rees-presentation toolkit for cover ideals of finite simple graphs.

Build a graph with an explicit vertex priority, take its cover ideal,
present the Rees algebra by a reduced binomial basis, and certify the
x-condition, minimal generation of powers by standard monomials, linear
quotients, and (componentwise) linear resolutions.
"""

from .binomial_gb import (
    Binomial,
    GBConfig,
    GroebnerBasis,
    buchberger,
    initial_ideal,
    is_groebner_basis,
    oriented_binomial,
    reduce_binomial,
    s_pair,
    toric_kernel,
)
from .errors import (
    DegreeCapExceeded,
    GeneratorLimitExceeded,
    LatticeLimitExceeded,
    ResourceLimitExceeded,
)
from .graphs import (
    Graph,
    Poset,
    Vertex,
    VertexCover,
    attach,
    build_graph,
    cameron_walker,
    cm_bipartite_from_poset,
    cone,
    graph_from_json,
    graph_to_json,
    is_chordal,
    is_connected,
    is_unmixed,
    maximal_independent_sets,
    minimal_vertex_covers,
    parse_construction,
    standard_family,
)
from .monomials import (
    ELIM_SHARP,
    LEX_ON_S,
    LEX_ON_Y,
    SHARP,
    Monomial,
    MonomialIdeal,
    MonomialOrder,
    VariableUniverse,
    canonical_key,
    colon,
    compare,
    component,
    cover_ideal,
    minimalize,
    monomials_of_degree,
    parse_monomial,
    power,
    product,
    variable,
)
from .rees import (
    ReesPresentation,
    StandardMonomialSet,
    XConditionReport,
    minimal_generation_check,
    pi_image,
    rees_presentation,
    standard_monomials,
    x_condition,
)
from .resolutions import (
    BettiTable,
    ComponentwiseReport,
    LinearQuotientsCertificate,
    betti_table,
    check_linear_quotients,
    find_linear_quotients_order,
    has_linear_resolution,
    is_componentwise_linear,
    lcm_lattice,
    upper_koszul_faces,
)

__version__ = "0.1.0"
