"""Competition, CCE and niche graphs of semiorders and interval orders."""

__version__ = "0.1.0"

from .derived_graphs import cce, competition, niche, reverse
from .graph_core import (
    CanonicalForm,
    Digraph,
    SizeCapError,
    UndirectedGraph,
    are_isomorphic,
    canonical_form,
    complement,
    complete,
    complete_bipartite,
    components,
    disjoint_union,
    edgeless,
    is_complete,
    isolated_vertices,
    universal_vertices,
)
from .order_models import (
    AnalysisCase,
    IntervalRep,
    RepresentationAnalysis,
    SemiorderRep,
    analyze_interval_rep,
    analyze_semiorder_rep,
    is_interval_order,
    is_semiorder,
    realize_interval,
    realize_semiorder,
    semiorder_to_interval,
)
from .recognizers import (
    ClassificationVerdict,
    CompetitionClassDescriptor,
    Edgeless,
    Gamma,
    NicheClassDescriptor,
    TwoCliques,
    TwoCliquesPlusIsolated,
    build_from_descriptor,
    classify_cce,
    classify_competition,
    classify_niche,
    decompose_clique_plus_isolated,
    decompose_gamma,
    gamma,
    parse_shape,
)
from .witness_synth import niche_witness_interval, niche_witness_semiorder
