"""Pseudoline arrangements as wiring diagrams, with coloring algorithms,
exact oracles, extremal constructions and rendering."""

from .coloring import (
    Coloring,
    ColoringBudgetError,
    ResamplingLimitError,
    degree_four_coloring,
    greedy_cell_coloring,
    greedy_pseudoline_coloring,
    line_respecting_coloring,
    local_lemma_budget,
    local_lemma_coloring,
    ordinary_graph,
)
from .constructions import (
    chromatic_gap_arrangement,
    graph_coloring_reduction,
    polygon_cell_arrangement,
    twisted_bundles,
)
from .diagram import (
    CrossingInfo,
    Event,
    Graph,
    InvalidDiagramError,
    ValidationReport,
    WiringDiagram,
    canonical_form,
    crossings,
    enumerate_diagrams,
    max_line_crossings,
    ordinary_crossings,
    random_diagram,
    random_nonsimple,
    random_simple,
    restrict,
    trivial_pencil,
    validate,
    wire_orders,
)
from .oracles import (
    CELL,
    LINE,
    PL,
    SIMULTANEOUS,
    CapExceededError,
    ExactColoringResult,
    Mode,
    SearchReport,
    TwistedBundlesReport,
    Violation,
    Witness,
    chi_graph,
    min_colors,
    pl_min_degree,
    scan_line_coloring_gap,
    search_simultaneous_counterexample,
    turan_number,
    twisted_bundles_check,
    verify_coloring,
)
from .topology import (
    CellComplex,
    Hypergraph,
    OrientedArrangementGraph,
    arrangement_graph,
    build_cells,
    cell_vertex_hypergraph,
    conflict_ancestors,
    line_vertex_hypergraph,
    sample_topological_orders,
)

__version__ = "0.1.0"
