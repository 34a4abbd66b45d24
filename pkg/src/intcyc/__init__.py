"""Interval and cyclically-interval edge colorings of trees.

Closed-form spectra for trees (:mod:`intcyc.invariants`), constructive
colorings (:mod:`intcyc.construct`), verifiers (:mod:`intcyc.verify`) and an
exhaustive enumeration oracle (:mod:`intcyc.oracle`) that checks them.
"""

from .construct import ConstructionRequest, Infeasible, construct, construct_all_t
from .cyclic import (
    ColorSet,
    chained_union,
    dif,
    intcyc_closed_1,
    intcyc_closed_2,
    intcyc_open_1,
    intcyc_open_2,
    is_cyclic_interval,
    is_interval,
)
from .graph import (
    Graph,
    GraphError,
    PathData,
    degree,
    distance,
    distance_to_set,
    incident_edges,
    is_tree,
    load_graph,
    neighbors,
    tree_path,
)
from .invariants import IntSet, SpectrumReport, big_m, big_m_witness, chromatic_index_tree, max_degree, spectrum_tree
from .oracle import (
    OracleResult,
    check_corollary_bound,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    count_colorings,
    enumerate_colorings,
    exact_spectrum,
    oracle_report,
)
from .verify import Coloring, colors_of, is_cyclic_coloring, is_interval_coloring, is_proper

__version__ = "0.1.0"
