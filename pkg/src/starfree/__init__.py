"""Exact invariants, extremal constructions and bound checks for K_{1,r}-free graphs."""

from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    VertexSet,
    complement,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    induced,
    join,
    parse_edge_list,
    parse_graph6,
)
from .limits import SizeCapExceeded

__version__ = "0.1.0"
