"""Verification and search toolkit for induced-saturated graphs."""

from .gf2k import ALPHA, GF16, BinaryField
from .graph import (
    Graph,
    cayley_graph,
    circulant_graph,
    common_nonneighbors,
    find_induced_path,
    find_induced_path_containing,
    find_induced_path_through,
    induced_subgraph,
    is_induced_path,
    pair,
    toggle_edge,
)

__version__ = "0.1.0"
