from chisynth.building.export import export_graph, parse_graph_json
from chisynth.building.geodesic import (
    adjacent_pures,
    interpolate_self_dual,
    lattices_adjacent,
)
from chisynth.building.graph import BuildingGraph, bfs_explore, graph_distance
from chisynth.building.lattice import Lattice, hermite_form, self_dualize
from chisynth.building.vertices import (
    AlternatingVertex,
    BuildingVertex,
    PureVertex,
    alternating_neighbors,
    classify_vertex,
    is_alternating_lattice,
    neighbors,
    origin,
    pure_neighbors,
    pure_vertex_of,
    vertex_from_key,
    vertex_key,
)

__all__ = [
    "AlternatingVertex",
    "BuildingGraph",
    "BuildingVertex",
    "Lattice",
    "PureVertex",
    "adjacent_pures",
    "alternating_neighbors",
    "bfs_explore",
    "classify_vertex",
    "export_graph",
    "graph_distance",
    "hermite_form",
    "interpolate_self_dual",
    "is_alternating_lattice",
    "lattices_adjacent",
    "neighbors",
    "origin",
    "parse_graph_json",
    "pure_neighbors",
    "pure_vertex_of",
    "self_dualize",
    "vertex_from_key",
    "vertex_key",
]
