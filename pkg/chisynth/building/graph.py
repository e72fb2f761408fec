"""Finite pieces of the building: breadth-first balls and distances."""

from collections import Counter
from dataclasses import dataclass, field

from nxtools import logging

from chisynth.building.vertices import BuildingVertex, neighbors
from chisynth.config import chiconfig
from chisynth.exceptions import BoundExceededException, BuildingInvariantException
from chisynth.types import VertexKind


@dataclass
class BuildingGraph:
    """The ball of a given radius around an origin vertex.

    Vertices are stored by key together with their graph distance from
    the origin. Vertices on the boundary sphere are not expanded, so their
    degree in this graph is 1.
    """

    origin: str
    vertices: dict[str, BuildingVertex] = field(default_factory=dict)
    depths: dict[str, int] = field(default_factory=dict)
    adjacency: dict[str, set[str]] = field(default_factory=dict)

    def add_vertex(self, vertex: BuildingVertex, depth: int) -> bool:
        """Insert a vertex unless present. Returns True when it was new."""
        if vertex.key in self.vertices:
            return False
        self.vertices[vertex.key] = vertex
        self.depths[vertex.key] = depth
        self.adjacency[vertex.key] = set()
        return True

    def add_edge(self, a: str, b: str) -> None:
        if a == b:
            raise BuildingInvariantException(f"Loop at {a}")
        self.adjacency[a].add(b)
        self.adjacency[b].add(a)

    def kind(self, key: str) -> VertexKind:
        return self.vertices[key].kind

    def degree(self, key: str) -> int:
        return len(self.adjacency[key])

    @property
    def depth(self) -> int:
        return max(self.depths.values(), default=0)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency.values()) // 2

    def ordered_keys(self) -> list[str]:
        """Keys sorted by distance from the origin, then by key."""
        return sorted(self.vertices, key=lambda k: (self.depths[k], k))

    def edges(self) -> list[tuple[str, str]]:
        return sorted(
            (a, b) for a, targets in self.adjacency.items() for b in targets if a < b
        )

    def sphere_sizes(self) -> list[int]:
        """Number of vertices at distance 1, 2, ... from the origin."""
        counts = Counter(self.depths.values())
        return [counts[d] for d in range(1, self.depth + 1)]

    def interior_degrees(self) -> dict[VertexKind, set[int]]:
        """Degrees of vertices strictly inside the ball, by kind."""
        result: dict[VertexKind, set[int]] = {"pure": set(), "alternating": set()}
        for key, depth in self.depths.items():
            if depth < self.depth:
                result[self.kind(key)].add(self.degree(key))
        return result

    def is_bipartite(self) -> bool:
        """Every edge joins a pure vertex to an alternating one."""
        return all(self.kind(a) != self.kind(b) for a, b in self.edges())

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.origin}
        stack = [self.origin]
        while stack:
            for b in self.adjacency[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count == self.vertex_count - 1


def bfs_explore(origin: BuildingVertex, depth: int) -> BuildingGraph:
    """Explore every vertex within the given graph distance of the origin.

    Each level is expanded in key order, so the result does not depend on
    the order neighbors are produced in.
    """
    if depth < 0:
        raise ValueError("Depth must not be negative")
    graph = BuildingGraph(origin=origin.key)
    graph.add_vertex(origin, 0)
    frontier = [origin]
    for level in range(depth):
        next_frontier: list[BuildingVertex] = []
        for vertex in sorted(frontier, key=lambda v: v.key):
            for neighbor in neighbors(vertex):
                if graph.add_vertex(neighbor, level + 1):
                    next_frontier.append(neighbor)
                graph.add_edge(vertex.key, neighbor.key)
        logging.debug(f"Level {level + 1}: {len(next_frontier)} vertices")
        frontier = next_frontier
    return graph


def graph_distance(
    u: BuildingVertex,
    v: BuildingVertex,
    bound: int | None = None,
) -> int:
    """Edge count of a shortest path, by bidirectional breadth-first search.

    The smaller frontier is expanded first. Raises BoundExceededException
    once the two searches together cover the bound without meeting.
    """
    if bound is None:
        bound = chiconfig.distance_bound
    if u.key == v.key:
        return 0

    distances = ({u.key: 0}, {v.key: 0})
    frontiers: tuple[list[BuildingVertex], list[BuildingVertex]] = ([u], [v])
    radii = [0, 0]

    while radii[0] + radii[1] < bound:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        own, other = distances[side], distances[1 - side]
        radius = radii[side] + 1
        expanded: list[BuildingVertex] = []
        for vertex in frontiers[side]:
            for neighbor in neighbors(vertex):
                if neighbor.key in own:
                    continue
                if neighbor.key in other:
                    return radius + other[neighbor.key]
                own[neighbor.key] = radius
                expanded.append(neighbor)
        frontiers[side].clear()
        frontiers[side].extend(expanded)
        radii[side] = radius

    raise BoundExceededException(f"Distance exceeds {bound}")
