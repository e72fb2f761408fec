"""Serialize explored balls as Graphviz DOT or JSON."""

from typing import Literal

import graphviz
from pydantic import Field, ValidationError

from chisynth.building.graph import BuildingGraph
from chisynth.building.vertices import vertex_from_key
from chisynth.exceptions import DocumentParseException
from chisynth.types import ChisynthModel, ExportFormat, VertexKind
from chisynth.utils import json_dumps, json_loads

KIND_COLORS: dict[VertexKind, str] = {
    "pure": "red",
    "alternating": "blue",
}


class GraphVertexModel(ChisynthModel):
    key: str = Field(..., description="Canonical lattice key")
    kind: Literal["pure", "alternating"] = Field(...)
    depth: int = Field(..., ge=0, description="Distance from the origin")


class GraphDocument(ChisynthModel):
    origin: str = Field(..., description="Key of the origin vertex")
    vertices: list[GraphVertexModel] = Field(default_factory=list)
    edges: list[tuple[str, str]] = Field(default_factory=list)


def graph_to_dot(graph: BuildingGraph) -> str:
    """Undirected DOT source: pure vertices red, alternating vertices blue.

    Nodes are named v0, v1, ... in (depth, key) order and carry the full
    key as tooltip. Only the origin is labeled.
    """
    dot = graphviz.Graph("building")
    dot.attr("node", shape="circle", width="0.15", fixedsize="true")
    ordered = graph.ordered_keys()
    index = {key: i for i, key in enumerate(ordered)}
    for key in ordered:
        dot.node(
            f"v{index[key]}",
            label="e0" if key == graph.origin else "",
            color=KIND_COLORS[graph.kind(key)],
            style="filled",
            tooltip=key,
        )
    pairs = sorted(sorted((index[a], index[b])) for a, b in graph.edges())
    for i, j in pairs:
        dot.edge(f"v{i}", f"v{j}")
    return dot.source


def graph_to_document(graph: BuildingGraph) -> GraphDocument:
    return GraphDocument(
        origin=graph.origin,
        vertices=[
            GraphVertexModel(key=key, kind=graph.kind(key), depth=graph.depths[key])
            for key in graph.ordered_keys()
        ],
        edges=graph.edges(),
    )


def export_graph(graph: BuildingGraph, fmt: ExportFormat = "dot") -> str:
    if fmt == "dot":
        return graph_to_dot(graph)
    if fmt == "json":
        return json_dumps(graph_to_document(graph).dict())
    raise ValueError(f"Unknown export format {fmt}")


def parse_graph_json(text: str | bytes) -> BuildingGraph:
    """Rebuild a graph from its JSON export."""
    try:
        document = GraphDocument(**json_loads(text))
    except ValidationError as e:
        raise DocumentParseException(f"Invalid graph document: {e}") from e
    except ValueError as e:
        raise DocumentParseException(f"Graph document is not JSON: {e}") from e

    graph = BuildingGraph(origin=document.origin)
    for item in document.vertices:
        vertex = vertex_from_key(item.key)
        if vertex.kind != item.kind:
            raise DocumentParseException(
                f"Vertex {item.key} is {vertex.kind}, not {item.kind}"
            )
        graph.add_vertex(vertex, item.depth)
    if document.origin not in graph.vertices:
        raise DocumentParseException("Origin is not among the vertices")
    for a, b in document.edges:
        if a not in graph.vertices or b not in graph.vertices:
            raise DocumentParseException(f"Edge {a} - {b} names an unknown vertex")
        graph.add_edge(a, b)
    return graph
