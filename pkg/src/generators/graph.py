"""
Undirected graphs for the Clique and Multicolored Independent Set generators.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import InputError

_VERTEX_NAME = re.compile(r"^[A-Za-z0-9_]+$")


class Graph(BaseModel):
    """
    A simple undirected graph with an optional vertex coloring.

    Vertex names are restricted to letters, digits and underscores. Vertices
    and edges are kept in the order given; generators use that order.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...] = ()
    coloring: Optional[Dict[str, int]] = None

    @model_validator(mode="after")
    def _check_graph(self) -> "Graph":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        for v in self.vertices:
            if not _VERTEX_NAME.match(v):
                raise ValueError(f"invalid vertex name {v!r}")
        known = set(self.vertices)
        seen = set()
        for u, v in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        if self.coloring is not None:
            missing = known - set(self.coloring)
            if missing:
                raise ValueError(f"vertices without a color: {sorted(missing)}")
            if set(self.coloring) - known:
                raise ValueError("coloring names unknown vertices")
            if any(c < 1 for c in self.coloring.values()):
                raise ValueError("colors are numbered from 1")
        return self

    @classmethod
    def from_networkx(cls, graph: nx.Graph, coloring: Optional[Dict[str, int]] = None) -> "Graph":
        vertices = tuple(str(v) for v in graph.nodes)
        edges = tuple((str(u), str(v)) for u, v in graph.edges)
        return cls(vertices=vertices, edges=edges, coloring=coloring)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def canonical_edges(self) -> Tuple[Tuple[str, str], ...]:
        """Edges with their endpoints in vertex order."""
        return tuple(
            (u, v) if self.index[u] < self.index[v] else (v, u) for u, v in self.edges
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def incident_edges(self, vertex: str) -> List[int]:
        """Indices of the edges touching ``vertex``, in edge order."""
        return [i for i, (u, v) in enumerate(self.edges) if vertex in (u, v)]

    def color_classes(self) -> Dict[int, List[str]]:
        """Vertices of every color, in vertex order."""
        if self.coloring is None:
            raise InputError("the graph has no coloring")
        classes: Dict[int, List[str]] = {}
        for v in self.vertices:
            classes.setdefault(self.coloring[v], []).append(v)
        return dict(sorted(classes.items()))


def find_clique(graph: Graph, k: int) -> Optional[Tuple[str, ...]]:
    """Some ``k`` pairwise adjacent vertices, or None."""
    for clique in nx.find_cliques(graph.to_networkx()):
        if len(clique) >= k:
            members = sorted(clique, key=graph.index.__getitem__)
            return tuple(members[:k])
    return None


def has_clique(graph: Graph, k: int) -> bool:
    return find_clique(graph, k) is not None


def is_multicolored_independent_set(graph: Graph, selection: Sequence[str]) -> bool:
    """One vertex of every color, no two adjacent."""
    classes = graph.color_classes()
    colors = [graph.coloring[v] for v in selection]
    if sorted(colors) != sorted(classes):
        return False
    g = graph.to_networkx()
    return not any(g.has_edge(u, v) for u, v in itertools.combinations(selection, 2))


def find_multicolored_independent_set(graph: Graph) -> Optional[Tuple[str, ...]]:
    for selection in itertools.product(*graph.color_classes().values()):
        if is_multicolored_independent_set(graph, selection):
            return tuple(selection)
    return None


def random_graph(num_vertices: int, edge_probability: float, seed: int) -> Graph:
    """G(n, p) graph on vertices ``v0 .. v{n-1}``."""
    g = nx.gnp_random_graph(num_vertices, edge_probability, seed=seed)
    g = nx.relabel_nodes(g, {i: f"v{i}" for i in g.nodes})
    return Graph.from_networkx(g)


def plant_clique(graph: Graph, members: Sequence[str]) -> Graph:
    """Add the missing edges among ``members``."""
    g = graph.to_networkx()
    g.add_edges_from(itertools.combinations(members, 2))
    return Graph(
        vertices=graph.vertices,
        edges=tuple((str(u), str(v)) for u, v in g.edges),
        coloring=graph.coloring,
    )


def random_colored_graph(colors: int, per_color: int, edge_probability: float, seed: int) -> Graph:
    """
    Random graph with ``colors`` equal color classes and no edge inside a class.

    Every color class gets at least one edge, as the Multicolored Independent
    Set generator requires.
    """
    if colors < 2:
        raise InputError("need at least two colors")
    rng = np.random.default_rng(seed)
    vertices = [f"c{i}_{j}" for i in range(1, colors + 1) for j in range(1, per_color + 1)]
    coloring = {v: int(v[1:].split("_")[0]) for v in vertices}
    edges = [
        (u, v)
        for u, v in itertools.combinations(vertices, 2)
        if coloring[u] != coloring[v] and rng.random() < edge_probability
    ]
    touched = {x for e in edges for x in e}
    for color in range(1, colors + 1):
        if not any(coloring[x] == color for x in touched):
            u = f"c{color}_1"
            v = f"c{color % colors + 1}_1"
            if (u, v) not in edges and (v, u) not in edges:
                edges.append((u, v) if vertices.index(u) < vertices.index(v) else (v, u))
            touched.update((u, v))
    return Graph(vertices=tuple(vertices), edges=tuple(edges), coloring=coloring)


def plant_independent_set(graph: Graph, selection: Sequence[str]) -> Graph:
    """
    Remove the edges among ``selection``.

    A color class left without edges is reconnected through vertices
    outside the selection, so every class keeps a vertex of nonzero degree.
    """
    chosen = set(selection)
    edges = [(u, v) for u, v in graph.edges if not (u in chosen and v in chosen)]
    classes = graph.color_classes()
    for color, members in classes.items():
        if any(x in members for e in edges for x in e):
            continue
        spare = [x for x in members if x not in chosen]
        other = [x for c, ms in classes.items() if c != color for x in ms if x not in chosen]
        if not spare or not other:
            raise InputError(f"color {color} cannot keep an edge outside the selection")
        edges.append((spare[0], other[0]))
    return Graph(vertices=graph.vertices, edges=tuple(edges), coloring=graph.coloring)
