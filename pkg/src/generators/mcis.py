"""
Copeland instances encoding Multicolored Independent Set.

The number of voters depends only on the number of colors ``h``. With unit
prices and budget ``h * (q + (q - 1) * Delta)`` the despised candidate can
be dethroned iff the colored graph has an independent set with one vertex of
every color.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence

from src.election.profile import Election, ShiftVector
from src.election.rules import RuleSpec
from src.errors import InputError
from src.generators.base import GeneratedInstance
from src.generators.clique import edge_candidate, vertex_candidate
from src.generators.graph import Graph
from src.solvers.base import BriberyInstance

logger = logging.getLogger(__name__)


def _check_coloring(graph: Graph) -> Dict[int, List[str]]:
    classes = graph.color_classes()
    sizes = {len(members) for members in classes.values()}
    if len(sizes) != 1:
        raise InputError("every color must have the same number of vertices")
    for u, v in graph.edges:
        if graph.coloring[u] == graph.coloring[v]:
            raise InputError(f"edge ({u}, {v}) joins two vertices of color {graph.coloring[u]}")
    for color, members in classes.items():
        if not any(graph.incident_edges(v) for v in members):
            raise InputError(f"no vertex of color {color} has an edge")
    return classes


def max_degree(graph: Graph) -> int:
    return max(len(graph.incident_edges(v)) for v in graph.vertices)


def mcis_budget(graph: Graph) -> int:
    classes = graph.color_classes()
    h = len(classes)
    q = len(next(iter(classes.values())))
    return h * (q + (q - 1) * max_degree(graph))


def gen_mcis(graph: Graph, alpha="1/2") -> GeneratedInstance:
    """
    Build the Copeland instance for a colored graph.

    Parameters
    ----------
    graph : Graph
        Colored graph: equal color classes, no edge inside a class and an
        edge at some vertex of every class.
    alpha : str or Fraction, optional
        Copeland tie value of the returned rule. The default is "1/2".
    """
    classes = _check_coloring(graph)
    h = len(classes)
    q = len(next(iter(classes.values())))
    delta = max_degree(graph)
    t = h * q * (delta + 1)

    vertices = [vertex_candidate(v) for members in classes.values() for v in members]
    edge_names = [edge_candidate(u, v) for u, v in graph.canonical_edges]
    fillers: Dict[str, List[str]] = {}
    for members in classes.values():
        for v in members:
            gap = delta - len(graph.incident_edges(v))
            fillers[v] = [f"f:{v}:{j}" for j in range(1, gap + 1)]
    all_fillers = [f for members in classes.values() for v in members for f in fillers[v]]
    dummies = {color: [f"D{color}_{j}" for j in range(1, t + 1)] for color in classes}
    all_dummies = [x for block in dummies.values() for x in block]
    d1 = [f"Dp_{j}" for j in range(1, t + 1)]
    d2 = [f"Dpp_{j}" for j in range(1, t + 1)]
    d3 = [f"Dppp_{j}" for j in range(1, t + 1)]
    core = vertices + edge_names

    candidates = ["d", "p", "q"] + core + all_fillers + all_dummies + d1 + d2 + d3
    tail = ["p", "q"] + d1 + d2 + d3

    orders = []
    for color, members in classes.items():
        block: List[str] = []
        for v in members:
            block += [vertex_candidate(v)] + [edge_names[i] for i in graph.incident_edges(v)] + fillers[v]
        in_block = set(block)
        outside = [c for c in core + all_fillers if c not in in_block]
        other_dummies = [x for c, b in dummies.items() if c != color for x in b]
        first = ["d"] + block + dummies[color] + other_dummies + outside + tail
        second = ["d"] + block[::-1] + dummies[color][::-1] + other_dummies + outside + tail
        orders += [first, second, first[::-1], second[::-1]]

    orders += [
        ["p"] + all_fillers + all_dummies + ["q"] + d1 + d2[::-1] + core + d3 + ["d"],
        ["d"] + d2[::-1] + core[::-1] + d3 + d1[::-1] + all_dummies + ["q", "p"] + all_fillers,
        ["p", "q", "d"] + d1[::-1] + d3 + all_dummies + all_fillers + d2 + core,
        core + ["d"] + d2 + all_fillers + all_dummies + ["p", "q"] + d3 + d1,
        ["d"] + d3 + all_fillers + core + d2 + all_dummies + ["p", "q"] + d1,
        ["q", "p"] + all_dummies + d2 + ["d"] + d3[::-1] + d1 + all_fillers + core,
        ["q"] + d1 + core + ["d", "p"] + all_fillers + all_dummies + d2 + d3,
    ]

    election = Election.from_orders(candidates, orders)
    budget = h * (q + (q - 1) * delta)
    logger.info(
        f"independent set instance: h={h}, q={q}, max degree {delta}, "
        f"{election.m} candidates, {election.n} voters, budget {budget}"
    )
    instance = BriberyInstance.with_unit_prices(election, "d", budget)
    return GeneratedInstance(instance, RuleSpec.copeland(alpha))


def mcis_bribery(graph: Graph, selection: Sequence[str]) -> ShiftVector:
    """
    The bribery a multicolored independent set induces.

    For every color, d passes the vertex blocks before the selected vertex
    plus the selected vertex itself in the first vote of the color, and the
    blocks after it in the second.
    """
    classes = graph.color_classes()
    h = len(classes)
    q = len(next(iter(classes.values())))
    width = max_degree(graph) + 1
    chosen = {graph.coloring[v]: v for v in selection}
    if len(selection) != h or sorted(chosen) != sorted(classes):
        raise InputError("the selection must contain exactly one vertex of every color")

    shifts = [0] * (4 * h + 7)
    for i, (color, members) in enumerate(classes.items()):
        s = members.index(chosen[color]) + 1
        shifts[4 * i] = (s - 1) * width + 1
        shifts[4 * i + 1] = (q - s) * width
    return tuple(shifts)
