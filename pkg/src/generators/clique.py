"""
Copeland instances encoding Clique.

With unit prices and budget ``3 * C(k, 2)`` the despised candidate can be
dethroned iff the graph has a clique of size ``k``: d must lose to k vertex
candidates and to the C(k, 2) edge candidates between them, which ties it
with ``p``.
"""

import logging
import math
from typing import List, Sequence, Tuple

from src.election.profile import Election, ShiftVector
from src.election.rules import RuleSpec
from src.errors import InputError
from src.generators.base import GeneratedInstance
from src.generators.graph import Graph
from src.solvers.base import BriberyInstance

logger = logging.getLogger(__name__)


def vertex_candidate(v: str) -> str:
    return f"v:{v}"


def edge_candidate(u: str, v: str) -> str:
    return f"e:{u}-{v}"


def clique_budget(k: int) -> int:
    return 3 * math.comb(k, 2)


def _blocks(graph: Graph, k: int) -> Tuple[List[str], List[str], List[str], List[str], List[str]]:
    budget = clique_budget(k)
    size = len(graph.vertices) * len(graph.edges) * budget
    lower = [f"L{j}" for j in range(1, size + 1)]
    lower_prime = [f"Lp{j}" for j in range(1, size + 1)]
    vertices = [vertex_candidate(v) for v in graph.vertices]
    edges = [edge_candidate(u, v) for u, v in graph.canonical_edges]
    spare = [f"S{j}" for j in range(1, math.comb(k, 2) + k + 2)]
    return lower, lower_prime, vertices, edges, spare


def gen_clique(graph: Graph, k: int, alpha="1/2") -> GeneratedInstance:
    """
    Build the Copeland instance for a Clique question.

    Parameters
    ----------
    graph : Graph
        Graph with at least one edge.
    k : int
        Clique size, at least 3.
    alpha : str or Fraction, optional
        Copeland tie value of the returned rule; the voter count is odd, so
        it does not matter. The default is "1/2".
    """
    if k < 3:
        raise InputError(f"clique size must be at least 3, got {k}")
    if not graph.edges:
        raise InputError("the graph has no edges")

    lower, lower_prime, vertices, edges, spare = _blocks(graph, k)
    candidates = ["d", "p"] + lower + lower_prime + vertices + edges + spare
    front = set(["d"] + lower + lower_prime)
    rest = [c for c in candidates if c not in front]

    orders = []
    for (u, v), e in zip(graph.canonical_edges, edges):
        ends = [vertex_candidate(u), vertex_candidate(v)]
        first = (
            ["d"] + ends + [e] + lower + lower_prime + ["p"]
            + [x for x in edges if x != e]
            + [x for x in vertices if x not in ends]
            + spare
        )
        orders.append(first)
        orders.append(first[::-1])

    orders += [edges + ["d"] + lower + spare + ["p"] + lower_prime + vertices] * (k - 2)
    orders += [["p"] + lower_prime + ["d"] + lower + vertices + spare + edges] * (k - 2)
    orders.append(spare + ["p", "d"] + lower_prime + vertices + lower + edges)

    orders += [["d"] + lower + lower_prime + rest] * (3 * k * k)
    orders += [rest[::-1] + ["d"] + lower_prime + lower] * (3 * k * k)

    election = Election.from_orders(candidates, orders)
    budget = clique_budget(k)
    logger.info(
        f"clique instance: {election.m} candidates, {election.n} voters, budget {budget}"
    )
    instance = BriberyInstance.with_unit_prices(election, "d", budget)
    return GeneratedInstance(instance, RuleSpec.copeland(alpha))


def clique_bribery(graph: Graph, clique: Sequence[str], k: int) -> ShiftVector:
    """
    The bribery a k-clique induces: for every edge inside the clique, shift d
    back three places (past both endpoints and the edge) in the first of the
    edge's two votes.
    """
    if len(set(clique)) != k:
        raise InputError(f"expected {k} distinct clique vertices")
    members = set(clique)
    n = 2 * len(graph.edges) + 2 * k - 3 + 6 * k * k
    shifts = [0] * n
    for i, (u, v) in enumerate(graph.canonical_edges):
        if u in members and v in members:
            shifts[2 * i] = 3
    return tuple(shifts)
