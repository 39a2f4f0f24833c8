"""
Certificate checking and exhaustive search.

Both only consult winner determination and prices, so they serve as ground
truth for every rule-specific solver.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from src.config import load_settings
from src.election.profile import apply_shifts_by_index
from src.election.rules import RuleSpec, is_unique_winner_index
from src.errors import InputError, ResourceLimitError
from src.pricing.prices import INFINITY
from src.solvers.base import BriberyInstance, Solution, cost_limit, finish

logger = logging.getLogger(__name__)

METHOD = "brute-force"


def verify(instance: BriberyInstance, rule: RuleSpec, shifts: Sequence[int]) -> bool:
    """
    Check a shift vector.

    Returns
    -------
    bool
        True iff the shifts cost at most the budget and the despised candidate
        is not the unique winner afterwards. Infeasible shifts cost infinity
        and are rejected.
    """
    if len(shifts) != instance.n:
        raise InputError(f"shift vector has {len(shifts)} entries, expected {instance.n}")
    cost = instance.shift_cost(shifts)
    if not instance.within_budget(cost):
        return False
    bribed = apply_shifts_by_index(instance.election, instance.d, shifts)
    return not is_unique_winner_index(bribed, rule, instance.d)


def candidate_shifts(instance: BriberyInstance, voter: int, prune: bool = True) -> List[int]:
    """
    Shift amounts worth trying for one voter.

    With pruning only the longest shift of every price level is kept; moving
    d further back at the same price never helps d.
    """
    costs = instance.cost_table[voter]
    limit = cost_limit(instance)
    affordable = [s for s, c in enumerate(costs) if c <= limit]
    if not prune:
        return affordable
    return [s for s in affordable if s == affordable[-1] or costs[s + 1] > costs[s]]


def brute_force(
    instance: BriberyInstance,
    rule: RuleSpec,
    node_cap: Optional[int] = None,
    prune: bool = True,
) -> Solution:
    """
    Exhaustive search over per-voter shift amounts.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    rule : RuleSpec
        The voting rule.
    node_cap : int, optional
        Maximum number of search nodes; defaults to ``settings.oracle_node_cap``.
    prune : bool, optional
        Keep only the longest shift of each price level. The default is True.

    Raises
    ------
    ResourceLimitError
        When more than ``node_cap`` nodes are visited.
    """
    if node_cap is None:
        node_cap = load_settings().oracle_node_cap
    n = instance.n
    per_voter = [candidate_shifts(instance, v, prune) for v in range(n)]
    best: List = [INFINITY if instance.budget is None else instance.budget + 1, None]
    shifts = [0] * n
    nodes = 0

    def search(j: int, cost) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceLimitError(
                "brute force exceeded its node cap",
                nodes,
                best[0] if best[1] is not None else None,
                best[1],
            )
        if j == n:
            bribed = apply_shifts_by_index(instance.election, instance.d, shifts)
            if not is_unique_winner_index(bribed, rule, instance.d):
                best[0], best[1] = cost, tuple(shifts)
            return
        for shift in per_voter[j]:
            total = cost + instance.cost_table[j][shift]
            if total >= best[0]:
                continue
            shifts[j] = shift
            search(j + 1, total)
        shifts[j] = 0

    search(0, 0)
    logger.info(f"brute force visited {nodes} nodes")
    return finish(instance, best[0], best[1], METHOD)
