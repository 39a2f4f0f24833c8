"""
Maximin via cheapest tight solutions.

For an ordered pair of rivals ``(w, t)`` (``w == t`` allowed) every bribed
voter puts d directly below ``w`` or directly below ``t``. ``w`` is the
candidate meant to catch up with d, ``t`` the one that realizes d's new
score. The table tracks how often d passes ``w`` (x) and ``t`` (y).
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from src.config import Settings, load_settings
from src.election.rules import RuleSpec
from src.errors import DomainError
from src.pricing.prices import INFINITY, Cost
from src.solvers.base import BriberyInstance, Solution, best_of, cost_limit, finish, zero_cost_solution
from src.utils.parallel import map_tasks

logger = logging.getLogger(__name__)

METHOD = "maximin-tight-dp"


def _pair_dp(task) -> Tuple[Cost, Optional[Tuple[int, ...]]]:
    """Cheapest tight solution for one (w, t) pair."""
    instance, w, t = task
    election, d = instance.election, instance.d
    positions = election.positions
    counts = election.pairwise
    limit = cost_limit(instance)
    others = [c for c in range(instance.m) if c != d]

    def below(voter: int, c: int) -> Tuple[int, Cost]:
        shift = int(positions[voter, c]) - instance.d_positions[voter]
        return shift, instance.cost_table[voter][shift]

    layer: Dict[Tuple[int, int], Cost] = {(0, 0): 0}
    back: List[Tuple[int, Dict[Tuple[int, int], Tuple[Tuple[int, int], int]]]] = []
    for v in range(instance.n):
        pos_d = instance.d_positions[v]
        over_w = pos_d < positions[v, w]
        over_t = pos_d < positions[v, t]
        if not (over_w or over_t):
            continue

        # (dx, dy, shift, price)
        options = []
        if w == t:
            shift, cost = below(v, w)
            options.append((1, 1, shift, cost))
        elif over_w and not over_t:
            shift, cost = below(v, w)
            options.append((1, 0, shift, cost))
        elif over_t and not over_w:
            shift, cost = below(v, t)
            options.append((0, 1, shift, cost))
        elif positions[v, w] < positions[v, t]:
            shift, cost = below(v, w)
            options.append((1, 0, shift, cost))
            shift, cost = below(v, t)
            options.append((1, 1, shift, cost))
        else:
            shift, cost = below(v, t)
            options.append((0, 1, shift, cost))
            shift, cost = below(v, w)
            options.append((1, 1, shift, cost))

        new_layer = dict(layer)
        pointers = {state: (state, 0) for state in layer}
        for (x, y), cost in layer.items():
            for dx, dy, shift, price in options:
                total = cost + price
                if total > limit:
                    continue
                nxt = (x + dx, y + dy)
                if total < new_layer.get(nxt, INFINITY):
                    new_layer[nxt] = total
                    pointers[nxt] = ((x, y), shift)
        layer = new_layer
        back.append((v, pointers))

    # score of w after the bribery; only N(w, d) changes
    rest_w = min((int(counts[w, c]) for c in range(instance.m) if c not in (w, d)), default=None)
    rest_d = min((int(counts[d, c]) for c in others if c not in (w, t)), default=None)

    goal, goal_cost = None, INFINITY
    for (x, y), cost in layer.items():
        score_w = int(counts[w, d]) + x
        if rest_w is not None:
            score_w = min(score_w, rest_w)
        bound_d = min(int(counts[d, w]) - x, int(counts[d, t]) - y)
        if rest_d is not None:
            bound_d = min(bound_d, rest_d)
        if score_w >= bound_d and cost < goal_cost:
            goal, goal_cost = (x, y), cost

    if goal is None:
        return INFINITY, None

    shifts = [0] * instance.n
    state = goal
    for v, pointers in reversed(back):
        state, shifts[v] = pointers[state]
    return goal_cost, tuple(shifts)


def solve_maximin(instance: BriberyInstance, settings: Optional[Settings] = None) -> Solution:
    """
    Minimum-cost destructive shift bribery under Maximin.

    Enumerates every ordered pair of rivals and keeps the cheapest tight
    solution after which the first rival's Maximin score reaches an upper
    bound on d's.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve; needs at least two candidates.
    settings : Settings, optional
        Only ``jobs`` is used.

    Raises
    ------
    DomainError
        If the election has a single candidate.
    """
    if instance.m < 2:
        raise DomainError("Maximin is undefined for a single candidate")
    settings = settings or load_settings()
    zero = zero_cost_solution(instance, RuleSpec.maximin(), METHOD)
    if zero is not None:
        return zero

    rivals = [c for c in range(instance.m) if c != instance.d]
    tasks = [(instance, w, t) for w in rivals for t in rivals]
    logger.debug(f"{len(tasks)} rival pairs")
    cost, shifts = best_of(map_tasks(_pair_dp, tasks, settings.jobs))
    return finish(instance, cost, shifts, METHOD)
