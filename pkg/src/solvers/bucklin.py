"""
Dynamic programs for Bucklin and Simplified Bucklin.

For a rival ``c`` and a round ``k`` the table tracks, voter by voter, the
cheapest way to reach the state

    (p, q, q') = (score^k(c), score^k(d), score^(k-1)(d))

where ``score^k`` is the k-Approval score. d is dethroned in round ``k`` when
d has no majority in round ``k - 1`` (q' < maj), ``c`` has one in round
``k`` (p >= maj) and, for Bucklin, ``c`` is not behind d (p >= q).
Simplified Bucklin drops ``q``.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from src.config import Settings, load_settings
from src.election.rules import RuleSpec, approval_scores, majority_threshold
from src.pricing.prices import INFINITY, Cost
from src.solvers.base import BriberyInstance, Solution, best_of, cost_limit, finish, zero_cost_solution
from src.utils.parallel import map_tasks

logger = logging.getLogger(__name__)

State = Tuple[int, int, int]


def _deltas(pos_d: int, pos_c: int, shift: int, k: int) -> State:
    """Change of (score^k(c), score^k(d), score^(k-1)(d)) caused by one shifted vote."""
    new_d = pos_d + shift
    new_c = pos_c - 1 if pos_d < pos_c <= new_d else pos_c
    return (
        int(new_c <= k) - int(pos_c <= k),
        int(new_d <= k) - int(pos_d <= k),
        int(new_d <= k - 1) - int(pos_d <= k - 1),
    )


def _round_dp(task) -> Tuple[Cost, Optional[Tuple[int, ...]]]:
    """Cheapest dethroning bribery for one rival, over every round guess."""
    instance, rival, simplified = task
    election = instance.election
    n, m = instance.n, instance.m
    maj = majority_threshold(n)
    limit = cost_limit(instance)

    best_cost, best_shifts = INFINITY, None
    for k in range(1, m + 1):
        scores_k = approval_scores(election, k)
        scores_prev = approval_scores(election, k - 1)
        start = (int(scores_k[rival]), 0 if simplified else int(scores_k[instance.d]), int(scores_prev[instance.d]))

        layer: Dict[State, Cost] = {start: 0}
        back: List[Dict[State, Tuple[State, int]]] = []
        for j in range(n):
            pos_d = instance.d_positions[j]
            pos_c = int(election.positions[j, rival])
            if pos_d > k:
                back.append({})
                continue
            options = []
            # moving d below position k + 1 changes nothing more
            for shift in range(1, min(k + 1 - pos_d, m - pos_d) + 1):
                cost = instance.cost_table[j][shift]
                if cost > limit:
                    break
                dp, dq, dq_prev = _deltas(pos_d, pos_c, shift, k)
                options.append((shift, cost, (dp, 0 if simplified else dq, dq_prev)))

            new_layer = dict(layer)
            pointers = {state: (state, 0) for state in layer}
            for state, cost in layer.items():
                for shift, price, (dp, dq, dq_prev) in options:
                    total = cost + price
                    if total > limit:
                        continue
                    nxt = (state[0] + dp, state[1] + dq, state[2] + dq_prev)
                    if total < new_layer.get(nxt, INFINITY):
                        new_layer[nxt] = total
                        pointers[nxt] = (state, shift)
            layer = new_layer
            back.append(pointers)

        goal, goal_cost = None, INFINITY
        for (p, q, q_prev), cost in layer.items():
            if q_prev < maj and p >= maj and (simplified or p >= q) and cost < goal_cost:
                goal, goal_cost = (p, q, q_prev), cost

        if goal is not None and goal_cost < best_cost:
            shifts = [0] * n
            state = goal
            for j in range(n - 1, -1, -1):
                if back[j]:
                    state, shifts[j] = back[j][state]
            best_cost, best_shifts = goal_cost, tuple(shifts)
            logger.debug(
                f"rival {election.candidates[rival]}, round {k}: cost {goal_cost}"
            )

    return best_cost, best_shifts


def _solve(instance: BriberyInstance, simplified: bool, settings: Optional[Settings]) -> Solution:
    settings = settings or load_settings()
    rule = RuleSpec.simplified_bucklin() if simplified else RuleSpec.bucklin()
    method = "simplified-bucklin-dp" if simplified else "bucklin-dp"
    zero = zero_cost_solution(instance, rule, method)
    if zero is not None:
        return zero

    tasks = [(instance, c, simplified) for c in range(instance.m) if c != instance.d]
    cost, shifts = best_of(map_tasks(_round_dp, tasks, settings.jobs))
    return finish(instance, cost, shifts, method)


def solve_bucklin(instance: BriberyInstance, settings: Optional[Settings] = None) -> Solution:
    """
    Minimum-cost destructive shift bribery under Bucklin.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    settings : Settings, optional
        Only ``jobs`` is used.
    """
    return _solve(instance, simplified=False, settings=settings)


def solve_simplified_bucklin(instance: BriberyInstance, settings: Optional[Settings] = None) -> Solution:
    """Minimum-cost destructive shift bribery under Simplified Bucklin."""
    return _solve(instance, simplified=True, settings=settings)
