"""
Greedy solver for k-Approval (Plurality is k = 1).
"""

import logging

import numpy as np

from src.election.rules import RuleSpec, approval_scores, check_k
from src.pricing.prices import INFINITY
from src.solvers.base import BriberyInstance, Solution, finish, zero_cost_solution

logger = logging.getLogger(__name__)

METHOD = "k-approval-greedy"


def solve_k_approval(instance: BriberyInstance, k: int) -> Solution:
    """
    Minimum-cost destructive shift bribery under k-Approval.

    Pushing d to position k + 1 is the only useful move: in voters that rank
    a rival c at position k + 1 it also gives c a point, elsewhere it only
    takes d's point away. For every rival the cheapest voters of each kind
    are taken greedily.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    k : int
        Approval threshold, ``1 <= k <= m``.

    Returns
    -------
    Solution
        Optimal shifts, or an infeasible solution.
    """
    check_k(k, instance.m)
    zero = zero_cost_solution(instance, RuleSpec.k_approval(k), METHOD)
    if zero is not None:
        return zero

    election, d = instance.election, instance.d
    scores = approval_scores(election, k)
    positions = election.positions

    best_cost, best_shifts = INFINITY, None
    if k < instance.m:
        # price of dropping d to position k + 1, for voters ranking d in the top k
        drop = {}
        for v, pos in enumerate(instance.d_positions):
            if pos <= k:
                cost = instance.cost_table[v][k + 1 - pos]
                if cost != INFINITY:
                    drop[v] = cost

        for c in range(instance.m):
            if c == d:
                continue
            at_threshold = positions[:, c] == k + 1
            with_c = sorted((cost, v) for v, cost in drop.items() if at_threshold[v])
            without_c = sorted((cost, v) for v, cost in drop.items() if not at_threshold[v])
            deficit = int(scores[d] - scores[c])
            logger.debug(
                f"rival {election.candidates[c]}: deficit {deficit}, "
                f"{len(with_c)} voters move it up, {len(without_c)} only demote d"
            )

            prefix_with = np.concatenate(([0], np.cumsum([cost for cost, _ in with_c])))
            prefix_without = np.concatenate(([0], np.cumsum([cost for cost, _ in without_c])))
            for a in range(len(with_c) + 1):
                # score(c) + a >= score(d) - a - b
                b = max(0, deficit - 2 * a)
                if b > len(without_c):
                    continue
                cost = int(prefix_with[a] + prefix_without[b])
                if cost < best_cost:
                    shifts = [0] * instance.n
                    for _, v in with_c[:a] + without_c[:b]:
                        shifts[v] = k + 1 - instance.d_positions[v]
                    best_cost, best_shifts = cost, tuple(shifts)

    return finish(instance, best_cost, best_shifts, METHOD)
