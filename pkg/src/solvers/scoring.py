"""
Dynamic programs for scoring protocols.

For every rival ``c`` the despised candidate's lead ``s = score(d) - score(c)``
has to be closed. Shifting d back ``k'`` places in a vote costs the voter's
price and closes the lead by

    gain = (alpha[pos(d)] - alpha[pos(d) + k'])
           + [c among the k' candidates passed] * (alpha[pos(c) - 1] - alpha[pos(c)])

Two tables are available: one indexed by the lead (small scores) and one
indexed by the budget (small prices).
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.config import Settings, load_settings
from src.election.rules import RuleSpec, check_vector, scoring_scores
from src.errors import RegimeError
from src.pricing.prices import INFINITY, Cost
from src.solvers.base import BriberyInstance, Solution, best_of, cost_limit, finish, zero_cost_solution
from src.utils.parallel import map_tasks

logger = logging.getLogger(__name__)

Option = Tuple[int, Cost, int]  # (shift, price, gain)


def voter_options(
    instance: BriberyInstance, vector: Sequence[int], voter: int, rival: int
) -> List[Option]:
    """Affordable shifts of one voter with their price and the lead they close."""
    pos_d = instance.d_positions[voter]
    pos_c = int(instance.election.positions[voter, rival])
    costs = instance.cost_table[voter]
    limit = cost_limit(instance)
    options = []
    for shift, cost in enumerate(costs):
        if cost == INFINITY or cost > limit:
            break
        gain = vector[pos_d - 1] - vector[pos_d + shift - 1]
        if pos_d < pos_c <= pos_d + shift:
            gain += vector[pos_c - 2] - vector[pos_c - 1]
        options.append((shift, cost, int(gain)))
    return options


def budget_bound(instance: BriberyInstance) -> int:
    """The budget, or the most any shift vector can cost when it is unbounded."""
    if instance.budget is not None:
        return instance.budget
    total = 0
    for costs in instance.cost_table:
        total += max(c for c in costs if c != INFINITY)
    return int(total)


def _lead_dp(task) -> Tuple[Cost, Optional[Tuple[int, ...]]]:
    """Cheapest way to close the lead of d over one rival; table indexed by lead."""
    instance, vector, rival = task
    scores = instance_scores(instance, vector)
    lead = int(scores[instance.d] - scores[rival])
    if lead <= 0:
        return 0, (0,) * instance.n

    ks = np.arange(lead + 1)
    table = np.full(lead + 1, np.inf)
    table[0] = 0.0
    choices = np.zeros((instance.n, lead + 1), dtype=np.int32)
    gains = [None] * instance.n
    # last voter first: ties leave earlier voters unbribed
    for j in range(instance.n - 1, -1, -1):
        options = voter_options(instance, vector, j, rival)
        gains[j] = {shift: gain for shift, _, gain in options}
        new = np.full(lead + 1, np.inf)
        for shift, cost, gain in options:
            candidate = table[np.maximum(ks - gain, 0)] + cost
            better = candidate < new
            new[better] = candidate[better]
            choices[j, better] = shift
        table = new

    if table[lead] == np.inf:
        return INFINITY, None

    shifts = [0] * instance.n
    k = lead
    for j in range(instance.n):
        shift = int(choices[j, k])
        shifts[j] = shift
        k = max(0, k - gains[j][shift])
    return instance.shift_cost(shifts), tuple(shifts)


def _budget_dp(task) -> Tuple[Cost, Optional[Tuple[int, ...]]]:
    """Cheapest way to close the lead of d over one rival; table indexed by budget."""
    instance, vector, rival, bound = task
    scores = instance_scores(instance, vector)
    lead = scores[instance.d] - scores[rival]
    if lead <= 0:
        return 0, (0,) * instance.n

    dtype = np.int64 if instance.n * vector[0] < 2**62 else object
    table = np.zeros(bound + 1, dtype=dtype)
    choices = np.zeros((instance.n, bound + 1), dtype=np.int32)
    for j in range(instance.n - 1, -1, -1):
        new = table.copy()
        for shift, cost, gain in voter_options(instance, vector, j, rival):
            if shift == 0 or cost > bound:
                continue
            cost = int(cost)
            candidate = table[: bound + 1 - cost] + gain
            better = candidate > new[cost:]
            new[cost:][better] = candidate[better]
            choices[j, cost:][better] = shift
        table = new

    reached = np.nonzero(table >= lead)[0]
    if len(reached) == 0:
        return INFINITY, None

    t = int(reached[0])
    shifts = [0] * instance.n
    for j in range(instance.n):
        shift = int(choices[j, t])
        shifts[j] = shift
        t -= int(instance.cost_table[j][shift])
    return instance.shift_cost(shifts), tuple(shifts)


def instance_scores(instance: BriberyInstance, vector: Sequence[int]) -> np.ndarray:
    return scoring_scores(instance.election, vector)


def _rivals(instance: BriberyInstance) -> List[int]:
    return [c for c in range(instance.m) if c != instance.d]


def solve_scoring_unary_scores(
    instance: BriberyInstance,
    vector: Sequence[int],
    settings: Optional[Settings] = None,
) -> Solution:
    """
    Score-deficit dynamic program for scoring protocols with small scores.

    Runs in O(n * s * m) per rival, where ``s`` is d's lead over that rival.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    vector : sequence of int
        Nonincreasing scoring vector of length ``m``.
    settings : Settings, optional
        Only ``jobs`` is used.
    """
    method = "scoring-dp-scores"
    settings = settings or load_settings()
    vector = tuple(int(a) for a in vector)
    check_vector(vector, instance.m)
    zero = zero_cost_solution(instance, RuleSpec.scoring(vector), method)
    if zero is not None:
        return zero

    tasks = [(instance, vector, c) for c in _rivals(instance)]
    cost, shifts = best_of(map_tasks(_lead_dp, tasks, settings.jobs))
    return finish(instance, cost, shifts, method)


def solve_scoring_unary_prices(
    instance: BriberyInstance,
    vector: Sequence[int],
    settings: Optional[Settings] = None,
) -> Solution:
    """
    Budget-indexed dynamic program for scoring protocols with small prices.

    ``f(j, t)`` is the largest amount of d's lead over the rival that the
    first ``j`` voters can close at cost at most ``t``. The optimum is the
    smallest ``t`` whose value reaches the lead. Scores may be large.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    vector : sequence of int
        Nonincreasing scoring vector of length ``m``.
    settings : Settings, optional
        Only ``jobs`` is used.
    """
    method = "scoring-dp-prices"
    settings = settings or load_settings()
    vector = tuple(int(a) for a in vector)
    check_vector(vector, instance.m)
    zero = zero_cost_solution(instance, RuleSpec.scoring(vector), method)
    if zero is not None:
        return zero

    bound = budget_bound(instance)
    logger.debug(f"budget table has {bound + 1} columns")
    tasks = [(instance, vector, c, bound) for c in _rivals(instance)]
    cost, shifts = best_of(map_tasks(_budget_dp, tasks, settings.jobs))
    return finish(instance, cost, shifts, method)


def solve_borda(instance: BriberyInstance) -> Solution:
    """
    Borda-only version of the score-deficit program.

    Shifting d back ``k'`` places gains ``k'`` points against every rival and
    one more against a rival it passes.
    """
    method = "borda-dp"
    zero = zero_cost_solution(instance, RuleSpec.borda(), method)
    if zero is not None:
        return zero

    m, n, d = instance.m, instance.n, instance.d
    positions = instance.election.positions
    borda = [int(s) for s in (m - positions).sum(axis=0)]
    limit = cost_limit(instance)

    best_cost, best_shifts = INFINITY, None
    for c in range(m):
        if c == d:
            continue
        lead = borda[d] - borda[c]
        f = [0] + [INFINITY] * lead
        back = [None] * n
        for j in range(n - 1, -1, -1):
            pos_d, pos_c = instance.d_positions[j], int(positions[j, c])
            g = f[:]
            pick = [0] * (lead + 1)
            for shift in range(1, m - pos_d + 1):
                cost = instance.cost_table[j][shift]
                if cost > limit:
                    break
                gain = shift + (1 if pos_d < pos_c <= pos_d + shift else 0)
                for k in range(lead + 1):
                    value = f[max(0, k - gain)] + cost
                    if value < g[k]:
                        g[k] = value
                        pick[k] = shift
            f = g
            back[j] = pick

        if f[lead] < best_cost:
            shifts = [0] * n
            k = lead
            for j in range(n):
                shift = back[j][k]
                shifts[j] = shift
                if shift:
                    pos_d, pos_c = instance.d_positions[j], int(positions[j, c])
                    k = max(0, k - shift - (1 if pos_d < pos_c <= pos_d + shift else 0))
            best_cost, best_shifts = instance.shift_cost(shifts), tuple(shifts)

    return finish(instance, best_cost, best_shifts, method)


def solve_scoring(
    instance: BriberyInstance,
    vector: Sequence[int],
    settings: Optional[Settings] = None,
) -> Solution:
    """
    Pick the applicable dynamic program.

    The score-indexed table is used while ``n * alpha_1`` stays within
    ``settings.score_bound``, the budget-indexed one while the budget does.
    """
    settings = settings or load_settings()
    vector = tuple(int(a) for a in vector)
    check_vector(vector, instance.m)
    if instance.n * vector[0] <= settings.score_bound:
        logger.info("scores are small: using the score-deficit table")
        return solve_scoring_unary_scores(instance, vector, settings)
    bound = budget_bound(instance)
    if bound <= settings.score_bound:
        logger.info("prices are small: using the budget table")
        return solve_scoring_unary_prices(instance, vector, settings)
    raise RegimeError(
        f"neither the total score ({instance.n * vector[0]}) nor the budget ({bound}) "
        f"is within the score bound {settings.score_bound}"
    )
