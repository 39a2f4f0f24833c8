"""
Exact exponential solvers for Copeland^alpha.

Destructive shift bribery is NP-hard for Copeland, so both solvers search.
Only d's head-to-head margins ``M(c) = N(d, c) - N(c, d)`` change when d
moves back: every vote in which d passes ``c`` lowers ``M(c)`` by two.
Scores are kept as integers scaled by the denominator of alpha.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from src.config import Settings, load_settings
from src.election.rules import RuleSpec
from src.errors import RegimeError, ResourceLimitError
from src.pricing.prices import INFINITY, AllOrNothingPrice, Cost
from src.solvers.base import BriberyInstance, Solution, cost_limit, finish, zero_cost_solution

logger = logging.getLogger(__name__)


class CopelandState:
    """
    Copeland bookkeeping for d against every rival.

    Parameters
    ----------
    instance : BriberyInstance
        The instance.
    alpha : Fraction
        Tie value in [0, 1].
    """

    def __init__(self, instance: BriberyInstance, alpha: Fraction):
        alpha = Fraction(alpha)
        self.instance = instance
        self.d = instance.d
        self.win = alpha.denominator
        self.tie = alpha.numerator
        counts = instance.election.pairwise.astype(np.int64)
        m = instance.m

        wins = (counts > counts.T).sum(axis=1)
        ties = (counts == counts.T).sum(axis=1) - 1
        scaled = wins * self.win + ties * self.tie
        # margins of d; entry d is unused
        self.margins = counts[self.d] - counts[:, self.d]
        self.rivals = np.array([c for c in range(m) if c != self.d], dtype=np.int64)
        # rival scores without their result against d
        self.rival_base = scaled[self.rivals] - self._rival_points(self.margins[self.rivals])

        positions = instance.election.positions
        self.passable = positions[:, self.rivals] > positions[:, [self.d]]

    def _d_points(self, margins: np.ndarray) -> np.ndarray:
        return np.where(margins > 0, self.win, np.where(margins == 0, self.tie, 0))

    def _rival_points(self, margins: np.ndarray) -> np.ndarray:
        return np.where(margins < 0, self.win, np.where(margins == 0, self.tie, 0))

    def dethroned(self, passes: np.ndarray) -> bool:
        """
        Whether d is not the unique winner after passing each rival ``passes[i]`` times.

        ``passes`` is indexed like ``self.rivals``.
        """
        if len(self.rivals) == 0:
            return False
        margins = self.margins[self.rivals] - 2 * passes
        d_score = self._d_points(margins).sum()
        rival_scores = self.rival_base + self._rival_points(margins)
        return bool(rival_scores.max() >= d_score)

    def passed(self, voter: int, shift: int) -> np.ndarray:
        """0/1 vector of rivals d passes in ``voter`` when shifted back ``shift`` places."""
        positions = self.instance.election.positions
        pos_d = self.instance.d_positions[voter]
        rival_pos = positions[voter, self.rivals]
        return ((rival_pos > pos_d) & (rival_pos <= pos_d + shift)).astype(np.int64)


def solve_copeland_bnb(
    instance: BriberyInstance,
    alpha: Fraction,
    settings: Optional[Settings] = None,
) -> Solution:
    """
    Depth-first branch and bound over voters.

    In each vote d either stays, moves directly below a rival whose
    head-to-head result against d can still be overturned, or moves to the
    last position. A branch is cut when its cost reaches the best solution
    so far or when even passing every reachable rival in the remaining votes
    leaves d the unique winner.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    alpha : Fraction
        Copeland tie value.
    settings : Settings, optional
        ``node_limit`` bounds the search.

    Raises
    ------
    ResourceLimitError
        When the node limit is exceeded; carries the best solution found.
    """
    method = "copeland-bnb"
    settings = settings or load_settings()
    zero = zero_cost_solution(instance, RuleSpec.copeland(alpha), method)
    if zero is not None:
        return zero

    state = CopelandState(instance, alpha)
    n = instance.n
    limit = cost_limit(instance)

    # rival reachable in a vote: ranked below d and d can afford passing it
    reach = np.zeros((n, len(state.rivals)), dtype=np.int64)
    for v in range(n):
        costs = instance.cost_table[v]
        pos_d = instance.d_positions[v]
        for i, c in enumerate(state.rivals):
            if state.passable[v, i]:
                shift = int(instance.election.positions[v, c]) - pos_d
                reach[v, i] = costs[shift] <= limit
    # capacity[j] = passes still available in voters j..n-1
    capacity = np.concatenate((np.cumsum(reach[::-1], axis=0)[::-1], np.zeros((1, len(state.rivals)), dtype=np.int64)))
    rival_margins = state.margins[state.rivals]

    best: List = [INFINITY if instance.budget is None else instance.budget + 1, None]
    shifts = [0] * n
    nodes = 0

    def optimistic_dethroned(passes: np.ndarray, j: int) -> bool:
        return state.dethroned(passes + capacity[j])

    def options(v: int, passes: np.ndarray, j: int) -> List[Tuple[int, Cost, np.ndarray]]:
        costs = instance.cost_table[v]
        pos_d = instance.d_positions[v]
        current = rival_margins - 2 * passes
        losable = (current - 2 * capacity[j]) <= 0
        shifts_below = sorted(
            {
                int(instance.election.positions[v, c]) - pos_d
                for i, c in enumerate(state.rivals)
                if reach[v, i] and losable[i]
            }
            | {instance.m - pos_d}
        )
        result = [(0, 0, np.zeros(len(state.rivals), dtype=np.int64))]
        covered = result[0][2]
        for shift in shifts_below:
            if shift == 0 or costs[shift] > limit:
                continue
            moved = state.passed(v, shift)
            # a longer shift is only worth it if it passes a new losable rival
            if not np.any((moved > covered) & losable):
                continue
            result.append((shift, costs[shift], moved))
            covered = moved
        return result

    def search(j: int, cost: Cost, passes: np.ndarray) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > settings.node_limit:
            raise ResourceLimitError(
                "Copeland branch and bound exceeded its node limit",
                nodes,
                best[0] if best[1] is not None else None,
                best[1],
            )
        if cost >= best[0]:
            return
        if state.dethroned(passes):
            best[0], best[1] = cost, tuple(shifts)
            logger.debug(f"improved to cost {cost} after {nodes} nodes")
            return
        if j == n or not optimistic_dethroned(passes, j):
            return
        for shift, price, moved in options(j, passes, j):
            total = cost + price
            if total >= best[0]:
                continue
            shifts[j] = shift
            search(j + 1, total, passes + moved)
        shifts[j] = 0

    search(0, 0, np.zeros(len(state.rivals), dtype=np.int64))
    logger.info(f"branch and bound visited {nodes} nodes")
    return finish(instance, best[0], best[1], method)


def _all_or_nothing(instance: BriberyInstance) -> bool:
    return all(isinstance(fn, AllOrNothingPrice) for fn in instance.prices)


def fpt_regime(instance: BriberyInstance, settings: Settings) -> Optional[str]:
    """
    Name of the enumeration regime that applies to ``instance``, or None.

    ``"subsets"``: all-or-nothing prices and few bribable voters.
    ``"budget"``: a finite budget small enough to enumerate its distributions.
    """
    bribable = [v for v, pos in enumerate(instance.d_positions) if pos < instance.m]
    if _all_or_nothing(instance) and len(bribable) <= settings.fpt_max_voters:
        return "subsets"
    if instance.budget is not None:
        if math.comb(instance.budget + len(bribable), len(bribable)) <= settings.fpt_enumeration_limit:
            return "budget"
    return None


def solve_copeland_fpt(
    instance: BriberyInstance,
    alpha: Fraction,
    settings: Optional[Settings] = None,
) -> Solution:
    """
    Exact enumeration for two tractable regimes.

    With all-or-nothing prices every subset of voters is tried, d going to
    the last position in each chosen vote. With a small budget every way of
    spending it over the voters is tried, each voter taking the longest
    shift its share pays for. Backward shifts never help d, so both are exact.

    Raises
    ------
    RegimeError
        If neither regime applies; use ``solve_copeland_bnb`` instead.
    """
    settings = settings or load_settings()
    regime = fpt_regime(instance, settings)
    if regime is None:
        raise RegimeError(
            "no enumeration regime applies (prices are not all-or-nothing with at most "
            f"{settings.fpt_max_voters} bribable voters, and the budget is too large); "
            "use solve_copeland_bnb"
        )
    method = f"copeland-fpt-{regime}"
    zero = zero_cost_solution(instance, RuleSpec.copeland(alpha), method)
    if zero is not None:
        return zero

    state = CopelandState(instance, alpha)
    n = instance.n
    limit = cost_limit(instance)

    # per voter: (shift, price, passed rivals), cheapest first
    levels: List[List[Tuple[int, Cost, np.ndarray]]] = []
    for v in range(n):
        costs = instance.cost_table[v]
        top = len(costs) - 1
        choices = [(0, 0, np.zeros(len(state.rivals), dtype=np.int64))]
        if regime == "subsets":
            if top > 0 and costs[top] <= limit:
                choices.append((top, costs[top], state.passed(v, top)))
        else:
            # longest shift for every distinct affordable price
            for shift in range(1, top + 1):
                if costs[shift] > limit:
                    break
                if shift == top or costs[shift + 1] > costs[shift]:
                    if costs[shift] == choices[-1][1]:
                        choices.pop()
                    choices.append((shift, costs[shift], state.passed(v, shift)))
        levels.append(choices)
    logger.info(f"{method}: enumerating {math.prod(len(c) for c in levels)} combinations at most")

    best: List = [INFINITY if instance.budget is None else instance.budget + 1, None]
    shifts = [0] * n

    def search(j: int, cost: Cost, passes: np.ndarray) -> None:
        if cost >= best[0]:
            return
        if j == n:
            if state.dethroned(passes):
                best[0], best[1] = cost, tuple(shifts)
            return
        for shift, price, moved in levels[j]:
            shifts[j] = shift
            search(j + 1, cost + price, passes + moved)
        shifts[j] = 0

    search(0, 0, np.zeros(len(state.rivals), dtype=np.int64))
    return finish(instance, best[0], best[1], method)


def solve_copeland(
    instance: BriberyInstance,
    alpha: Fraction,
    settings: Optional[Settings] = None,
) -> Solution:
    """Enumeration when a tractable regime applies, branch and bound otherwise."""
    settings = settings or load_settings()
    if fpt_regime(instance, settings) is not None:
        return solve_copeland_fpt(instance, alpha, settings)
    return solve_copeland_bnb(instance, alpha, settings)
