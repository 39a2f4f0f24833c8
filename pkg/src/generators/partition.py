"""
Scoring-protocol instances encoding Partition.

Voter ``i`` stands for the element ``s_i``: d sits at position ``i + 1``
and pushing it out of the scoring positions costs exactly ``s_i``. With a
budget of half the sum, d can be dethroned iff the sequence splits into two
halves of equal sum.
"""

import logging
from typing import Sequence

from src.election.profile import Election
from src.election.rules import RuleSpec
from src.errors import InputError
from src.generators.base import GeneratedInstance
from src.pricing.prices import ListedPrice
from src.solvers.base import BriberyInstance

logger = logging.getLogger(__name__)


def gen_partition(seq: Sequence[int]) -> GeneratedInstance:
    """
    Build the scoring-protocol instance for a Partition sequence.

    Parameters
    ----------
    seq : sequence of int
        Positive integers with an even sum whose largest element is below
        half the sum. Sorted into nonincreasing order internally.

    Returns
    -------
    GeneratedInstance
        The instance (budget half the sum) and its scoring rule.
    """
    values = sorted((int(x) for x in seq), reverse=True)
    if not values:
        raise InputError("the sequence is empty")
    if any(x <= 0 for x in values):
        raise InputError("sequence values must be positive")
    total = sum(values)
    if total % 2:
        raise InputError(f"the sum {total} is odd, so no equal split exists")
    half = total // 2
    if values[0] == half:
        raise InputError(f"the largest value {values[0]} is half the sum; the split is trivial")
    if values[0] > half:
        raise InputError(f"the largest value {values[0]} exceeds half the sum; no equal split exists")

    n = len(values)
    dummies = [[f"c{i}_{j}" for j in range(1, n + 1)] for i in range(1, n + 1)]
    candidates = ["d"] + [f"p{i}" for i in range(1, n + 1)] + [c for row in dummies for c in row]
    m = len(candidates)

    orders = []
    prices = []
    budget = half
    for i in range(1, n + 1):
        row = dummies[i - 1]
        top = [f"p{i}"] + row[: i - 1] + ["d"] + row[i - 1 :]
        placed = set(top)
        orders.append(top + [c for c in candidates if c not in placed])
        # d starts at position i + 1
        feasible = m - (i + 1)
        reach = n - i + 1
        prices.append(ListedPrice(costs=(0,) + (values[i - 1],) * reach + (budget + 1,) * (feasible - reach)))

    vector = (half,) + tuple(values) + (0,) * (m - n - 1)
    election = Election.from_orders(candidates, orders)
    logger.info(f"partition instance: {n} voters, {m} candidates, budget {budget}")
    instance = BriberyInstance(election=election, despised="d", budget=budget, prices=tuple(prices))
    return GeneratedInstance(instance, RuleSpec.scoring(vector))
