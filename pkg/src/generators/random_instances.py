"""
Seeded random instances for tests and benchmarks.
"""

from __future__ import annotations

import logging
import re
from typing import Optional

import numpy as np

from src.election.profile import Election
from src.election.rules import RuleSpec, winner_indices
from src.errors import InputError
from src.pricing.prices import AllOrNothingPrice, ListedPrice, UnitPrice
from src.solvers.base import BriberyInstance

logger = logging.getLogger(__name__)

_PRICE_MODEL = re.compile(r"^(unit|aon|list)(?::(\d+))?$")


def parse_price_model(price_model: str):
    """Split ``"unit"``, ``"aon:5"`` or ``"list:5"`` into kind and maximum price."""
    match = _PRICE_MODEL.match(price_model.strip().lower())
    if not match:
        raise InputError(f"unknown price model {price_model!r}; use unit, aon:<max> or list:<max>")
    kind, limit = match.group(1), match.group(2)
    if kind != "unit" and limit is None:
        raise InputError(f"price model {kind} needs a maximum price, e.g. {kind}:5")
    return kind, int(limit) if limit is not None else None


def gen_random(
    m: int,
    n: int,
    seed: int,
    price_model: str = "unit",
    budget: Optional[int] = None,
    rule: Optional[RuleSpec] = None,
) -> BriberyInstance:
    """
    Random election with uniformly random votes and random prices.

    Parameters
    ----------
    m, n : int
        Number of candidates (at least 2) and voters (at least 1).
    seed : int
        Seed of the numpy generator; equal inputs give equal instances.
    price_model : str, optional
        ``"unit"``, ``"aon:<max>"`` (all-or-nothing, price drawn from
        ``0..max``) or ``"list:<max>"`` (sorted draws from ``0..max``).
    budget : int, optional
        The budget; None leaves it unbounded.
    rule : RuleSpec, optional
        The despised candidate is this rule's winner when it is unique,
        otherwise the first candidate.
    """
    if m < 2 or n < 1:
        raise InputError(f"need m >= 2 and n >= 1, got m={m}, n={n}")
    kind, limit = parse_price_model(price_model)
    rng = np.random.default_rng(seed)

    candidates = tuple(f"c{i}" for i in range(m))
    rankings = tuple(tuple(int(c) for c in rng.permutation(m)) for _ in range(n))
    election = Election(candidates=candidates, rankings=rankings)

    despised = 0
    if rule is not None:
        top = winner_indices(election, rule)
        if len(top) == 1:
            despised = next(iter(top))

    prices = []
    for v in range(n):
        feasible = m - int(election.positions[v, despised])
        if kind == "unit":
            prices.append(UnitPrice())
        elif kind == "aon":
            prices.append(AllOrNothingPrice(cost=int(rng.integers(0, limit + 1))))
        else:
            draws = sorted(int(x) for x in rng.integers(0, limit + 1, size=feasible))
            prices.append(ListedPrice(costs=(0, *draws)))

    return BriberyInstance(
        election=election, despised=candidates[despised], budget=budget, prices=tuple(prices)
    )
