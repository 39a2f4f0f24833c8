"""
Backward-shift price functions.

Three families are supported: listed tables, unit prices and
all-or-nothing prices. A function only stores its finite values; shifting
the despised candidate past the last position always costs ``INFINITY``.
"""

from __future__ import annotations

import math
from typing import Annotated, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.election.profile import Election

INFINITY = math.inf
# Largest finite price; keeps float DP tables exact.
MAX_PRICE = 2**40

Cost = Union[int, float]


class UnitPrice(BaseModel):
    """Shifting by ``i`` positions costs ``i``."""

    model_config = ConfigDict(frozen=True)
    kind: Literal["unit"] = "unit"

    def value(self, shift: int) -> Cost:
        return shift


class AllOrNothingPrice(BaseModel):
    """Any nonzero shift costs ``cost``; ``None`` means the voter cannot be bribed."""

    model_config = ConfigDict(frozen=True)
    kind: Literal["aon"] = "aon"
    cost: Optional[int] = Field(default=None, ge=0, le=MAX_PRICE)

    def value(self, shift: int) -> Cost:
        if shift == 0:
            return 0
        return INFINITY if self.cost is None else self.cost


class ListedPrice(BaseModel):
    """
    Explicit table: ``costs[i]`` is the price of shifting by ``i``.

    Shifts beyond the table cost ``INFINITY``.
    """

    model_config = ConfigDict(frozen=True)
    kind: Literal["list"] = "list"
    costs: Tuple[int, ...]

    @field_validator("costs")
    @classmethod
    def _check_costs(cls, costs: Tuple[int, ...]) -> Tuple[int, ...]:
        if not costs or costs[0] != 0:
            raise ValueError("a listed price function must start with rho(0) = 0")
        if any(c < 0 or c > MAX_PRICE for c in costs):
            raise ValueError(f"listed prices must lie in [0, {MAX_PRICE}]")
        if any(a > b for a, b in zip(costs, costs[1:])):
            raise ValueError("listed prices must be nondecreasing")
        return costs

    def value(self, shift: int) -> Cost:
        return self.costs[shift] if shift < len(self.costs) else INFINITY


PriceFunction = Annotated[
    Union[UnitPrice, AllOrNothingPrice, ListedPrice],
    Field(discriminator="kind"),
]


def price(fn: PriceFunction, d_position: int, shift: int, num_candidates: int) -> Cost:
    """
    Price of shifting the despised candidate back by ``shift`` positions.

    Parameters
    ----------
    fn : PriceFunction
        The voter's price function.
    d_position : int
        Current 1-based position of the despised candidate in the vote.
    shift : int
        Requested backward shift.
    num_candidates : int
        Number of candidates ``m``; shifts beyond ``m - d_position`` cost ``INFINITY``.
    """
    if shift == 0:
        return 0
    if shift < 0 or shift > num_candidates - d_position:
        return INFINITY
    return fn.value(shift)


def shift_costs(fn: PriceFunction, d_position: int, num_candidates: int) -> List[Cost]:
    """Prices of every feasible shift ``0 .. m - d_position``."""
    return [price(fn, d_position, s, num_candidates) for s in range(num_candidates - d_position + 1)]


def total_cost(
    prices: Sequence[PriceFunction],
    election: Election,
    despised: str,
    shifts: Sequence[int],
) -> Cost:
    """Sum of the per-voter prices; saturates at ``INFINITY``."""
    d = election.index_of(despised)
    total: Cost = 0
    for fn, pos, shift in zip(prices, election.positions[:, d], shifts):
        total += price(fn, int(pos), int(shift), election.m)
        if total == INFINITY:
            return INFINITY
    return total


def is_finite(cost: Cost) -> bool:
    return cost != INFINITY
