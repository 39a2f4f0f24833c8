"""
Problem instances, solutions and helpers shared by every solver.
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.election.profile import Election, ShiftVector
from src.election.rules import RuleSpec, is_unique_winner_index
from src.errors import DomainError, InputError
from src.pricing.prices import INFINITY, Cost, ListedPrice, PriceFunction, UnitPrice, shift_costs

logger = logging.getLogger(__name__)


class BriberyInstance(BaseModel):
    """
    A Destructive Shift Bribery instance.

    ``budget`` is ``None`` when the budget is unbounded (used for margins).
    """

    model_config = ConfigDict(frozen=True)

    election: Election
    despised: str
    budget: Optional[int] = Field(default=None, ge=0)
    prices: Tuple[PriceFunction, ...]

    @model_validator(mode="after")
    def _check_instance(self) -> "BriberyInstance":
        if self.despised not in self.election.candidates:
            raise ValueError(f"despised candidate {self.despised!r} is not a candidate")
        if len(self.prices) != self.election.n:
            raise ValueError(
                f"{len(self.prices)} price functions given for {self.election.n} voters"
            )
        for i, (fn, pos) in enumerate(zip(self.prices, self.d_positions)):
            if isinstance(fn, ListedPrice) and len(fn.costs) > self.election.m - pos + 1:
                raise ValueError(
                    f"voter {i}: price table lists {len(fn.costs)} values but at most "
                    f"{self.election.m - pos + 1} shifts are feasible"
                )
        return self

    @classmethod
    def with_unit_prices(cls, election: Election, despised: str, budget: Optional[int]) -> "BriberyInstance":
        return cls(election=election, despised=despised, budget=budget, prices=(UnitPrice(),) * election.n)

    @property
    def m(self) -> int:
        return self.election.m

    @property
    def n(self) -> int:
        return self.election.n

    @cached_property
    def d(self) -> int:
        """Index of the despised candidate."""
        return self.election.index_of(self.despised)

    @cached_property
    def d_positions(self) -> Tuple[int, ...]:
        d = self.election.index_of(self.despised)
        return tuple(int(p) for p in self.election.positions[:, d])

    @cached_property
    def cost_table(self) -> Tuple[Tuple[Cost, ...], ...]:
        """``cost_table[i][s]`` is voter ``i``'s price for shift ``s``, for every feasible ``s``."""
        return tuple(
            tuple(shift_costs(fn, pos, self.m)) for fn, pos in zip(self.prices, self.d_positions)
        )

    def within_budget(self, cost: Cost) -> bool:
        if cost == INFINITY:
            return False
        return self.budget is None or cost <= self.budget

    def shift_cost(self, shifts: Sequence[int]) -> Cost:
        total: Cost = 0
        for row, s in zip(self.cost_table, shifts):
            total += row[s] if 0 <= s < len(row) else INFINITY
        return total

    def unbounded(self) -> "BriberyInstance":
        return self.model_copy(update={"budget": None})


class Solution(BaseModel):
    """Outcome of a solver: the optimum cost and a witnessing shift vector, when feasible."""

    model_config = ConfigDict(frozen=True)

    feasible: bool
    min_cost: Optional[int] = None
    shifts: Optional[ShiftVector] = None
    method: str = ""
    status: Literal["optimal", "infeasible"] = "optimal"

    @classmethod
    def found(cls, cost: Cost, shifts: Sequence[int], method: str) -> "Solution":
        return cls(feasible=True, min_cost=int(cost), shifts=tuple(int(s) for s in shifts), method=method)

    @classmethod
    def infeasible(cls, method: str) -> "Solution":
        return cls(feasible=False, method=method, status="infeasible")


def zero_cost_solution(instance: BriberyInstance, rule: RuleSpec, method: str) -> Optional[Solution]:
    """The zero vector when the despised candidate is already not the unique winner."""
    if not is_unique_winner_index(instance.election, rule, instance.d):
        logger.info(f"{instance.despised} is not the unique {rule} winner; nothing to bribe")
        return Solution.found(0, (0,) * instance.n, method)
    return None


def finish(instance: BriberyInstance, cost: Cost, shifts: Optional[Sequence[int]], method: str) -> Solution:
    """Wrap the optimum of a min-cost search, checking the budget last."""
    if shifts is None or not instance.within_budget(cost):
        logger.info(f"{method}: infeasible (best unconstrained cost {cost})")
        return Solution.infeasible(method)
    logger.info(f"{method}: optimum {cost}")
    return Solution.found(cost, shifts, method)


def cost_limit(instance: BriberyInstance) -> Cost:
    """Largest useful total cost during a search."""
    return INFINITY if instance.budget is None else instance.budget


def check_dimensions(instance: BriberyInstance, rule: RuleSpec) -> None:
    if rule.is_positional:
        rule.scoring_vector(instance.m)
    if rule.kind == "maximin" and instance.m < 2:
        raise DomainError("Maximin is undefined for a single candidate")
    if rule.kind not in ("scoring", "k-approval", "borda", "bucklin", "simplified-bucklin", "copeland", "maximin"):
        raise InputError(f"unsupported rule {rule.kind}")


def best_of(results: List[Tuple[Cost, Optional[ShiftVector]]]) -> Tuple[Cost, Optional[ShiftVector]]:
    """Minimum cost over sub-searches; ties go to the earliest one."""
    best: Tuple[Cost, Optional[ShiftVector]] = (INFINITY, None)
    for cost, shifts in results:
        if shifts is not None and cost < best[0]:
            best = (cost, shifts)
    return best
