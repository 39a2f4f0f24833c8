"""
Rule dispatch and destructive margins.
"""

from __future__ import annotations

import logging
from typing import Optional

from src.config import Settings, load_settings
from src.election.rules import RuleSpec
from src.pricing.prices import INFINITY, Cost
from src.solvers.approval import solve_k_approval
from src.solvers.base import BriberyInstance, Solution, check_dimensions
from src.solvers.bucklin import solve_bucklin, solve_simplified_bucklin
from src.solvers.copeland import solve_copeland
from src.solvers.maximin import solve_maximin
from src.solvers.scoring import solve_scoring

logger = logging.getLogger(__name__)


def solve(instance: BriberyInstance, rule: RuleSpec, settings: Optional[Settings] = None) -> Solution:
    """
    Solve ``instance`` with the algorithm for ``rule``.

    Parameters
    ----------
    instance : BriberyInstance
        The instance to solve.
    rule : RuleSpec
        The voting rule.
    settings : Settings, optional
        Limits and worker count; defaults to ``load_settings()``.

    Returns
    -------
    Solution
        The optimum, or an infeasible solution.
    """
    settings = settings or load_settings()
    check_dimensions(instance, rule)
    logger.info(f"solving for {rule} with {instance.m} candidates and {instance.n} voters")

    if rule.kind == "k-approval":
        return solve_k_approval(instance, rule.k)
    if rule.is_positional:
        return solve_scoring(instance, rule.scoring_vector(instance.m), settings)
    if rule.kind == "bucklin":
        return solve_bucklin(instance, settings)
    if rule.kind == "simplified-bucklin":
        return solve_simplified_bucklin(instance, settings)
    if rule.kind == "maximin":
        return solve_maximin(instance, settings)
    return solve_copeland(instance, rule.alpha, settings)


def margin(instance: BriberyInstance, rule: RuleSpec, settings: Optional[Settings] = None) -> Cost:
    """
    Smallest budget for which ``instance`` becomes feasible.

    The instance's own budget is ignored. Returns ``INFINITY`` when no shift
    vector dethrones the despised candidate.
    """
    solution = solve(instance.unbounded(), rule, settings)
    return solution.min_cost if solution.feasible else INFINITY
