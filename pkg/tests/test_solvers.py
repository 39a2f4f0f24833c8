import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from src.election.profile import Election
from src.election.rules import RuleSpec
from src.errors import DomainError, InputError, RegimeError
from src.generators.random_instances import gen_random
from src.oracle.brute_force import brute_force, verify
from src.config import Settings
from src.pricing.prices import INFINITY, AllOrNothingPrice
from src.solvers import (
    BriberyInstance,
    margin,
    solve,
    solve_borda,
    solve_bucklin,
    solve_k_approval,
    solve_maximin,
    solve_scoring,
    solve_scoring_unary_prices,
    solve_scoring_unary_scores,
    solve_simplified_bucklin,
)
from src.solvers.base import cost_limit
from tests.conftest import ALL_RULES, instances


def unit_instance(orders, budget=None, despised="d"):
    orders = [o.split() for o in orders]
    election = Election.from_orders(orders[0], orders)
    return BriberyInstance.with_unit_prices(election, despised, budget)


# Example 1
def test_example1_borda(example1_instance):
    solution = solve(example1_instance, RuleSpec.borda())
    assert solution.feasible
    assert solution.min_cost == 2
    assert solution.shifts == (0, 0, 0, 2)
    assert solution.status == "optimal"
    assert solution.method == "scoring-dp-scores"


def test_example1_borda_budget_one(example1_instance):
    instance = example1_instance.model_copy(update={"budget": 1})
    solution = solve(instance, RuleSpec.borda())
    assert not solution.feasible
    assert solution.status == "infeasible"
    assert solution.shifts is None


def test_example1_margin(example1_instance):
    assert margin(example1_instance.model_copy(update={"budget": 0}), RuleSpec.borda()) == 2


def test_already_dethroned_costs_nothing():
    instance = unit_instance(["a d", "d a"], budget=0)
    for rule in ALL_RULES:
        solution = solve(instance, rule)
        assert solution.feasible and solution.min_cost == 0, rule
        assert solution.shifts == (0, 0)


def test_zero_budget_with_a_unique_winner_is_infeasible():
    instance = unit_instance(["d a b", "d b a", "d a b"], budget=0)
    for rule in ALL_RULES:
        assert not solve(instance, rule).feasible, rule


# k-Approval
def test_plurality_greedy():
    instance = unit_instance(["d c x"] * 3, budget=5)
    solution = solve_k_approval(instance, 1)
    assert solution.min_cost == 2
    assert sum(1 for s in solution.shifts if s == 1) == 2
    assert verify(instance, RuleSpec.plurality(), solution.shifts)


def test_k_approval_checks_k():
    instance = unit_instance(["d c x"])
    with pytest.raises(InputError):
        solve_k_approval(instance, 4)


def test_k_approval_only_demoting_d():
    # x sits right behind d in three votes
    instance = unit_instance(["d x c", "d x c", "d x c", "c d x"], budget=10)
    solution = solve_k_approval(instance, 1)
    # x gets 1 per shift and d loses 1: two shifts leave d 1, x 2
    assert solution.min_cost == 2
    assert brute_force(instance, RuleSpec.plurality()).min_cost == 2


# scoring protocols
def test_two_candidate_borda():
    instance = unit_instance(["d c"] * 3, budget=3)
    assert solve(instance, RuleSpec.borda()).min_cost == 2
    assert solve_borda(instance).min_cost == 2


def test_scoring_checks_the_vector(example1_instance):
    with pytest.raises(InputError):
        solve(example1_instance, RuleSpec.scoring((2, 1, 0)))


def test_budget_table_is_used_for_large_scores(example1_instance):
    rule = RuleSpec.scoring((3_000_000, 2_000_000, 1_000_000, 0))
    solution = solve(example1_instance, rule)
    assert solution.method == "scoring-dp-prices"
    assert solution.min_cost == 2


def test_no_table_applies():
    instance = unit_instance(["d a b"] * 2)
    with pytest.raises(RegimeError):
        solve_scoring(instance, (10, 5, 0), Settings(score_bound=1))


@hypothesis_settings(max_examples=150, deadline=None)
@given(instances(max_m=4, max_n=4), st.data())
def test_score_and_price_tables_agree(instance, data):
    vector = tuple(sorted(data.draw(st.lists(st.integers(0, 4), min_size=instance.m, max_size=instance.m)), reverse=True))
    by_score = solve_scoring_unary_scores(instance, vector)
    by_price = solve_scoring_unary_prices(instance, vector)
    assert by_score.feasible == by_price.feasible
    assert by_score.min_cost == by_price.min_cost
    if by_score.feasible:
        rule = RuleSpec.scoring(vector)
        assert verify(instance, rule, by_score.shifts)
        assert verify(instance, rule, by_price.shifts)


@hypothesis_settings(max_examples=150, deadline=None)
@given(instances(max_m=5, max_n=4))
def test_borda_table_matches_the_general_scoring_table(instance):
    general = solve_scoring_unary_scores(instance, RuleSpec.borda().scoring_vector(instance.m))
    borda = solve_borda(instance)
    assert general.min_cost == borda.min_cost
    assert general.shifts == borda.shifts


# Bucklin
def test_bucklin_three_voters():
    instance = unit_instance(["d a b", "d a b", "a d b"], budget=3)
    for solver in (solve_bucklin, solve_simplified_bucklin):
        solution = solver(instance)
        assert solution.min_cost == 1
        assert solution.shifts in ((1, 0, 0), (0, 1, 0))


def test_bucklin_winning_round_can_move_later():
    # d wins in round 1 with three of five votes
    instance = unit_instance(["d a b c", "d b a c", "d c a b", "a b c d", "b a c d"], budget=10)
    rule = RuleSpec.bucklin()
    solution = solve(instance, rule)
    assert solution.min_cost == brute_force(instance, rule).min_cost
    assert verify(instance, rule, solution.shifts)


# Maximin
def test_example1_maximin(example1_instance):
    # d beats everyone 3-1; one pass of a or b ties that rival with d at 2
    rule = RuleSpec.maximin()
    solution = solve(example1_instance, rule)
    assert solution.min_cost == 1
    assert solution.shifts in ((0, 0, 0, 1), (0, 1, 0, 0))
    assert verify(example1_instance, rule, solution.shifts)
    assert brute_force(example1_instance, rule, prune=False).min_cost == 1


def test_maximin_two_candidates():
    instance = unit_instance(["d c"] * 5, budget=10)
    solution = solve_maximin(instance)
    assert solution.min_cost == 3
    assert verify(instance, RuleSpec.maximin(), solution.shifts)


def test_maximin_needs_two_candidates():
    instance = BriberyInstance.with_unit_prices(Election.from_orders(["d"], [["d"]]), "d", 1)
    with pytest.raises(DomainError):
        solve_maximin(instance)
    with pytest.raises(DomainError):
        solve(instance, RuleSpec.maximin())


def test_margin_is_infinite_when_nobody_can_be_bribed():
    election = Election.from_orders(["d", "a"], [["d", "a"]] * 3)
    instance = BriberyInstance(
        election=election, despised="d", budget=None, prices=(AllOrNothingPrice(),) * 3
    )
    for rule in ALL_RULES:
        if rule.kind == "k-approval" and rule.k == 2:
            continue
        assert margin(instance, rule) == INFINITY, rule


def test_parallel_run_matches_the_sequential_one():
    instance = gen_random(5, 6, seed=7, price_model="list:4", rule=RuleSpec.maximin())
    sequential = solve(instance, RuleSpec.maximin(), Settings(jobs=1))
    parallel = solve(instance, RuleSpec.maximin(), Settings(jobs=2))
    assert sequential == parallel


def test_cost_limit(example1_instance):
    assert cost_limit(example1_instance) == 2
    assert cost_limit(example1_instance.unbounded()) == INFINITY


@hypothesis_settings(max_examples=150, deadline=None)
@given(instances(max_m=4, max_n=4), st.sampled_from(ALL_RULES), st.integers(0, 6), st.integers(0, 4))
def test_more_budget_never_costs_more(instance, rule, budget, extra):
    low = solve(instance.model_copy(update={"budget": budget}), rule)
    high = solve(instance.model_copy(update={"budget": budget + extra}), rule)
    if low.feasible:
        assert high.feasible
        assert high.min_cost == low.min_cost
    if high.feasible and high.min_cost <= budget:
        assert low.feasible
