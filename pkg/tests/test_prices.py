import pytest
from hypothesis import given, strategies as st
from pydantic import TypeAdapter

from src.pricing.prices import (
    INFINITY,
    MAX_PRICE,
    AllOrNothingPrice,
    ListedPrice,
    PriceFunction,
    UnitPrice,
    price,
    shift_costs,
    total_cost,
)
from src.generators.partition import gen_partition
from tests.conftest import price_functions


def test_unit_price():
    assert price(UnitPrice(), 1, 3, 4) == 3
    assert price(UnitPrice(), 2, 3, 4) == INFINITY
    assert price(UnitPrice(), 4, 0, 4) == 0


def test_all_or_nothing_price():
    fn = AllOrNothingPrice(cost=5)
    assert [price(fn, 1, s, 4) for s in range(4)] == [0, 5, 5, 5]
    assert price(AllOrNothingPrice(), 1, 1, 4) == INFINITY
    assert price(AllOrNothingPrice(), 1, 0, 4) == 0


def test_listed_price_has_an_infinite_tail():
    fn = ListedPrice(costs=(0, 1, 1))
    assert shift_costs(fn, 1, 5) == [0, 1, 1, INFINITY, INFINITY]


def test_partition_price_in_the_feasible_range():
    instance, _ = gen_partition((5, 4, 2, 2, 1))
    assert instance.cost_table[0][3] == 5
    assert instance.cost_table[0][5] == 5
    assert instance.cost_table[0][6] == instance.budget + 1


@pytest.mark.parametrize(
    "costs",
    [(), (1, 2), (0, 2, 1), (0, -1), (0, MAX_PRICE + 1)],
)
def test_invalid_listed_prices_are_rejected(costs):
    with pytest.raises(ValueError):
        ListedPrice(costs=costs)


def test_negative_all_or_nothing_price_is_rejected():
    with pytest.raises(ValueError):
        AllOrNothingPrice(cost=-1)


def test_price_functions_are_discriminated_by_kind():
    adapter = TypeAdapter(PriceFunction)
    assert adapter.validate_python({"kind": "aon", "cost": 3}) == AllOrNothingPrice(cost=3)
    assert adapter.validate_python({"kind": "list", "costs": [0, 2]}) == ListedPrice(costs=(0, 2))


def test_total_cost(example1_instance):
    prices, election = example1_instance.prices, example1_instance.election
    assert total_cost(prices, election, "d", (0, 0, 0, 2)) == 2
    assert total_cost(prices, election, "d", (0, 0, 0, 0)) == 0
    assert total_cost(prices, election, "d", (1, 0, 0, 0)) == INFINITY


@given(st.integers(1, 6).flatmap(lambda feasible: st.tuples(st.just(feasible), price_functions(feasible))))
def test_prices_are_nondecreasing_with_zero_start(case):
    feasible, fn = case
    m = feasible + 1
    costs = shift_costs(fn, 1, m)
    assert costs[0] == 0
    assert all(a <= b for a, b in zip(costs, costs[1:]))
    assert price(fn, 1, feasible + 1, m) == INFINITY
