from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from src.config import Settings
from src.election.profile import Election
from src.election.rules import RuleSpec
from src.generators.random_instances import gen_random
from src.parsers.parsers import parse_election
from src.pricing.prices import AllOrNothingPrice, ListedPrice, UnitPrice
from src.solvers.base import BriberyInstance

DATA = Path(__file__).resolve().parent.parent / "data"

ALL_RULES = [
    RuleSpec.plurality(),
    RuleSpec.k_approval(2),
    RuleSpec.borda(),
    RuleSpec.bucklin(),
    RuleSpec.simplified_bucklin(),
    RuleSpec.copeland("0"),
    RuleSpec.copeland("1/2"),
    RuleSpec.copeland("1"),
    RuleSpec.maximin(),
]


CORPUS_RULES = ALL_RULES + [RuleSpec.scoring((3, 1, 1, 0, 0))]
CORPUS_PRICE_MODELS = ["unit", "aon:5", "list:5"]


def oracle_corpus(size: int):
    """Seeded (seed, rule, instance) triples with m <= 5 and n <= 5."""
    rng = np.random.default_rng(2024)
    for seed in range(size):
        rule = CORPUS_RULES[seed % len(CORPUS_RULES)]
        m = 5 if rule.kind == "scoring" else int(rng.integers(2, 6))
        n = int(rng.integers(1, 6))
        budget = None if seed % 5 == 0 else int(rng.integers(0, 7))
        model = CORPUS_PRICE_MODELS[(seed // len(CORPUS_RULES)) % len(CORPUS_PRICE_MODELS)]
        yield seed, rule, gen_random(m, n, seed, price_model=model, budget=budget, rule=rule)


@pytest.fixture
def example1() -> Election:
    return parse_election((DATA / "example1.elect").read_text())


@pytest.fixture
def example1_instance(example1) -> BriberyInstance:
    return BriberyInstance.with_unit_prices(example1, "d", 2)


@pytest.fixture
def settings() -> Settings:
    return Settings()


def unanimous(orders, times=1) -> Election:
    """Election from whitespace-separated rankings, each repeated ``times``."""
    orders = [o.split() for o in orders] * times
    return Election.from_orders(sorted(orders[0]), orders)


@st.composite
def elections(draw, max_m=4, max_n=4, min_m=2):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(1, max_n))
    rankings = tuple(tuple(draw(st.permutations(range(m)))) for _ in range(n))
    return Election(candidates=tuple(f"c{i}" for i in range(m)), rankings=rankings)


@st.composite
def price_functions(draw, feasible: int):
    kind = draw(st.sampled_from(["unit", "aon", "list"]))
    if kind == "unit":
        return UnitPrice()
    if kind == "aon":
        return AllOrNothingPrice(cost=draw(st.none() | st.integers(0, 4)))
    length = draw(st.integers(1, feasible + 1))
    steps = draw(st.lists(st.integers(0, 3), min_size=length - 1, max_size=length - 1))
    costs = [0]
    for step in steps:
        costs.append(costs[-1] + step)
    return ListedPrice(costs=tuple(costs))


@st.composite
def instances(draw, max_m=4, max_n=4):
    election = draw(elections(max_m=max_m, max_n=max_n))
    despised = draw(st.sampled_from(election.candidates))
    d = election.index_of(despised)
    prices = tuple(
        draw(price_functions(election.m - int(election.positions[v, d])))
        for v in range(election.n)
    )
    budget = draw(st.none() | st.integers(0, 8))
    return BriberyInstance(election=election, despised=despised, budget=budget, prices=prices)
