from fractions import Fraction

import pytest

from src.errors import InputError, ParseError
from src.parsers.parsers import (
    format_solution,
    parse_alpha,
    parse_election,
    parse_graph,
    parse_prices,
    parse_shifts,
    parse_vector,
    write_election,
    write_graph,
    write_prices,
)
from src.pricing.prices import AllOrNothingPrice, ListedPrice, UnitPrice
from src.solvers.base import Solution
from tests.conftest import DATA


def test_native_example1(example1):
    assert example1.candidates == ("a", "b", "c", "d")
    assert example1.n == 4
    assert example1.order(0) == ("b", "a", "c", "d")
    assert example1.order(3) == ("d", "a", "b", "c")


def test_native_round_trip():
    text = (DATA / "example1.elect").read_text()
    assert write_election(parse_election(text)) == text


def test_preflib_matches_native(example1):
    election = parse_election((DATA / "example1.soc").read_text())
    assert election.candidates == example1.candidates
    assert election.rankings == example1.rankings


def test_preflib_multiplicity():
    election = parse_election("2: a,b,c\n1: c,b,a\n")
    assert election.n == 3
    assert election.order(0) == election.order(1) == ("a", "b", "c")
    assert election.order(2) == ("c", "b", "a")


def test_names_with_spaces_survive_the_native_format():
    text = (
        "# ALTERNATIVE NAME 1: Maki Roll\n"
        "# ALTERNATIVE NAME 2: tuna\n"
        "# ALTERNATIVE NAME 3: Salmon  Roe\n"
        "2: 1,2,3\n"
        "1: 3,1,2\n"
    )
    election = parse_election(text)
    assert election.candidates == ("Maki Roll", "tuna", "Salmon  Roe")
    written = write_election(election)
    assert written.splitlines()[1] == "'Maki Roll' tuna 'Salmon  Roe'"
    again = parse_election(written)
    assert again.candidates == election.candidates
    assert again.rankings == election.rankings


@pytest.mark.parametrize(
    "text,line",
    [
        ("2 1\na b\na c\n", 3),
        ("2 1\na b\na\n", 3),
        ("3 1\na b\n", 2),
        ("1: a,b\n1: a\n", 2),
        ("1: {a,b}\n", 1),
        ("# ALTERNATIVE NAME 1: a\n1: 1,2\n", 2),
        ("1: a,b\nnonsense\n", 2),
        ("2 1\n'a b\na b\n", 2),
    ],
)
def test_parse_errors_carry_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_election(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_empty_election_file():
    with pytest.raises(ParseError):
        parse_election("\n\n")


def test_prices():
    prices = parse_prices("unit\naon 3\naon inf\n# comment\nlist 0 1 1 5\n")
    assert prices == (UnitPrice(), AllOrNothingPrice(cost=3), AllOrNothingPrice(), ListedPrice(costs=(0, 1, 1, 5)))
    assert parse_prices(write_prices(prices)) == prices


@pytest.mark.parametrize("text", ["list 1 2\n", "list 0 2 1\n", "aon -3\n", "flat 3\n", "aon\n"])
def test_invalid_prices(text):
    with pytest.raises(ParseError) as info:
        parse_prices(text)
    assert info.value.line == 1


def test_graph_files():
    graph = parse_graph((DATA / "triangle.graph").read_text())
    assert graph.vertices == ("x", "y", "z", "w")
    assert len(graph.edges) == 4 and graph.coloring is None
    assert parse_graph(write_graph(graph)) == graph

    colored = parse_graph((DATA / "two_colors.graph").read_text())
    assert colored.color_classes() == {1: ["x1", "x2"], 2: ["y1", "y2"]}
    assert parse_graph(write_graph(colored)) == colored


def test_isolated_vertices_survive():
    graph = parse_graph("vertex lonely\na b\n")
    assert graph.vertices == ("lonely", "a", "b")
    assert parse_graph(write_graph(graph)) == graph


@pytest.mark.parametrize("text", ["a a\n", "a b\nb a\n", "color a x\n", "a b c d\n", "color a 1\nb c\n", "a-b c\n"])
def test_invalid_graphs(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_small_values():
    assert parse_shifts("0,0, 0,2") == (0, 0, 0, 2)
    assert parse_vector("3,2,1,0") == (3, 2, 1, 0)
    assert parse_alpha("1/2") == Fraction(1, 2)
    assert parse_alpha("0") == 0
    for bad in ("half", "3/2", "1/0"):
        with pytest.raises(InputError):
            parse_alpha(bad)
    with pytest.raises(InputError):
        parse_shifts("1,x")


def test_format_solution():
    assert format_solution(Solution.found(2, (0, 0, 0, 2), "m")) == "result=YES cost=2 shifts=0,0,0,2"
    assert format_solution(Solution.infeasible("m")) == "result=NO"
