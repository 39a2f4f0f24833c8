# DESTRUCTIVE SHIFT BRIBERY
# ***
# Parsers and writers for election, price and graph files

import re
import shlex
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from pydantic import ValidationError

from src.election.profile import Election
from src.errors import InputError, ParseError
from src.generators.graph import Graph
from src.pricing.prices import AllOrNothingPrice, ListedPrice, PriceFunction, UnitPrice
from src.solvers.base import Solution

_HEADER = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")
_ALTERNATIVE = re.compile(r"^#\s*ALTERNATIVE NAME\s+(\d+)\s*:\s*(.+?)\s*$")
_COUNT_LINE = re.compile(r"^\s*(\d+)\s*:\s*(.+)$")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """Non-blank lines with their 1-based line numbers."""
    return [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]


def _tokens(line: str, line_no: int) -> List[str]:
    """Whitespace-separated names; names with spaces are shell-quoted."""
    try:
        return shlex.split(line)
    except ValueError as exc:
        raise ParseError(f"bad quoting: {exc}", line_no) from None


def _election(candidates: Sequence[str], orders: List[Tuple[int, List[str]]]) -> Election:
    index = {name: i for i, name in enumerate(candidates)}
    if len(index) != len(candidates):
        raise ParseError("duplicate candidate names")
    rankings = []
    for line_no, order in orders:
        unknown = [name for name in order if name not in index]
        if unknown:
            raise ParseError(f"unknown candidate {unknown[0]!r}", line_no)
        if len(order) != len(candidates) or len(set(order)) != len(order):
            raise ParseError(
                f"ranking must list each of the {len(candidates)} candidates exactly once", line_no
            )
        rankings.append(tuple(index[name] for name in order))
    try:
        return Election(candidates=tuple(candidates), rankings=tuple(rankings))
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


# Election parser: native format or PrefLib complete strict orders
class ElectionParser:
    def parse(self, text: str) -> Election:
        lines = _content_lines(text)
        if not lines:
            raise ParseError("empty election file")

        def parse_native(lines):
            (line_no, header), rest = lines[0], lines[1:]
            m, n = (int(x) for x in _HEADER.match(header).groups())
            if not rest:
                raise ParseError("missing candidate line", line_no + 1)
            names_line, names = rest[0][0], _tokens(rest[0][1], rest[0][0])
            if len(names) != m:
                raise ParseError(f"expected {m} candidate names, found {len(names)}", names_line)
            votes = [(i, _tokens(line, i)) for i, line in rest[1:] if not line.startswith("#")]
            if len(votes) != n:
                raise ParseError(f"expected {n} rankings, found {len(votes)}")
            return _election(names, votes)

        def parse_preflib(lines):
            names: Dict[int, str] = {}
            orders: List[Tuple[int, List[str]]] = []
            for line_no, line in lines:
                if line.startswith("#"):
                    alternative = _ALTERNATIVE.match(line)
                    if alternative:
                        names[int(alternative.group(1))] = alternative.group(2)
                    continue
                match = _COUNT_LINE.match(line)
                if not match:
                    raise ParseError(f"expected 'count: a,b,c', got {line!r}", line_no)
                body = match.group(2)
                if "{" in body or "}" in body:
                    raise ParseError("ties are not supported", line_no)
                tokens = [token.strip() for token in body.split(",")]
                if names:
                    try:
                        tokens = [names[int(token)] if token.isdigit() else token for token in tokens]
                    except KeyError as exc:
                        raise ParseError(f"unknown alternative number {exc.args[0]}", line_no) from None
                orders += [(line_no, tokens)] * int(match.group(1))
            if not orders:
                raise ParseError("no rankings found")
            candidates = [names[k] for k in sorted(names)] if names else list(orders[0][1])
            return _election(candidates, orders)

        if _HEADER.match(lines[0][1]):
            return parse_native(lines)
        return parse_preflib(lines)


# Price parser: one line per voter
class PriceParser:
    def parse(self, text: str) -> Tuple[PriceFunction, ...]:
        def parse_line(line_no, line):
            kind, *values = line.split()
            kind = kind.lower()
            try:
                if kind == "unit" and not values:
                    return UnitPrice()
                if kind == "aon" and len(values) == 1:
                    cost = values[0].lower()
                    return AllOrNothingPrice(cost=None if cost in ("inf", "infinity") else int(cost))
                if kind == "list" and values:
                    return ListedPrice(costs=tuple(int(v) for v in values))
            except (ValueError, ValidationError) as exc:
                raise ParseError(f"invalid price function: {exc}", line_no) from None
            raise ParseError(f"expected 'unit', 'aon <c|inf>' or 'list <v0 v1 ...>', got {line!r}", line_no)

        return tuple(
            parse_line(line_no, line) for line_no, line in _content_lines(text) if not line.startswith("#")
        )


# Graph parser: "u v" edges, "vertex u", "color u c", "#" comments
class GraphParser:
    def parse(self, text: str) -> Graph:
        vertices: List[str] = []
        edges: List[Tuple[str, str]] = []
        coloring: Dict[str, int] = {}

        def add_vertex(v):
            if v not in seen:
                seen.add(v)
                vertices.append(v)

        seen = set()
        for line_no, line in _content_lines(text):
            if line.startswith("#"):
                continue
            tokens = line.split()
            if tokens[0] == "vertex" and len(tokens) == 2:
                add_vertex(tokens[1])
            elif tokens[0] == "color" and len(tokens) == 3:
                if not tokens[2].isdigit():
                    raise ParseError(f"color must be a positive integer, got {tokens[2]!r}", line_no)
                add_vertex(tokens[1])
                coloring[tokens[1]] = int(tokens[2])
            elif len(tokens) == 2:
                add_vertex(tokens[0])
                add_vertex(tokens[1])
                edges.append((tokens[0], tokens[1]))
            else:
                raise ParseError(f"expected 'u v', 'vertex u' or 'color u c', got {line!r}", line_no)
        try:
            return Graph(vertices=tuple(vertices), edges=tuple(edges), coloring=coloring or None)
        except ValidationError as exc:
            raise ParseError(str(exc)) from None


def parse_election(text: str) -> Election:
    """Parse a native or PrefLib election file."""
    return ElectionParser().parse(text)


def parse_prices(text: str) -> Tuple[PriceFunction, ...]:
    return PriceParser().parse(text)


def parse_graph(text: str) -> Graph:
    return GraphParser().parse(text)


def parse_shifts(text: str) -> Tuple[int, ...]:
    """Comma-separated shift amounts, e.g. ``0,0,0,2``."""
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise InputError(f"invalid shift vector {text!r}") from None


def parse_alpha(text: str) -> Fraction:
    """Exact rational such as ``1/2`` or ``0``."""
    try:
        alpha = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"invalid Copeland alpha {text!r}; use a fraction such as 1/2") from None
    if not 0 <= alpha <= 1:
        raise InputError(f"Copeland alpha must lie in [0, 1], got {alpha}")
    return alpha


def parse_vector(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"invalid scoring vector {text!r}") from None


def write_election(election: Election) -> str:
    lines = [f"{election.m} {election.n}", " ".join(shlex.quote(c) for c in election.candidates)]
    lines += [" ".join(shlex.quote(c) for c in election.order(v)) for v in range(election.n)]
    return "\n".join(lines) + "\n"


def write_prices(prices: Sequence[PriceFunction]) -> str:
    lines = []
    for fn in prices:
        if isinstance(fn, UnitPrice):
            lines.append("unit")
        elif isinstance(fn, AllOrNothingPrice):
            lines.append(f"aon {'inf' if fn.cost is None else fn.cost}")
        else:
            lines.append("list " + " ".join(str(c) for c in fn.costs))
    return "\n".join(lines) + "\n"


def write_graph(graph: Graph) -> str:
    if graph.coloring:
        lines = [f"color {v} {graph.coloring[v]}" for v in graph.vertices]
    else:
        lines = [f"vertex {v}" for v in graph.vertices]
    lines += [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def format_shifts(shifts: Sequence[int]) -> str:
    return ",".join(str(s) for s in shifts)


def format_solution(solution: Solution) -> str:
    """The machine-readable result line of the command line."""
    if not solution.feasible:
        return "result=NO"
    return f"result=YES cost={solution.min_cost} shifts={format_shifts(solution.shifts)}"
