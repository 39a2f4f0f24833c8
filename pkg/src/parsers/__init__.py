from src.parsers.parsers import (
    ElectionParser,
    GraphParser,
    PriceParser,
    format_solution,
    parse_election,
    parse_graph,
    parse_prices,
    write_election,
    write_graph,
    write_prices,
)
