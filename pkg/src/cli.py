# DESTRUCTIVE SHIFT BRIBERY
# ***
# Command line: solve, margin, gen, verify, oracle, scores
#
# Results go to stdout as one machine-readable line; diagnostics go to stderr.
# Exit codes: 0 success, 1 NO / INVALID, 2 input error, 3 resource limit.

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src._version import __version__
from src.config import Settings, load_settings
from src.election.rules import RuleSpec
from src.errors import InputError, ResourceLimitError
from src.generators.clique import clique_budget, gen_clique
from src.generators.graph import (
    Graph,
    has_clique,
    find_multicolored_independent_set,
    plant_clique,
    plant_independent_set,
    random_colored_graph,
    random_graph,
)
from src.generators.mcis import gen_mcis
from src.generators.partition import gen_partition
from src.generators.random_instances import gen_random
from src.oracle.brute_force import brute_force, verify
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
from src.pricing.prices import UnitPrice, is_finite
from src.solvers.base import BriberyInstance
from src.solvers.dispatch import margin, solve
from src.tools.dataframe import instance_summary, score_table
from src.utils.logging import configure_logging, write_artifact

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

RULES = (
    "plurality",
    "k-approval",
    "borda",
    "scoring",
    "bucklin",
    "simplified-bucklin",
    "copeland",
    "maximin",
)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as file:
            return file.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def build_rule(args: argparse.Namespace, settings: Settings) -> RuleSpec:
    """The RuleSpec named by ``--rule`` and its parameter flags."""
    if args.rule == "plurality":
        return RuleSpec.plurality()
    if args.rule == "k-approval":
        if args.k is None:
            raise InputError("--rule k-approval needs --k")
        return RuleSpec.k_approval(args.k)
    if args.rule == "borda":
        return RuleSpec.borda()
    if args.rule == "scoring":
        if args.vector is None:
            raise InputError("--rule scoring needs --vector a1,a2,...")
        return RuleSpec.scoring(parse_vector(args.vector))
    if args.rule == "bucklin":
        return RuleSpec.bucklin()
    if args.rule == "simplified-bucklin":
        return RuleSpec.simplified_bucklin()
    if args.rule == "maximin":
        return RuleSpec.maximin()
    alpha = parse_alpha(args.alpha) if args.alpha is not None else settings.copeland_alpha
    return RuleSpec.copeland(alpha)


def rule_arguments(rule: RuleSpec) -> str:
    """Flags that reproduce ``rule`` on the command line."""
    if rule.kind == "k-approval":
        return "--rule plurality" if rule.k == 1 else f"--rule k-approval --k {rule.k}"
    if rule.kind == "scoring":
        return "--rule scoring --vector " + ",".join(str(a) for a in rule.vector)
    if rule.kind == "copeland":
        return f"--rule copeland --alpha {rule.alpha}"
    return f"--rule {rule.kind}"


def load_instance(args: argparse.Namespace) -> BriberyInstance:
    election = parse_election(_read(args.election))
    if args.prices is None:
        prices = (UnitPrice(),) * election.n
    else:
        prices = parse_prices(_read(args.prices))
    return BriberyInstance(election=election, despised=args.despised, budget=args.budget, prices=prices)


# Subcommands
def cmd_solve(args: argparse.Namespace, settings: Settings) -> int:
    instance = load_instance(args)
    solution = solve(instance, build_rule(args, settings), settings)
    logger.info(f"{solution.method}: {solution.status}")
    print(format_solution(solution))
    return EXIT_OK if solution.feasible else EXIT_NO


def cmd_margin(args: argparse.Namespace, settings: Settings) -> int:
    args.budget = None
    instance = load_instance(args)
    cost = margin(instance, build_rule(args, settings), settings)
    print(cost if is_finite(cost) else "INF")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    instance = load_instance(args)
    valid = verify(instance, build_rule(args, settings), parse_shifts(args.shifts))
    print("VALID" if valid else "INVALID")
    return EXIT_OK if valid else EXIT_NO


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    instance = load_instance(args)
    node_cap = args.node_cap if args.node_cap is not None else settings.oracle_node_cap
    solution = brute_force(instance, build_rule(args, settings), node_cap=node_cap)
    print(format_solution(solution))
    return EXIT_OK if solution.feasible else EXIT_NO


def cmd_scores(args: argparse.Namespace, settings: Settings) -> int:
    rule = build_rule(args, settings)
    if args.despised is None:
        election = parse_election(_read(args.election))
        print(score_table(election, rule).to_string(index=False))
    else:
        print(instance_summary(load_instance(args), rule))
    return EXIT_OK


def _graph_from_args(args: argparse.Namespace, colored: bool) -> Graph:
    if args.graph is not None:
        return parse_graph(_read(args.graph))
    if colored:
        return random_colored_graph(args.colors, args.per_color, args.edge_prob, args.seed)
    return random_graph(args.vertices, args.edge_prob, args.seed)


def cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    graph = None
    if args.family == "partition":
        generated = gen_partition(parse_vector(args.seq))
        instance, rule = generated
    elif args.family == "clique":
        graph = _graph_from_args(args, colored=False)
        if args.plant:
            graph = plant_clique(graph, graph.vertices[: args.k])
        alpha = parse_alpha(args.alpha) if args.alpha is not None else settings.copeland_alpha
        instance, rule = gen_clique(graph, args.k, alpha)
        logger.info(f"k-clique present: {has_clique(graph, args.k)}; budget {clique_budget(args.k)}")
    elif args.family == "mcis":
        graph = _graph_from_args(args, colored=True)
        if args.plant:
            selection = [members[0] for members in graph.color_classes().values()]
            graph = plant_independent_set(graph, selection)
        alpha = parse_alpha(args.alpha) if args.alpha is not None else settings.copeland_alpha
        instance, rule = gen_mcis(graph, alpha)
        logger.info(f"multicolored independent set: {find_multicolored_independent_set(graph)}")
    else:
        rule = build_rule(args, settings)
        instance = gen_random(args.m, args.n, args.seed, args.price_model, args.budget, rule)

    election_path, _ = write_artifact(write_election(instance.election), f"{args.name}.elect", args.out)
    prices_path, _ = write_artifact(write_prices(instance.prices), f"{args.name}.prices", args.out)
    if graph is not None:
        write_artifact(write_graph(graph), f"{args.name}.graph", args.out)

    budget = "" if instance.budget is None else f" --budget {instance.budget}"
    print(
        f"{rule_arguments(rule)} --despised {instance.despised}{budget}"
        f" --election {election_path} --prices {prices_path}"
    )
    return EXIT_OK


# Argument parsing
def _add_rule_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--rule", choices=RULES, required=required, help="voting rule")
    parser.add_argument("--k", type=int, help="k of k-approval")
    parser.add_argument("--vector", help="scoring vector, e.g. 3,2,1,0")
    parser.add_argument("--alpha", help="Copeland tie value as a fraction, e.g. 1/2")


def _add_instance_arguments(parser: argparse.ArgumentParser, budget: bool = True) -> None:
    parser.add_argument("--election", required=True, help="election file (native or PrefLib)")
    parser.add_argument("--prices", help="price file; unit prices when omitted")
    parser.add_argument("--despised", required=True, help="name of the despised candidate")
    if budget:
        parser.add_argument("--budget", type=int, help="budget; unbounded when omitted")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shift-bribery",
        description="Destructive shift bribery: push a despised candidate back so it stops being the unique winner.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="logging level (default from SHIFT_BRIBERY_LOG_LEVEL)")
    parser.add_argument("--jobs", type=int, help="worker processes for independent sub-searches")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("solve", help="minimum-cost bribery within the budget")
    _add_rule_arguments(p)
    _add_instance_arguments(p)
    p.set_defaults(handler=cmd_solve)

    p = commands.add_parser("margin", help="smallest budget that dethrones the despised candidate")
    _add_rule_arguments(p)
    _add_instance_arguments(p, budget=False)
    p.set_defaults(handler=cmd_margin)

    p = commands.add_parser("verify", help="check a shift vector")
    _add_rule_arguments(p)
    _add_instance_arguments(p)
    p.add_argument("--shifts", required=True, help="comma-separated shift per voter")
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("oracle", help="exhaustive search")
    _add_rule_arguments(p)
    _add_instance_arguments(p)
    p.add_argument("--node-cap", type=int, help="maximum search nodes")
    p.set_defaults(handler=cmd_oracle)

    p = commands.add_parser("scores", help="score table of an election")
    _add_rule_arguments(p)
    p.add_argument("--election", required=True, help="election file (native or PrefLib)")
    p.add_argument("--prices", help="price file; unit prices when omitted")
    p.add_argument("--despised", help="print a full instance summary for this candidate")
    p.add_argument("--budget", type=int, help="budget shown in the summary")
    p.set_defaults(handler=cmd_scores)

    gen = commands.add_parser("gen", help="write a generated instance")
    families = gen.add_subparsers(dest="family", required=True)
    for family in ("partition", "clique", "mcis", "random"):
        f = families.add_parser(family)
        f.add_argument("--out", default="./instances/", help="output directory")
        f.add_argument("--name", default=family, help="base name of the written files")
        f.set_defaults(handler=cmd_gen)
        if family == "partition":
            f.add_argument("--seq", required=True, help="positive integers, e.g. 5,4,2,2,1")
        elif family in ("clique", "mcis"):
            f.add_argument("--graph", help="graph file; a random graph when omitted")
            f.add_argument("--seed", type=int, default=0)
            f.add_argument("--edge-prob", type=float, default=0.5)
            f.add_argument("--plant", action="store_true", help="plant a solution in the random graph")
            f.add_argument("--alpha", help="Copeland tie value as a fraction, e.g. 1/2")
            if family == "clique":
                f.add_argument("--k", type=int, default=3, help="clique size")
                f.add_argument("--vertices", type=int, default=6)
            else:
                f.add_argument("--colors", type=int, default=2)
                f.add_argument("--per-color", type=int, default=3)
        else:
            _add_rule_arguments(f, required=False)
            f.set_defaults(rule="borda")
            f.add_argument("--m", type=int, required=True, help="number of candidates")
            f.add_argument("--n", type=int, required=True, help="number of voters")
            f.add_argument("--seed", type=int, default=0)
            f.add_argument("--price-model", default="unit", help="unit, aon:<max> or list:<max>")
            f.add_argument("--budget", type=int)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
        if args.jobs is not None:
            settings = settings.model_copy(update={"jobs": max(1, args.jobs)})
        configure_logging(args.log_level or settings.log_level)
        return args.handler(args, settings)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
