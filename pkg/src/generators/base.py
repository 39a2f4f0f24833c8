from typing import NamedTuple

from src.election.rules import RuleSpec
from src.solvers.base import BriberyInstance


class GeneratedInstance(NamedTuple):
    """A generated instance together with the rule it is meant for."""

    instance: BriberyInstance
    rule: RuleSpec
