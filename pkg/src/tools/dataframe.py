from typing import Dict, List, Union

import pandas as pd

from src.election.profile import Election
from src.election.rules import RuleSpec, bucklin_round, scores, winner_indices
from src.solvers.base import BriberyInstance


def score_table(election: Election, rule: RuleSpec) -> pd.DataFrame:
    """
    Per-candidate scores under a rule.

    Parameters
    ----------
    election : Election
        The election.
    rule : RuleSpec
        The voting rule. For the Bucklin rules the scores are the
        l-Approval scores at the winning round.

    Example:
    --------
    ``` python
    from src.parsers.parsers import parse_election
    from src.election.rules import RuleSpec
    election = parse_election(open("data/example1.elect").read())
    print(score_table(election, RuleSpec.borda()))
    ```

    Returns
    -------
    pandas.DataFrame
        Columns ``candidate``, ``score``, ``rank`` (1 = best, ties share the
        better rank) and ``winner``, sorted by rank and then candidate order.
    """
    values = scores(election, rule)
    top = winner_indices(election, rule)
    df = pd.DataFrame(
        {
            "candidate": list(election.candidates),
            # exact scores as strings so Copeland fractions survive
            "score": [str(v) for v in values],
            "winner": [c in top for c in range(election.m)],
        }
    )
    df["rank"] = pd.Series([float(v) for v in values]).rank(method="min", ascending=False).astype(int)
    df = df[["candidate", "score", "rank", "winner"]]
    return df.sort_values(["rank"], kind="stable").reset_index(drop=True)


def instance_summary(instance: BriberyInstance, rule: RuleSpec, n_sample: int = 30) -> str:
    """
    Generate a text summary of an instance: sizes, budget, price families and scores.

    Parameters
    ----------
    instance : BriberyInstance
        The instance.
    rule : RuleSpec
        The voting rule.
    n_sample : int, default 30
        Number of score rows to display.
    """
    df = score_table(instance.election, rule)
    prices = pd.Series([fn.kind for fn in instance.prices]).value_counts()
    price_summary = "\n".join([f"{kind}: {count}" for kind, count in prices.items()])
    budget = "unbounded" if instance.budget is None else instance.budget
    extra = ""
    if rule.kind in ("bucklin", "simplified-bucklin"):
        extra = f"\nWinning round: {bucklin_round(instance.election)}"

    summary_text = f"""
Rule: {rule}
Despised candidate: {instance.despised}
----------------------------
Shape: {instance.m} candidates x {instance.n} voters
Budget: {budget}{extra}

Price functions:
{price_summary}

Scores (first {n_sample} rows):
{df.head(n_sample).to_string(index=False)}
"""
    return summary_text.strip()


def summarize_instances(
    instances: Union[BriberyInstance, List[BriberyInstance], Dict[str, BriberyInstance]],
    rule: RuleSpec,
    n_sample: int = 30,
) -> List[str]:
    """
    Summaries for one instance, a list of instances or a dict of named instances.
    """
    if isinstance(instances, dict):
        return [f"Instance Name: {name}\n{instance_summary(inst, rule, n_sample)}" for name, inst in instances.items()]
    if isinstance(instances, BriberyInstance):
        return [instance_summary(instances, rule, n_sample)]
    if isinstance(instances, list):
        return [instance_summary(inst, rule, n_sample) for inst in instances]
    raise TypeError(
        "Input must be a single BriberyInstance, a list of instances, or a dictionary of instances."
    )
