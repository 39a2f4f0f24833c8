"""
Voting rules under the unique-winner model.

Scores are exact: integers for scoring rules, Maximin and Bucklin, and
``fractions.Fraction`` for Copeland with a tie value alpha.
"""

from __future__ import annotations

from fractions import Fraction
from typing import FrozenSet, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.election.profile import Election
from src.errors import DomainError, InputError

Score = Union[int, Fraction]

RuleKind = Literal[
    "scoring",
    "k-approval",
    "borda",
    "bucklin",
    "simplified-bucklin",
    "copeland",
    "maximin",
]


class RuleSpec(BaseModel):
    """
    A voting rule with its parameters.

    Use the constructors (``RuleSpec.borda()``, ``RuleSpec.copeland("1/2")``,
    ...) rather than filling the fields by hand.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: RuleKind
    vector: Optional[Tuple[int, ...]] = None
    k: Optional[int] = None
    alpha: Optional[Fraction] = None

    @field_validator("alpha", mode="before")
    @classmethod
    def _exact_alpha(cls, value):
        if value is None:
            return None
        if isinstance(value, float):
            raise ValueError("Copeland alpha must be an exact rational such as '1/2', not a float")
        alpha = Fraction(value)
        if not 0 <= alpha <= 1:
            raise ValueError(f"Copeland alpha must lie in [0, 1], got {alpha}")
        return alpha

    @model_validator(mode="after")
    def _check_parameters(self) -> "RuleSpec":
        if self.kind == "scoring":
            if not self.vector:
                raise ValueError("a scoring rule needs a vector")
            if any(a < 0 for a in self.vector):
                raise ValueError("scoring vector entries must be nonnegative")
            if any(a < b for a, b in zip(self.vector, self.vector[1:])):
                raise ValueError("scoring vector must be nonincreasing")
        if self.kind == "k-approval" and (self.k is None or self.k < 1):
            raise ValueError("k-approval needs k >= 1")
        if self.kind == "copeland" and self.alpha is None:
            raise ValueError("Copeland needs a tie value alpha")
        return self

    @classmethod
    def scoring(cls, vector: Sequence[int]) -> "RuleSpec":
        return cls(kind="scoring", vector=tuple(int(a) for a in vector))

    @classmethod
    def k_approval(cls, k: int) -> "RuleSpec":
        return cls(kind="k-approval", k=k)

    @classmethod
    def plurality(cls) -> "RuleSpec":
        return cls(kind="k-approval", k=1)

    @classmethod
    def borda(cls) -> "RuleSpec":
        return cls(kind="borda")

    @classmethod
    def bucklin(cls) -> "RuleSpec":
        return cls(kind="bucklin")

    @classmethod
    def simplified_bucklin(cls) -> "RuleSpec":
        return cls(kind="simplified-bucklin")

    @classmethod
    def copeland(cls, alpha: Union[str, int, Fraction] = Fraction(1, 2)) -> "RuleSpec":
        return cls(kind="copeland", alpha=alpha)

    @classmethod
    def maximin(cls) -> "RuleSpec":
        return cls(kind="maximin")

    @property
    def is_positional(self) -> bool:
        return self.kind in ("scoring", "k-approval", "borda")

    def scoring_vector(self, m: int) -> Tuple[int, ...]:
        """The length-``m`` vector of a positional rule."""
        if self.kind == "borda":
            return tuple(range(m - 1, -1, -1))
        if self.kind == "k-approval":
            check_k(self.k, m)
            return (1,) * self.k + (0,) * (m - self.k)
        if self.kind == "scoring":
            check_vector(self.vector, m)
            return self.vector
        raise InputError(f"rule {self.kind} is not a scoring protocol")

    def __str__(self) -> str:
        if self.kind == "k-approval":
            return "plurality" if self.k == 1 else f"{self.k}-approval"
        if self.kind == "scoring":
            return "scoring(" + ",".join(map(str, self.vector)) + ")"
        if self.kind == "copeland":
            return f"copeland^{self.alpha}"
        return self.kind


def check_vector(vector: Sequence[int], m: int) -> None:
    if len(vector) != m:
        raise InputError(f"scoring vector has length {len(vector)}, election has {m} candidates")


def check_k(k: int, m: int) -> None:
    if not 1 <= k <= m:
        raise InputError(f"k must lie in [1, {m}], got {k}")


def majority_threshold(n: int) -> int:
    """Strict majority of ``n`` voters: floor(n/2) + 1."""
    return n // 2 + 1


def scoring_scores(election: Election, vector: Sequence[int]) -> np.ndarray:
    """Scores of all candidates under a positional vector."""
    check_vector(vector, election.m)
    alpha = np.asarray(vector, dtype=object if max(vector, default=0) > 2**40 else np.int64)
    return alpha[election.positions - 1].sum(axis=0)


def scoring_score(election: Election, vector: Sequence[int], candidate: str) -> int:
    """Sum over voters of the vector entry at the candidate's position."""
    return int(scoring_scores(election, vector)[election.index_of(candidate)])


def approval_scores(election: Election, k: int) -> np.ndarray:
    """Number of voters ranking each candidate within the top ``k`` (k may be 0)."""
    return (election.positions <= k).sum(axis=0)


def k_approval_score(election: Election, k: int, candidate: str) -> int:
    check_k(k, election.m)
    return int(approval_scores(election, k)[election.index_of(candidate)])


def bucklin_round(election: Election) -> int:
    """Smallest l such that some candidate's l-Approval score reaches a strict majority."""
    maj = majority_threshold(election.n)
    for ell in range(1, election.m + 1):
        if approval_scores(election, ell).max() >= maj:
            return ell
    return election.m


def copeland_scores(election: Election, alpha: Fraction) -> List[Fraction]:
    n_matrix = election.pairwise
    wins = (n_matrix > n_matrix.T).sum(axis=1)
    ties = (n_matrix == n_matrix.T).sum(axis=1) - 1  # diagonal
    return [int(w) + alpha * int(t) for w, t in zip(wins, ties)]


def copeland_score(election: Election, alpha: Union[Fraction, str, int], candidate: str) -> Fraction:
    """Head-to-head wins plus alpha times ties, as an exact rational."""
    return copeland_scores(election, Fraction(alpha))[election.index_of(candidate)]


def maximin_scores(election: Election) -> np.ndarray:
    if election.m < 2:
        raise DomainError("Maximin is undefined for a single candidate")
    n_matrix = election.pairwise.copy()
    np.fill_diagonal(n_matrix, election.n + 1)
    return n_matrix.min(axis=1)


def maximin_score(election: Election, candidate: str) -> int:
    """Worst head-to-head support of the candidate."""
    return int(maximin_scores(election)[election.index_of(candidate)])


def scores(election: Election, rule: RuleSpec) -> List[Score]:
    """
    Per-candidate scores under ``rule``, indexed like ``election.candidates``.

    For the Bucklin rules these are the l-Approval scores at the winning round.
    """
    if rule.is_positional:
        return [int(s) for s in scoring_scores(election, rule.scoring_vector(election.m))]
    if rule.kind in ("bucklin", "simplified-bucklin"):
        return [int(s) for s in approval_scores(election, bucklin_round(election))]
    if rule.kind == "copeland":
        return copeland_scores(election, rule.alpha)
    if rule.kind == "maximin":
        return [int(s) for s in maximin_scores(election)]
    raise InputError(f"unsupported rule {rule.kind}")


def winner_indices(election: Election, rule: RuleSpec) -> FrozenSet[int]:
    values = scores(election, rule)
    if rule.kind == "simplified-bucklin":
        maj = majority_threshold(election.n)
        return frozenset(c for c, s in enumerate(values) if s >= maj)
    best = max(values)
    return frozenset(c for c, s in enumerate(values) if s == best)


def winners(election: Election, rule: RuleSpec) -> FrozenSet[str]:
    """The tied winners of ``election`` under ``rule``."""
    return frozenset(election.candidates[c] for c in winner_indices(election, rule))


def is_unique_winner_index(election: Election, rule: RuleSpec, candidate: int) -> bool:
    return winner_indices(election, rule) == {candidate}


def is_unique_winner(election: Election, rule: RuleSpec, candidate: str) -> bool:
    """True iff ``candidate`` is the only winner."""
    return is_unique_winner_index(election, rule, election.index_of(candidate))
