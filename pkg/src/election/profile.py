"""
Preference profiles.

An ``Election`` stores candidate names once and every vote as a tuple of
candidate indices ranked best-to-worst. Positions are 1-based everywhere.
"""

from __future__ import annotations

from functools import cached_property
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import InputError

ShiftVector = Tuple[int, ...]


class Election(BaseModel):
    """
    An election (C, V): ``m`` named candidates and ``n`` complete strict rankings.

    Voters form a list, so duplicate rankings are distinct voters.
    """

    model_config = ConfigDict(frozen=True)

    candidates: Tuple[str, ...]
    rankings: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_profile(self) -> "Election":
        m = len(self.candidates)
        if m < 1:
            raise ValueError("an election needs at least one candidate")
        if len(self.rankings) < 1:
            raise ValueError("an election needs at least one voter")
        if len(set(self.candidates)) != m:
            raise ValueError("candidate identifiers must be unique")
        full = set(range(m))
        for i, ranking in enumerate(self.rankings):
            if len(ranking) != m or set(ranking) != full:
                raise ValueError(f"voter {i} does not rank every candidate exactly once")
        return self

    @classmethod
    def from_orders(cls, candidates: Sequence[str], orders: Iterable[Sequence[str]]) -> "Election":
        """Build an election from rankings given by candidate name."""
        index = {name: i for i, name in enumerate(candidates)}
        rankings = []
        for i, order in enumerate(orders):
            try:
                rankings.append(tuple(index[name] for name in order))
            except KeyError as exc:
                raise InputError(f"voter {i} ranks unknown candidate {exc.args[0]!r}") from None
        return cls(candidates=tuple(candidates), rankings=tuple(rankings))

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n(self) -> int:
        return len(self.rankings)

    @cached_property
    def name_index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.candidates)}

    def index_of(self, candidate: str) -> int:
        """Dense index of a candidate name; raises ``InputError`` when unknown."""
        try:
            return self.name_index[candidate]
        except KeyError:
            raise InputError(f"unknown candidate {candidate!r}") from None

    @cached_property
    def positions(self) -> np.ndarray:
        """``positions[v, c]`` is the 1-based rank of candidate index ``c`` in vote ``v``."""
        pos = np.empty((self.n, self.m), dtype=np.int64)
        ranks = np.arange(1, self.m + 1, dtype=np.int64)
        for v, ranking in enumerate(self.rankings):
            pos[v, list(ranking)] = ranks
        return pos

    @cached_property
    def pairwise(self) -> np.ndarray:
        """``pairwise[c, c2]`` counts voters preferring ``c`` to ``c2``."""
        counts = np.zeros((self.m, self.m), dtype=np.int64)
        for row in self.positions:
            counts += row[:, None] < row[None, :]
        return counts

    def order(self, voter: int) -> Tuple[str, ...]:
        """The ranking of ``voter`` as candidate names."""
        return tuple(self.candidates[c] for c in self.rankings[voter])


def position(election: Election, voter: int, candidate: str) -> int:
    """Rank (1 = most preferred) of ``candidate`` in the vote of ``voter``."""
    if not 0 <= voter < election.n:
        raise InputError(f"voter index {voter} out of range [0, {election.n})")
    return int(election.positions[voter, election.index_of(candidate)])


def pairwise_matrix(election: Election) -> np.ndarray:
    """
    Head-to-head counts N(c, c').

    Returns
    -------
    numpy.ndarray
        An m x m integer array indexed like ``election.candidates``; the
        diagonal is zero and ``N[c, c'] + N[c', c] == n`` off the diagonal.
    """
    return election.pairwise.copy()


def check_shifts(election: Election, despised: int, shifts: Sequence[int]) -> ShiftVector:
    """Validate a shift vector against the despised candidate's positions."""
    if len(shifts) != election.n:
        raise InputError(f"shift vector has {len(shifts)} entries, expected {election.n}")
    d_positions = election.positions[:, despised]
    for i, (shift, pos) in enumerate(zip(shifts, d_positions)):
        if shift < 0:
            raise InputError(f"voter {i}: negative shift {shift}")
        if shift > election.m - pos:
            raise InputError(
                f"voter {i}: cannot shift past the last position "
                f"(shift {shift}, at most {election.m - pos})"
            )
    return tuple(int(s) for s in shifts)


def shift_ranking(ranking: Tuple[int, ...], despised: int, shift: int) -> Tuple[int, ...]:
    """Move ``despised`` back ``shift`` places; the passed candidates each move up one."""
    if shift == 0:
        return ranking
    at = ranking.index(despised)
    return ranking[:at] + ranking[at + 1 : at + 1 + shift] + (despised,) + ranking[at + 1 + shift :]


def apply_shifts_by_index(election: Election, despised: int, shifts: Sequence[int]) -> Election:
    """``apply_shifts`` for an already validated shift vector and a candidate index."""
    if not any(shifts):
        return election
    rankings = tuple(
        shift_ranking(ranking, despised, shift) for ranking, shift in zip(election.rankings, shifts)
    )
    # permutations are preserved by construction
    return Election.model_construct(candidates=election.candidates, rankings=rankings)


def apply_shifts(election: Election, despised: str, shifts: Sequence[int]) -> Election:
    """
    Shift the despised candidate backward in every vote.

    Parameters
    ----------
    election : Election
        The original election; it is not modified.
    despised : str
        The candidate to move.
    shifts : sequence of int
        ``shifts[i]`` positions for voter ``i``.

    Returns
    -------
    Election
        The bribed election.
    """
    d = election.index_of(despised)
    return apply_shifts_by_index(election, d, check_shifts(election, d, shifts))
