"""Reinforced proportional representation with a plurality bonus.

Parties at or above the vote threshold share the proportional seats by
largest remainder (Hare quota) over their renormalized shares; the party with
the most votes then receives the bonus seats on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from wvgpower.errors import GameFileError, NoQualifyingPartyError, PluralityTieError
from wvgpower.game import WeightedVotingGame


@dataclass(frozen=True)
class ElectionResult:
    """Vote shares (fractions of the valid vote) or raw counts per party.

    ``total_votes=None`` means ``votes`` already are shares summing to at
    most 1; otherwise shares are ``votes / total_votes``.
    """

    names: tuple[str, ...]
    votes: tuple[Fraction, ...]
    total_seats: int = 300
    proportional_seats: int = 250
    bonus_seats: int = 50
    threshold: Fraction = Fraction(3, 100)
    total_votes: Fraction | None = None

    def __post_init__(self):
        if len(self.names) != len(self.votes):
            raise GameFileError("names and votes differ in length")
        if len(set(self.names)) != len(self.names):
            raise GameFileError(f"party names must be unique: {list(self.names)}")
        if any(v < 0 for v in self.votes):
            raise GameFileError("votes must be nonnegative")
        if self.proportional_seats + self.bonus_seats != self.total_seats:
            raise GameFileError("proportional and bonus seats must add up to the house size")
        total = 1 if self.total_votes is None else self.total_votes
        if sum(self.votes) > total:
            raise GameFileError("listed votes exceed the total")

    @classmethod
    def from_percentages(cls, entries: Sequence[tuple[str, str | int | Fraction]],
                         **kwargs) -> "ElectionResult":
        """``("ND", "18.85")`` means 18.85% of the vote; strings are read exactly."""
        names = tuple(nm for nm, _ in entries)
        shares = tuple(Fraction(p) / 100 for _, p in entries)
        if sum(shares) > 1:
            raise GameFileError(f"percentages sum to {float(sum(shares)) * 100:.2f} > 100")
        return cls(names, shares, **kwargs)

    @classmethod
    def from_counts(cls, entries: Sequence[tuple[str, int]], total_votes: int | None = None,
                    **kwargs) -> "ElectionResult":
        names = tuple(nm for nm, _ in entries)
        counts = tuple(Fraction(c) for _, c in entries)
        total = Fraction(total_votes) if total_votes is not None else Fraction(sum(counts))
        return cls(names, counts, total_votes=total, **kwargs)

    @property
    def shares(self) -> tuple[Fraction, ...]:
        total = self.total_votes if self.total_votes is not None else Fraction(1)
        return tuple(v / total for v in self.votes)


@dataclass(frozen=True)
class SeatAllocation:
    names: tuple[str, ...]
    seats: tuple[int, ...]
    qualifying: tuple[bool, ...]
    winner: int
    proportional: tuple[int, ...]

    def game(self, quota: int) -> WeightedVotingGame:
        """Weighted voting game over the seated parties."""
        seated = [(nm, s) for nm, s in zip(self.names, self.seats) if s > 0]
        return WeightedVotingGame.from_weights(quota, [s for _, s in seated],
                                               [nm for nm, _ in seated])


def apply_threshold(result: ElectionResult) -> list[int]:
    """Ids of parties whose share reaches the threshold (inclusive)."""
    qualifying = [i for i, s in enumerate(result.shares) if s >= result.threshold]
    if not qualifying:
        raise NoQualifyingPartyError("no party reaches the representation threshold")
    return qualifying


def hare_largest_remainder(votes: Sequence[Fraction], seats: int) -> list[int]:
    """Largest-remainder allocation; remainder ties go to the larger vote, then the earlier party."""
    total = sum(votes)
    quotas = [v * seats / total for v in votes]
    alloc = [floor(qv) for qv in quotas]
    left = seats - sum(alloc)
    order = sorted(range(len(votes)), key=lambda i: (-(quotas[i] - alloc[i]), -votes[i], i))
    for i in order[:left]:
        alloc[i] += 1
    return alloc


def allocate(result: ElectionResult) -> SeatAllocation:
    qualifying = apply_threshold(result)
    shares = result.shares
    top = max(shares[i] for i in qualifying)
    leaders = [i for i in qualifying if shares[i] == top]
    if len(leaders) > 1:
        raise PluralityTieError(
            "plurality tie between " + ", ".join(result.names[i] for i in leaders))
    winner = leaders[0]
    prop = hare_largest_remainder([shares[i] for i in qualifying], result.proportional_seats)
    proportional = [0] * len(result.names)
    for i, s in zip(qualifying, prop):
        proportional[i] = s
    seats = list(proportional)
    seats[winner] += result.bonus_seats
    qual = set(qualifying)
    return SeatAllocation(result.names, tuple(seats),
                          tuple(i in qual for i in range(len(result.names))),
                          winner, tuple(proportional))
