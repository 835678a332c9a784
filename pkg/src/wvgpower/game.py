"""Weighted voting games, coalition predicates and coalition enumeration.

A game ``[q; w_1, ..., w_n]`` lets a coalition win iff its total weight meets
or exceeds the quota ``q``.  Coalitions are bitmasks over party indices, bit
``i`` standing for party ``i``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from wvgpower.errors import EnumerationTooLargeError, GameFileError

MAX_PLAYERS = 64
DEFAULT_ENUMERATION_CAP = 30


@dataclass(frozen=True)
class Party:
    id: int
    name: str
    weight: int


@dataclass(frozen=True)
class Coalition:
    """A set of parties stored as a bitmask."""

    members: int = 0

    @classmethod
    def of(cls, ids: Iterable[int]) -> "Coalition":
        mask = 0
        for i in ids:
            mask |= 1 << i
        return cls(mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.members >> i & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.members
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return bin(self.members).count("1")

    def __or__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.members | other.members)

    def with_(self, i: int) -> "Coalition":
        return Coalition(self.members | 1 << i)

    def without(self, i: int) -> "Coalition":
        return Coalition(self.members & ~(1 << i))

    def issubset(self, other: "Coalition") -> bool:
        return self.members & ~other.members == 0


@dataclass(frozen=True)
class WeightedVotingGame:
    parties: tuple[Party, ...]
    quota: int

    def __post_init__(self):
        n = len(self.parties)
        if n == 0:
            raise GameFileError("a game needs at least one party")
        if n > MAX_PLAYERS:
            raise GameFileError(f"at most {MAX_PLAYERS} parties are supported, got {n}")
        names = [p.name for p in self.parties]
        if len(set(names)) != n:
            raise GameFileError(f"party names must be unique: {names}")
        for i, p in enumerate(self.parties):
            if p.id != i:
                raise GameFileError(f"party {p.name!r} has id {p.id}, expected {i}")
            if not isinstance(p.weight, int) or isinstance(p.weight, bool) or p.weight < 0:
                raise GameFileError(f"weight of {p.name!r} must be a nonnegative integer")
        if not isinstance(self.quota, int) or isinstance(self.quota, bool):
            raise GameFileError("quota must be an integer")
        if not 0 < self.quota <= self.total_weight:
            raise GameFileError(
                f"quota must satisfy 0 < q <= {self.total_weight}, got {self.quota}")

    @classmethod
    def from_weights(cls, quota: int, weights: Sequence[int],
                     names: Sequence[str] | None = None) -> "WeightedVotingGame":
        if names is None:
            names = [_default_name(i) for i in range(len(weights))]
        if len(names) != len(weights):
            raise GameFileError("names and weights differ in length")
        parties = tuple(Party(i, str(nm), w) for i, (nm, w) in enumerate(zip(names, weights)))
        return cls(parties, quota)

    @property
    def n(self) -> int:
        return len(self.parties)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(p.weight for p in self.parties)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.parties)

    @property
    def total_weight(self) -> int:
        return sum(p.weight for p in self.parties)

    @property
    def is_majority(self) -> bool:
        return 2 * self.quota > self.total_weight

    @property
    def grand(self) -> Coalition:
        return Coalition((1 << self.n) - 1)

    def index(self, name: str) -> int:
        for p in self.parties:
            if p.name == name:
                return p.id
        raise KeyError(name)

    def coalition(self, *names: str) -> Coalition:
        return Coalition.of(self.index(nm) for nm in names)

    def weight(self, s: Coalition) -> int:
        return sum(self.parties[i].weight for i in s)

    def with_quota(self, quota: int) -> "WeightedVotingGame":
        return WeightedVotingGame(self.parties, quota)

    def literal(self) -> str:
        return f"[{self.quota}; {', '.join(str(w) for w in self.weights)}]"

    def _check(self, s: Coalition) -> None:
        if s.members >> self.n:
            raise ValueError(f"coalition {s.members:#x} has members outside 0..{self.n - 1}")


def _default_name(i: int) -> str:
    # A, B, ..., Z, P26, P27, ...
    return chr(ord("A") + i) if i < 26 else f"P{i}"


def warn_if_not_proper(game: WeightedVotingGame) -> None:
    """Complements of winning coalitions may also win when ``2q <= total``."""
    if not game.is_majority:
        warnings.warn(
            f"quota {game.quota} is at most half of total weight {game.total_weight}; "
            "a winning coalition and its complement can both win",
            stacklevel=2,
        )


def characteristic(game: WeightedVotingGame, s: Coalition) -> int:
    game._check(s)
    return 1 if game.weight(s) >= game.quota else 0


def is_blocking(game: WeightedVotingGame, s: Coalition) -> bool:
    game._check(s)
    complement = Coalition(game.grand.members & ~s.members)
    return characteristic(game, s) == 0 and characteristic(game, complement) == 0


def is_crucial(game: WeightedVotingGame, i: int, s: Coalition) -> bool:
    """True iff adding party ``i`` turns the losing coalition ``s`` into a winning one."""
    game._check(s)
    if i in s:
        raise ValueError(f"party {i} is already a member of the coalition")
    ws = game.weight(s)
    return ws < game.quota <= ws + game.parties[i].weight


def is_null(game: WeightedVotingGame, i: int) -> bool:
    # i has a swing iff some subset of the others lands in [q - w_i, q - 1];
    # scanning achievable subset sums avoids walking 2^(n-1) coalitions.
    w_i = game.parties[i].weight
    if w_i == 0:
        return True
    lo, hi = game.quota - w_i, game.quota - 1
    reachable = 1  # bit t set <=> some subset of the others weighs t
    limit = (1 << game.quota) - 1
    for p in game.parties:
        if p.id != i:
            reachable = (reachable | reachable << p.weight) & limit
    window = ((1 << (hi - max(lo, 0) + 1)) - 1) << max(lo, 0)
    return reachable & window == 0


@dataclass(frozen=True)
class CoalitionCatalog:
    winning_count: int
    minimal_winning: tuple[Coalition, ...]
    swings_per_party: tuple[int, ...]
    # per party, the number of minimal winning coalitions containing it
    mwc_membership: tuple[int, ...] = field(default=())


def _subset_weights(weights: Sequence[int]) -> list[int]:
    n = len(weights)
    out = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        out[m] = out[m ^ low] + weights[low.bit_length() - 1]
    return out


def _check_cap(game: WeightedVotingGame, cap: int) -> None:
    if game.n > cap:
        raise EnumerationTooLargeError(
            f"exhaustive enumeration over {game.n} parties exceeds the cap of {cap}")


def enumerate_minimal_winning(game: WeightedVotingGame,
                              cap: int = DEFAULT_ENUMERATION_CAP) -> list[Coalition]:
    """Minimal winning coalitions, ordered by size then bitmask."""
    return list(catalog(game, cap).minimal_winning)


def catalog(game: WeightedVotingGame, cap: int = DEFAULT_ENUMERATION_CAP) -> CoalitionCatalog:
    _check_cap(game, cap)
    n, q, w = game.n, game.quota, game.weights
    sw = _subset_weights(w)
    winning = 0
    swings = [0] * n
    minimal = []
    for m in range(1 << n):
        total = sw[m]
        if total < q:
            continue
        winning += 1
        crucial_all = True
        rest = m
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if total - w[i] < q:
                swings[i] += 1
            else:
                crucial_all = False
            rest ^= low
        if crucial_all:
            minimal.append(m)
    minimal.sort(key=lambda m: (bin(m).count("1"), m))
    membership = [sum(m >> i & 1 for m in minimal) for i in range(n)]
    return CoalitionCatalog(
        winning_count=winning,
        minimal_winning=tuple(Coalition(m) for m in minimal),
        swings_per_party=tuple(swings),
        mwc_membership=tuple(membership),
    )
