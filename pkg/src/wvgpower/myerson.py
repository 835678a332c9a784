"""Communication structures and the Myerson index.

A coalition can only act through its connected pieces: the restricted game
scores a coalition by summing the base game over the connected components
of its induced subgraph, and the Myerson index is the Shapley value of that
restricted game.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable

from wvgpower.errors import EnumerationTooLargeError, GameFileError, NonMajorityGameError
from wvgpower.game import Coalition, WeightedVotingGame, _subset_weights
from wvgpower.indices import IndexKind, IndexReport

DEFAULT_MYERSON_CAP = 25


@dataclass(frozen=True)
class CommunicationGraph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        normalized = set()
        for a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GameFileError(f"edge ({a}, {b}) has an endpoint outside 0..{self.n - 1}")
            if a != b:
                normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_names(cls, game: WeightedVotingGame,
                   pairs: Iterable[tuple[str, str]]) -> "CommunicationGraph":
        edges = set()
        for a, b in pairs:
            try:
                edges.add((game.index(a), game.index(b)))
            except KeyError as exc:
                raise GameFileError(f"edge ({a}, {b}) names unknown party {exc.args[0]!r}") from None
        return cls(game.n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> "CommunicationGraph":
        return cls(n, frozenset((a, b) for a in range(n) for b in range(a + 1, n)))

    @property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return tuple(adj)

    def edge_names(self, names: tuple[str, ...]) -> list[tuple[str, str]]:
        return [(names[a], names[b]) for a, b in sorted(self.edges)]


def _components(adj: tuple[int, ...], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grow = adj[low.bit_length() - 1] & mask & ~comp
            comp |= grow
            frontier |= grow
        out.append(comp)
        rest &= ~comp
    return out


def components(graph: CommunicationGraph, s: Coalition) -> list[Coalition]:
    """Maximal connected pieces of ``s``, ordered by lowest member."""
    return [Coalition(c) for c in _components(graph.adjacency, s.members)]


@dataclass(frozen=True)
class RestrictedGame:
    """Graph-restricted version of a weighted majority game.

    All ``2^n`` values are computed on construction, so lookups are plain
    reads and safe to share between threads.
    """

    base: WeightedVotingGame
    graph: CommunicationGraph
    cap: int = DEFAULT_MYERSON_CAP
    values: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        game, graph = self.base, self.graph
        if graph.n != game.n:
            raise GameFileError(f"graph has {graph.n} parties, game has {game.n}")
        if not game.is_majority:
            raise NonMajorityGameError(
                f"restricted games need a majority quota (2q > {game.total_weight}), got q={game.quota}")
        if game.n > self.cap:
            raise EnumerationTooLargeError(
                f"restricted game over {game.n} parties exceeds the cap of {self.cap}")
        adj = graph.adjacency
        sw = _subset_weights(game.weights)
        q = game.quota
        values = [0] * (1 << game.n)
        for m in range(1, 1 << game.n):
            if sw[m] < q:
                continue
            # at most one component can win under a majority quota
            values[m] = int(any(sw[c] >= q for c in _components(adj, m)))
        object.__setattr__(self, "values", tuple(values))

    def value(self, s: Coalition) -> int:
        return self.values[s.members]


def restricted_value(rgame: RestrictedGame, s: Coalition) -> int:
    rgame.base._check(s)
    return rgame.value(s)


def myerson_index(game: WeightedVotingGame, graph: CommunicationGraph,
                  cap: int = DEFAULT_MYERSON_CAP) -> IndexReport:
    rgame = RestrictedGame(game, graph, cap)
    n = game.n
    v = rgame.values
    # marginal contributions tallied per party and per coalition size
    tallies = [[0] * n for _ in range(n)]
    for m in range(1 << n):
        if not v[m]:
            continue
        size = bin(m).count("1") - 1
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            if not v[m ^ low]:
                tallies[low.bit_length() - 1][size] += 1
    nf = factorial(n)
    coef = [Fraction(factorial(s) * factorial(n - 1 - s), nf) for s in range(n)]
    values = [sum((c * k for c, k in zip(coef, row) if k), Fraction(0)) for row in tallies]
    return IndexReport(IndexKind.MYERSON, game.names, tuple(values), "enumeration")
