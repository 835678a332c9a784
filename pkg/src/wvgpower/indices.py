"""Classic power indices with exact rational values.

Swing-based indices (Shapley-Shubik, Banzhaf, Coleman) read a
:class:`SwingProfile`, which one of two engines produces:

* ``"dp"``: a generating-function table counting subsets by (size, weight),
  with each party removed from the full table by deconvolution;
* ``"oracle"``: brute force over all ``2^n`` coalitions.

``"both"`` runs the two and raises :class:`EngineMismatchError` on any
difference.  Holler and Deegan-Packel read the enumerated minimal winning
coalitions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

import numpy as np

from wvgpower.errors import DegenerateGameError, EngineMismatchError, InfeasibleComputationError
from wvgpower.game import DEFAULT_ENUMERATION_CAP, WeightedVotingGame, _check_cap, _subset_weights, catalog

DEFAULT_PRECISION = 2
# (n + 1) x q cells of int64 per table; two tables are live at once.
DP_CELL_BUDGET = 16_000_000
ENGINES = ("dp", "oracle", "both")


class IndexKind(str, enum.Enum):
    SSI = "SSI"
    BANZHAF_ABS = "BanzhafAbs"
    BANZHAF_NORM = "BanzhafNorm"
    PGI = "PGI"
    DEEGAN_PACKEL = "DeeganPackel"
    COLEMAN_INITIATE = "ColemanInitiate"
    COLEMAN_PREVENT = "ColemanPrevent"
    MYERSON = "Myerson"


NORMALIZED_KINDS = frozenset({IndexKind.SSI, IndexKind.BANZHAF_NORM, IndexKind.PGI,
                              IndexKind.DEEGAN_PACKEL})


def render(value: Fraction, places: int = DEFAULT_PRECISION) -> str:
    """Decimal string of ``value`` rounded half away from zero."""
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    q, r = divmod(num * 10**places, den)
    if 2 * r >= den:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def rank_groups(values: Sequence[Fraction]) -> list[list[int]]:
    """Party ids by value, descending; equal values share a group."""
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    groups: list[list[int]] = []
    for i in order:
        if groups and values[groups[-1][0]] == values[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


@dataclass(frozen=True)
class IndexReport:
    kind: IndexKind
    names: tuple[str, ...]
    values: tuple[Fraction, ...]
    engine: str = "exact"
    precision: int = DEFAULT_PRECISION

    def rendered(self, precision: int | None = None) -> tuple[str, ...]:
        places = self.precision if precision is None else precision
        return tuple(render(v, places) for v in self.values)

    @property
    def ranking(self) -> list[list[int]]:
        return rank_groups(self.values)

    def ranking_names(self) -> list[list[str]]:
        return [[self.names[i] for i in group] for group in self.ranking]

    def value(self, name: str) -> Fraction:
        return self.values[self.names.index(name)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.names, self.values))


@dataclass(frozen=True)
class SwingProfile:
    """``counts[i][s]``: subsets of size ``s`` of the other parties for which ``i`` is crucial."""

    counts: tuple[tuple[int, ...], ...]
    winning_count: int

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def swings(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.counts)


def swing_profile_dp(game: WeightedVotingGame, cell_budget: int = DP_CELL_BUDGET) -> SwingProfile:
    n, q, w = game.n, game.quota, game.weights
    if 2 * (n + 1) * q > cell_budget:
        raise InfeasibleComputationError(
            f"size-by-weight table of {(n + 1) * q} cells exceeds the budget of {cell_budget}; "
            "use the oracle engine")
    # full[s, t]: subsets of all parties with size s and weight t < q.
    # Entries never exceed C(64, 32) < 2^63.
    full = np.zeros((n + 1, q), dtype=np.int64)
    full[0, 0] = 1
    for wi in w:
        if wi >= q:
            continue
        shifted = np.zeros_like(full)
        shifted[1:, wi:] = full[:-1, : q - wi]
        full += shifted
    losing_count = sum(int(x) for x in full.sum(axis=1))
    counts = []
    for wi in w:
        # others[s] = full[s] - others[s - 1] shifted by wi (deconvolution)
        others = np.empty_like(full)
        others[0] = full[0]
        for s in range(1, n + 1):
            others[s] = full[s]
            if wi < q:
                others[s, wi:] -= others[s - 1, : q - wi]
        lo = max(q - wi, 0)
        window = others[:n, lo:].sum(axis=1)
        counts.append(tuple(int(x) for x in window))
    return SwingProfile(tuple(counts), (1 << n) - losing_count)


def swing_profile_oracle(game: WeightedVotingGame,
                         cap: int = DEFAULT_ENUMERATION_CAP) -> SwingProfile:
    """Brute-force swing counts: visits every coalition once."""
    _check_cap(game, cap)
    n, q, w = game.n, game.quota, game.weights
    sw = _subset_weights(w)
    counts = [[0] * n for _ in range(n)]
    winning = 0
    for m in range(1 << n):
        total = sw[m]
        if total < q:
            continue
        winning += 1
        size = bin(m).count("1")
        for i in range(n):
            if m >> i & 1 and total - w[i] < q:
                counts[i][size - 1] += 1
    return SwingProfile(tuple(tuple(r) for r in counts), winning)


def swing_profile(game: WeightedVotingGame, engine: str = "dp") -> SwingProfile:
    if engine == "dp":
        return swing_profile_dp(game)
    if engine == "oracle":
        return swing_profile_oracle(game)
    if engine == "both":
        a, b = swing_profile_dp(game), swing_profile_oracle(game)
        if a != b:
            raise EngineMismatchError(f"engines disagree on {game.literal()}: dp={a} oracle={b}")
        return a
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def _report(kind: IndexKind, game: WeightedVotingGame, values, engine: str) -> IndexReport:
    return IndexReport(kind, game.names, tuple(values), engine)


def _profile(game, engine, profile):
    return profile if profile is not None else swing_profile(game, engine)


def shapley_shubik(game: WeightedVotingGame, engine: str = "dp",
                   profile: SwingProfile | None = None) -> IndexReport:
    prof = _profile(game, engine, profile)
    n = game.n
    nf = factorial(n)
    coef = [Fraction(factorial(s) * factorial(n - 1 - s), nf) for s in range(n)]
    values = [sum((c * k for c, k in zip(coef, row) if k), Fraction(0)) for row in prof.counts]
    return _report(IndexKind.SSI, game, values, engine)


def banzhaf(game: WeightedVotingGame, normalized: bool = True, engine: str = "dp",
            profile: SwingProfile | None = None) -> IndexReport:
    eta = _profile(game, engine, profile).swings
    if normalized:
        total = sum(eta)
        if total == 0:
            raise DegenerateGameError("no party has a swing")
        return _report(IndexKind.BANZHAF_NORM, game, (Fraction(e, total) for e in eta), engine)
    denom = 1 << (game.n - 1)
    return _report(IndexKind.BANZHAF_ABS, game, (Fraction(e, denom) for e in eta), engine)


def coleman_prevent(game: WeightedVotingGame, engine: str = "dp",
                    profile: SwingProfile | None = None) -> IndexReport:
    prof = _profile(game, engine, profile)
    if prof.winning_count == 0:
        raise DegenerateGameError("no winning coalition")
    return _report(IndexKind.COLEMAN_PREVENT, game,
                   (Fraction(e, prof.winning_count) for e in prof.swings), engine)


def coleman_initiate(game: WeightedVotingGame, engine: str = "dp",
                     profile: SwingProfile | None = None) -> IndexReport:
    prof = _profile(game, engine, profile)
    losing = (1 << game.n) - prof.winning_count
    if losing == 0:
        raise DegenerateGameError("no losing coalition")
    return _report(IndexKind.COLEMAN_INITIATE, game,
                   (Fraction(e, losing) for e in prof.swings), engine)


def holler_pgi(game: WeightedVotingGame, cap: int = DEFAULT_ENUMERATION_CAP) -> IndexReport:
    membership = catalog(game, cap).mwc_membership
    total = sum(membership)
    return _report(IndexKind.PGI, game, (Fraction(m, total) for m in membership), "enumeration")


def deegan_packel(game: WeightedVotingGame, cap: int = DEFAULT_ENUMERATION_CAP) -> IndexReport:
    mwc = catalog(game, cap).minimal_winning
    values = [Fraction(0)] * game.n
    for s in mwc:
        share = Fraction(1, len(s) * len(mwc))
        for i in s:
            values[i] += share
    return _report(IndexKind.DEEGAN_PACKEL, game, values, "enumeration")

