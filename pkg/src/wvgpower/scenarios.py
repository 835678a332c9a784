"""Bundled Greek parliament scenarios (2012-2014) with published index tables.

Goldens are the published two-decimal figures; they are compared at rendering
precision, never treated as exact values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from importlib import resources
from types import MappingProxyType
from typing import Mapping

from wvgpower.apportionment import ElectionResult
from wvgpower.errors import UnknownScenarioError
from wvgpower.game import WeightedVotingGame
from wvgpower.indices import IndexKind, IndexReport
from wvgpower.io import loads_game_file
from wvgpower.myerson import CommunicationGraph

GOLDEN_TOLERANCE = Decimal("0.01")

# Column order of the published tables (left to right on the political axis).
TABLE_ORDER = ("KKE", "SYRIZA", "DIMAR", "PASOK", "ND", "ANEL", "GD")


def _row(*values: str) -> Mapping[str, Decimal]:
    return MappingProxyType(dict(zip(TABLE_ORDER, map(Decimal, values))))


_GOLDENS = {
    "may2012": {
        IndexKind.SSI: _row("0.09", "0.16", "0.06", "0.09", "0.46", "0.09", "0.06"),
        IndexKind.PGI: _row("0.15", "0.10", "0.13", "0.15", "0.21", "0.15", "0.13"),
        IndexKind.MYERSON: _row("0.05", "0.18", "0.22", "0.18", "0.32", "0.05", "0"),
    },
    "june2012": {
        IndexKind.SSI: _row("0.06", "0.12", "0.06", "0.12", "0.52", "0.06", "0.06"),
        IndexKind.PGI: _row("0.14", "0.12", "0.14", "0.12", "0.19", "0.14", "0.14"),
        IndexKind.MYERSON: _row("0.03", "0.12", "0.12", "0.28", "0.42", "0.03", "0"),
    },
    "dec2014": {
        IndexKind.SSI: _row("0.01", "0.16", "0.03", "0.08", "0.63", "0.05", "0.03"),
        IndexKind.PGI: _row("0.06", "0.06", "0.12", "0.19", "0.31", "0.12", "0.12"),
        IndexKind.COLEMAN_PREVENT: _row("0.02", "0.36", "0.06", "0.23", "1", "0.11", "0.11"),
        IndexKind.COLEMAN_INITIATE: _row("0.01", "0.21", "0.04", "0.14", "0.58", "0.06", "0.06"),
    },
}


@dataclass(frozen=True)
class Scenario:
    name: str
    game: WeightedVotingGame
    graph: CommunicationGraph | None = None
    election: ElectionResult | None = None
    goldens: Mapping[IndexKind, Mapping[str, Decimal]] = field(default_factory=dict)
    note: str | None = None


def scenario_names() -> list[str]:
    return list(_GOLDENS)


def scenario_text(name: str) -> str:
    """Raw game-file text of a bundled scenario."""
    if name not in _GOLDENS:
        raise UnknownScenarioError(
            f"unknown scenario {name!r}; bundled: {', '.join(scenario_names())}")
    return resources.files("wvgpower").joinpath("data", f"{name}.json").read_text(encoding="utf-8")


def load_scenario(name: str) -> Scenario:
    gf = loads_game_file(scenario_text(name))
    return Scenario(name, gf.game, gf.graph, gf.election,
                    MappingProxyType(_GOLDENS[name]), gf.note)


@dataclass(frozen=True)
class GoldenDelta:
    kind: IndexKind
    party: str
    computed: Decimal
    golden: Decimal

    @property
    def delta(self) -> Decimal:
        return self.computed - self.golden

    @property
    def ok(self) -> bool:
        return abs(self.delta) <= GOLDEN_TOLERANCE


def golden_diff(scenario: Scenario, reports: list[IndexReport],
                precision: int = 2) -> list[GoldenDelta]:
    """Rendered computed values against the published ones, for every index that has a golden."""
    out = []
    for r in reports:
        golden = scenario.goldens.get(r.kind)
        if golden is None:
            continue
        rendered = dict(zip(r.names, r.rendered(precision)))
        for party in TABLE_ORDER:
            if party in golden and party in rendered:
                out.append(GoldenDelta(r.kind, party, Decimal(rendered[party]), golden[party]))
    return out
