"""Voting power analysis for weighted voting games.

Exact power indices (Shapley-Shubik, Banzhaf, Holler, Deegan-Packel,
Coleman, Myerson), reinforced-proportional seat apportionment, and the
bundled 2012-2014 Greek parliament scenarios.
"""

from wvgpower.errors import (
    DegenerateGameError,
    EngineMismatchError,
    EnumerationTooLargeError,
    GameFileError,
    InfeasibleComputationError,
    NonMajorityGameError,
    PluralityTieError,
    UnknownScenarioError,
    WvgError,
)
from wvgpower.game import (
    Coalition,
    CoalitionCatalog,
    Party,
    WeightedVotingGame,
    catalog,
    characteristic,
    enumerate_minimal_winning,
    is_blocking,
    is_crucial,
    is_null,
)
from wvgpower.indices import (
    IndexKind,
    IndexReport,
    SwingProfile,
    banzhaf,
    coleman_initiate,
    coleman_prevent,
    deegan_packel,
    holler_pgi,
    shapley_shubik,
    swing_profile_dp,
    swing_profile_oracle,
)
from wvgpower.myerson import CommunicationGraph, RestrictedGame, components, myerson_index, restricted_value
from wvgpower.apportionment import ElectionResult, SeatAllocation, allocate, apply_threshold
from wvgpower.scenarios import Scenario, load_scenario, scenario_names

__version__ = "0.1.0"
