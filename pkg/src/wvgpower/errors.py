"""Exception hierarchy. Each class carries the CLI exit status it maps to."""


class WvgError(Exception):
    exit_code = 1


class GameFileError(WvgError, ValueError):
    """Malformed game/election document or invalid game parameters."""

    exit_code = 1


class UnknownScenarioError(WvgError, KeyError):
    exit_code = 1

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class InfeasibleComputationError(WvgError):
    """A computation would exceed its configured size budget."""

    exit_code = 2


class EnumerationTooLargeError(InfeasibleComputationError):
    pass


class EngineMismatchError(WvgError):
    exit_code = 2


class DegenerateGameError(WvgError, ValueError):
    exit_code = 2


class NonMajorityGameError(WvgError, ValueError):
    exit_code = 1


class PluralityTieError(WvgError, ValueError):
    exit_code = 1


class NoQualifyingPartyError(WvgError, ValueError):
    exit_code = 1
