"""Exception types shared across the toolkit."""


class PvckitError(Exception):
    """Base class for all toolkit errors."""


class FormatError(PvckitError):
    """An instance file is malformed."""


class InputError(PvckitError):
    """An operation was invoked with arguments that violate its contract."""


class VariantError(InputError):
    """A solver received an instance whose weights do not fit the required variant."""


class NotBipartiteError(InputError):
    """An operation that needs a bipartite graph got an odd cycle instead."""

    def __init__(self, odd_cycle):
        super().__init__("graph is not bipartite (odd cycle: %s)" % (list(odd_cycle),))
        self.odd_cycle = tuple(odd_cycle)


class OracleScaleError(PvckitError):
    """The instance is too large for brute-force verification."""
