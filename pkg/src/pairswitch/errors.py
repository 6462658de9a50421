"""Exception types shared across the package."""


class PairSwitchError(Exception):
    """Base class for all pairswitch errors."""


class InvalidPorts(PairSwitchError, ValueError):
    """Port count is not an even integer >= 2."""


class InvalidDemand(PairSwitchError, ValueError):
    """Pair list is not a perfect matching of the inputs."""


class IncompleteStates(PairSwitchError, ValueError):
    """Switch-state mapping does not cover the network's switches exactly."""


class InvalidInput(PairSwitchError, ValueError):
    """Malformed argument outside the other categories."""


class BoundExceeded(PairSwitchError):
    """Requested search exceeds the enumeration budget."""
