"""Exception types shared across the package."""


class PropDigraphError(Exception):
    """Base class for all errors raised by this package."""


class OneWayCycleError(PropDigraphError):
    """The digraph contains a directed cycle of one-way edges.

    Such a digraph has no proportionality representation; the offending
    cycle is carried as a witness (vertex list with first == last).
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        pretty = " -> ".join(str(v) for v in self.cycle)
        super().__init__(f"one-way cycle: {pretty}")


class InsufficientZoneError(PropDigraphError):
    """A transfer asked for more points than the zone contains."""


class ResourceLimitError(PropDigraphError):
    """A decision problem exceeded the configured search budget."""


class SentenceSyntaxError(PropDigraphError):
    """Malformed sentence text; carries the offset of the failure."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at offset {position})")
