"""Exception types shared across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetError(RuntimeError):
    """An operation refused to run because an instance exceeds its size cap."""
