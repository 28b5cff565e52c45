"""Exception types shared across the package."""


class FintopError(Exception):
    """Base class for all library errors."""


class NotReflexive(FintopError):
    """A relation is missing a diagonal pair (i, i)."""

    def __init__(self, i: int):
        self.witness = i
        super().__init__(f"relation is not reflexive: missing ({i}, {i})")


class NotTransitive(FintopError):
    """A relation contains (i, j) and (j, k) but not (i, k)."""

    def __init__(self, i: int, j: int, k: int):
        self.witness = (i, j, k)
        super().__init__(
            f"relation is not transitive: has ({i}, {j}) and ({j}, {k}) but not ({i}, {k})"
        )


class SizeMismatch(FintopError):
    """Two objects that must share a ground set have different sizes."""


class CapExceeded(FintopError):
    """An enumeration request exceeds the configured size cap."""


class EmptyInput(FintopError):
    """An operation that needs a nonempty object received the unit."""
