"""Exception types shared across the toolkit.

The CLI maps these to exit codes: SpecError (and subclasses) -> 2,
SizeLimitError -> 3.
"""


class EpgError(Exception):
    """Base class for toolkit errors."""


class SpecError(EpgError):
    """Malformed input: group spec, expression, cycle notation, or file schema."""


class ActionError(SpecError):
    """A semidirect-product action failed automorphism or homomorphism validation."""


class NormalityError(SpecError):
    """A quotient was requested by a subset that is not a normal subgroup."""


class MembershipError(SpecError):
    """A permutation is not an element of the stated group."""


class SizeLimitError(EpgError):
    """A configured resource cap (group order, graph build, clique count) was exceeded."""

    def __init__(self, message: str, *, cap: int | None = None):
        super().__init__(message)
        self.cap = cap
