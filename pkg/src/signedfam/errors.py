"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all signedfam errors."""


class DuplicateElement(Error):
    """Two pairs of a signed set (or entries of a plain set) share an element."""


class OutOfRange(Error):
    """An element or sign falls outside the governing parameters."""


class WrongSize(Error):
    """A set has the wrong number of pairs for its parameters."""


class TooLarge(Error):
    """A requested family would exceed the configured member cap."""


class SizeExceedsMembers(Error):
    """A shadow size outside the valid range for the member size."""


class NonUniform(Error):
    """Family members do not share a common size."""


class TooFewMembers(Error):
    """An operation needs at least two members to be meaningful."""


class NotTIntersecting(Error):
    """A family fails the pairwise intersection floor it was claimed to meet."""


class MissingPair(Error):
    """A member lacks the common pair that was to be stripped."""


class ContainsOne(Error):
    """A plain set contains element 1 where only tail elements are allowed."""


class NoPerfectMatching(Error):
    """No injective assignment into the shadow exists; a precondition was violated."""


class GroupOverflow(Error):
    """A support class is larger than any pairwise-intersecting class can be."""


class NotIntersecting(Error):
    """The input family has a disjoint pair of members."""


class UnsupportedRange(Error):
    """Parameters outside the range where the construction is valid."""


class VerificationFailed(Error):
    """An internally produced certificate failed its own re-verification."""


class CapExceeded(Error):
    """Enumeration hit its output cap; `partial` holds what was found."""

    def __init__(self, message: str, partial=()):
        super().__init__(message)
        self.partial = list(partial)


class FormatError(Error):
    """Invalid or non-canonical serialized input; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
