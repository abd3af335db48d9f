"""Shared exception types.

Computation errors (bad input, resource caps) subclass OligoprofileError;
the CLI maps them to exit code 1.  ExpressionParseError carries a byte
offset and the tokens that would have been accepted there; the CLI maps
it to exit code 2.
"""


class OligoprofileError(Exception):
    """Base class for all computation errors raised by this package."""


class CapExceeded(OligoprofileError):
    """Group enumeration grew past the configured order cap."""


class NotTransitive(OligoprofileError):
    """Operation requires a transitive action."""


class DegreeTooLarge(OligoprofileError):
    """Brute-force partition search is only supported at small degree."""


class DegreeMismatch(OligoprofileError):
    """Two objects live on point sets of different sizes."""


class NotFullSymmetricOnBlocks(OligoprofileError):
    """Tower construction requires the full symmetric action on blocks."""


class GroupMismatch(OligoprofileError):
    """Orbit algebra elements belong to different groups."""


class NotSubgroup(OligoprofileError):
    """Claimed subgroup is not contained in the ambient group."""


class NotNormal(OligoprofileError):
    """Averaging operator requires a normal subgroup."""


class NonIntegerResult(OligoprofileError):
    """Exact substitution produced a non-integer; indicates an internal bug."""


class NotDivisible(OligoprofileError):
    """Requested denominator does not contain the reduced denominator."""


class ZeroAtOne(OligoprofileError):
    """Numerator still vanished at 1 after reduction; indicates an internal bug."""


class TruncationTooLarge(OligoprofileError):
    """Finite truncation would exceed the supported point or subset budget."""


class ExpressionParseError(OligoprofileError):
    """Syntax error in a group expression or group file.

    offset is the byte position of the failure in the input text and
    expected lists the token descriptions that were acceptable there.
    """

    def __init__(self, offset, expected, found=None):
        self.offset = offset
        self.expected = list(expected)
        self.found = found
        message = "parse error at byte {}: expected {}".format(
            offset, " or ".join(self.expected)
        )
        if found is not None:
            message += f"; found {found}"
        super().__init__(message)
