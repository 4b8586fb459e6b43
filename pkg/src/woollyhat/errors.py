"""Exception hierarchy.

Every error raised by the package derives from :class:`WoollyHatError`, which
is itself a ``ValueError`` so callers that only care about "bad input" can
catch the builtin.
"""


class WoollyHatError(ValueError):
    pass


class InvalidParams(WoollyHatError):
    """A parameter tuple violates one of the construction constraints.

    ``clause`` names the violated constraint so that the CLI can report it.
    """

    clause = "invalid parameters"

    def __init__(self, message):
        super().__init__(f"{self.clause}: {message}")


class NTooSmall(InvalidParams):
    clause = "n >= 3"


class DegenerateA(InvalidParams):
    clause = "2a != 0 (mod n)"


class RepeatedBCD(InvalidParams):
    clause = "b, c, d pairwise distinct"


class Disconnected(InvalidParams):
    clause = "gcd(n, a, b, c, d) = 1"


class QNotCoprime(WoollyHatError):
    pass


class KNotDivisor(WoollyHatError):
    pass


class NotATwoPath(WoollyHatError):
    pass


class HypothesesNotMet(WoollyHatError):
    pass


class MNotOddOrTooSmall(WoollyHatError):
    pass


class LengthMismatch(WoollyHatError):
    pass


class DomainMismatch(WoollyHatError):
    pass


class NoNormalization(WoollyHatError):
    pass


class NotNormalized(WoollyHatError):
    pass


class PathNotRed(WoollyHatError):
    pass


class NotVertexTransitive(WoollyHatError):
    pass
