"""Exception types raised across the package."""


class EntropoidError(Exception):
    """Base class for every error raised by this package."""


class ZeroInverse(EntropoidError, ZeroDivisionError):
    pass


class InvalidConstant(EntropoidError, ValueError):
    pass


class NotInvertible(EntropoidError, ValueError):
    pass


class TooLarge(EntropoidError, ValueError):
    """An enumeration guard was exceeded."""


class ExhaustedAttempts(EntropoidError, RuntimeError):
    pass


class InvalidIndex(EntropoidError, ValueError):
    pass


class BadLength(EntropoidError, ValueError):
    pass


class NonCanonical(EntropoidError, ValueError):
    pass


class InvalidPeer(EntropoidError, ValueError):
    pass


class BadDistribution(EntropoidError, ValueError):
    pass


class Inconclusive(EntropoidError):
    """The parity distinguisher landed on neither square root of the unit."""


class ZeroDigest(EntropoidError):
    pass


class MalformedSignature(EntropoidError, ValueError):
    pass
