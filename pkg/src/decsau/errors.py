"""Exception hierarchy shared by every decsau module."""


class DecsauError(Exception):
    """Base class; the CLI maps any subclass to exit code 1."""


class DegenerateKey(DecsauError):
    pass


class DomainError(DecsauError, ValueError):
    pass


class MalformedStream(DecsauError):
    pass


class InconsistentDelta(DecsauError):
    """Ciphertext differences that no DECS-AU shuffle could have produced."""


class LengthMismatch(DecsauError):
    pass


class UnsupportedFormat(DecsauError):
    pass


class MalformedRiff(DecsauError):
    pass


class BadMagic(DecsauError):
    pass


class LengthInconsistency(DecsauError):
    pass
