"""Exception types shared across the package."""


class UKrullError(Exception):
    pass


class CertificationError(UKrullError):
    """A computation needs data above a module's certified degree."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class WindowError(CertificationError):
    """A requested degree range lies outside the usable window."""


class DesuspensionError(UKrullError):
    pass


class NotLocallyFinite(UKrullError):
    pass


class RankExhausted(UKrullError):
    pass


class NoCoproduct(UKrullError):
    pass


class IdealNotStable(UKrullError):
    pass


class ParseError(UKrullError):
    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at offset {offset}; expected one of {sorted(expected)}")
        self.offset = offset
        self.expected = frozenset(expected)
