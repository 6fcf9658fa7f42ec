"""Exception types shared across the package."""


class BruhatError(Exception):
    """Base class for all package errors."""


class OrderError(BruhatError, ValueError):
    """A Bruhat-order precondition failed (u not below v, element outside an interval, ...)."""


class ParseError(BruhatError, ValueError):
    """Malformed textual input (permutation window, reflection, word)."""


class WordError(BruhatError, ValueError):
    """A generator word is not a reduced word for the required element."""


class ConfigError(BruhatError, ValueError):
    """Invalid sweep configuration."""


class CacheError(BruhatError, OSError):
    """The persistent polynomial cache file is unusable."""
