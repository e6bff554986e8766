"""Exception hierarchy and the global resource bound."""

import os
from contextlib import contextmanager

DEFAULT_LIMIT = 2_000_000
_override = None


class GlensError(Exception):
    """Base class for every error raised by glens."""


class CodomainMismatch(GlensError):
    pass


class NoFactorization(GlensError):
    pass


class MalformedData(GlensError):
    pass


class ResourceBound(GlensError):
    pass


class IsoFailure(GlensError):
    pass


class LaxatorIncoherent(GlensError):
    pass


class InterfaceMismatch(GlensError):
    pass


class IndexOutOfRange(GlensError, IndexError):
    pass


class ParseError(GlensError):
    """Input did not match a glens schema. ``where`` names the offending field or line."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def resource_limit(limit=None):
    """Resolve the resource bound: explicit argument, then :func:`bounded`, then ``GLENS_LIMIT``, then the default."""
    if limit is not None:
        return int(limit)
    if _override is not None:
        return _override
    env = os.environ.get("GLENS_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"GLENS_LIMIT must be an integer, got {env!r}") from None
    return DEFAULT_LIMIT


def check_bound(count, limit=None, what="enumeration"):
    bound = resource_limit(limit)
    if count > bound:
        raise ResourceBound(f"{what} needs {count} items, limit is {bound}")


@contextmanager
def bounded(limit):
    """Make ``limit`` the default bound inside the block (``None`` leaves it alone)."""
    global _override
    saved = _override
    if limit is not None:
        _override = int(limit)
    try:
        yield
    finally:
        _override = saved
