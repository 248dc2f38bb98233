from __future__ import annotations


class SbnError(Exception):
    """Base class for every error raised by the library."""


class ParseError(SbnError, ValueError):
    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None) -> None:
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif offset is not None:
            where = f" (byte {offset})"
        super().__init__(f"{message}{where}")
        self.line = line
        self.offset = offset


class GuardExceeded(SbnError):
    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(
            f"{what}: input of size {size} exceeds the guard of {limit}; "
            "raise it with --guard or the matching SBN_* variable"
        )
        self.what = what
        self.size = size
        self.limit = limit


class StructuralError(SbnError, ValueError):
    """Input is malformed (out-of-range vertex, bag on a missing node, ...)."""


class PreconditionError(SbnError, ValueError):
    pass


class DomainError(SbnError, ValueError):
    pass


class InternalCheckError(SbnError, AssertionError):
    """A certificate or cross-check that must hold did not."""


def check_guard(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise GuardExceeded(what, size, limit)
