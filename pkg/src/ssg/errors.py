class SemigroupError(Exception):
    """Base class for everything this package raises on bad input."""


class InvalidOrderError(SemigroupError, ValueError):
    pass


class SizeLimitError(SemigroupError, ValueError):
    pass


class ClosureError(SemigroupError, ValueError):
    pass


class AssociativityError(SemigroupError, ValueError):
    def __init__(self, triple, message=None):
        self.triple = tuple(int(t) for t in triple)
        i, j, k = self.triple
        super().__init__(message or f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class ParseError(SemigroupError, ValueError):
    def __init__(self, message, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", offset {offset})" if offset is not None else ")")
        super().__init__(message + where)


class PreconditionError(SemigroupError, ValueError):
    pass


class MembershipError(PreconditionError):
    pass


class ContainmentError(PreconditionError):
    pass


class EnumerationLimitError(SemigroupError, RuntimeError):
    pass
