from typing import Any


class RepContainError(Exception):
    """Base error; carries the process exit code and a JSON-able detail."""

    exit_code = 1

    def __init__(self, detail: Any = None, exit_code: int = None):
        self.detail = detail if detail is not None else self.__class__.__name__
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(str(self.detail))


class InvalidInputError(RepContainError):
    exit_code = 1


class DomainError(InvalidInputError, ValueError):
    """A library precondition was violated (mismatched n, bad partition, ...)."""


class InconsistencyError(RepContainError):
    """Something the theory guarantees did not hold: an implementation bug."""

    exit_code = 2


def require(condition: bool, detail: str):
    if not condition:
        raise DomainError(detail)


def same_n(a, b):
    if a.n != b.n:
        raise DomainError(f"Mismatched number of variables: {a.n} != {b.n}")
    return a.n
