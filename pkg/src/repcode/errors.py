"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(RuntimeError):
    """A requested enumeration or sweep exceeds its size cap."""


class SpecValidationError(DomainError):
    """A head-set specification is structurally invalid.

    ``problems`` holds ``(where, message)`` pairs, where ``where`` is the
    step index ``j`` (or a 1-based line number when parsing a file).
    """

    def __init__(self, problems: list[tuple[int, str]], *, unit: str = "j") -> None:
        self.problems = problems
        self.unit = unit
        super().__init__("; ".join(f"{unit} {w}: {msg}" for w, msg in problems))

    @property
    def offending(self) -> list[int]:
        return [w for w, _ in self.problems]
