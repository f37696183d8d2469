"""Validation reports and the exception family shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    axiom: str
    where: tuple
    detail: str = ""

    def __str__(self):
        loc = ", ".join(str(w) for w in self.where)
        msg = f"{self.axiom} at ({loc})"
        return msg + (f": {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    """Accumulates axiom violations; empty report means the structure is valid."""

    violations: list[Violation] = field(default_factory=list)

    def add(self, axiom, where, detail=""):
        self.violations.append(Violation(axiom, tuple(where), detail))

    @property
    def ok(self):
        return not self.violations

    def merge(self, other):
        self.violations.extend(other.violations)
        return self

    def named(self, axiom):
        return [v for v in self.violations if v.axiom == axiom]

    def __len__(self):
        return len(self.violations)

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


class GraycatError(Exception):
    """Base for all library errors."""


class InputError(GraycatError):
    """Malformed or dangling input data (exit code 3 territory)."""


class BudgetExceeded(GraycatError):
    """A bounded search ran out of budget; the verdict is inconclusive."""

    def __init__(self, what, bound):
        super().__init__(f"budget exceeded in {what} (bound {bound})")
        self.what = what
        self.bound = bound


class UnsupportedOperation(GraycatError):
    """Operation deliberately not provided (e.g. enumerating cells of a presented structure)."""


class ConsistencyError(GraycatError):
    """An internal invariant failed on input that was supposed to be valid."""
