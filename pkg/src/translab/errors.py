"""Artifact-level error types.

A LemmaViolation or ClaimViolation means a guaranteed outcome failed to
materialize; by construction this indicates an input outside the stated
preconditions or an implementation bug, never a tolerable condition.
"""

from __future__ import annotations


class LemmaViolation(Exception):
    """A constructive lemma driver exhausted every branch; carries a trace."""

    def __init__(self, message: str, trace: list | None = None):
        super().__init__(message)
        self.trace = list(trace or [])

    def __str__(self) -> str:
        base = super().__str__()
        if not self.trace:
            return base
        lines = "\n  ".join(str(ev) for ev in self.trace)
        return f"{base}\ntrace:\n  {lines}"


class ClaimViolation(Exception):
    """A certified structural guarantee of the poset failed verification."""


class StabilityError(ClaimViolation):
    """A chain stage disagrees with a later stage under restriction."""


class ConstructionError(RuntimeError):
    """An explicit construction produced data that fails re-validation."""

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = list(violations or [])

    def __str__(self) -> str:
        base = super().__str__()
        if not self.violations:
            return base
        lines = "\n  ".join(str(v) for v in self.violations)
        return f"{base}\nviolations:\n  {lines}"


class ParseError(ValueError):
    """Malformed serialized input; message carries the field path."""
