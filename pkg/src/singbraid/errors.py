"""Shared exception types."""

from __future__ import annotations


class NotationError(ValueError):
    """A word failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position

    def __str__(self) -> str:
        base = super().__str__()
        if self.position is not None:
            return f"{base} (at position {self.position})"
        return base


class StrandMismatchError(ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"strand counts differ: {left} vs {right}")
        self.left = left
        self.right = right


class UnsupportedWordError(ValueError):
    """The word uses a feature outside the decidable fragment (τ^{-1})."""


class PurityError(ValueError):
    """An operation required a word with identity permutation."""


class CertificationError(RuntimeError):
    """An internal self-check failed; the result would not be trustworthy."""
