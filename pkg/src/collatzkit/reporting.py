"""Small shared report primitives used by the structure verifiers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RelationCheck:
    """Outcome of one named relation inside a structure verification."""

    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CellFailure:
    """A failed check at one cell (i, j) of a two-dimensional array."""

    part: str
    i: int
    j: int
    detail: str

    def describe(self) -> str:
        return f"{self.part} at ({self.i}, {self.j}): {self.detail}"
