"""Magnitude-valued fuzzy soft matrices.

A MagnitudeMatrix is an objects-by-parameters grid of membership degrees in
[0, 1]. It carries the set operations (union, intersection, complement),
the order relations, the four block products (And/Or/AndNot/OrNot), and the
ordinary sum-of-products multiplication whose output can exceed 1 and is
therefore typed separately as RealMatrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ShapeError


def _check_entries(entries: Sequence[float], lo: float, hi: float | None) -> None:
    for value in entries:
        if not math.isfinite(value):
            raise ValueError(f"matrix entries must be finite, got {value!r}")
        if value < lo or (hi is not None and value > hi):
            bound = f"[{lo:g}, {hi:g}]" if hi is not None else f"[{lo:g}, inf)"
            raise ValueError(f"matrix entries must lie in {bound}, got {value!r}")


@dataclass(frozen=True)
class MagnitudeMatrix:
    """Row-major grid of degrees in [0, 1]."""

    rows: int
    cols: int
    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(float(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        _check_entries(entries, 0.0, 1.0)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, cells: Iterable[Iterable[float]]) -> "MagnitudeMatrix":
        grid = [[float(v) for v in row] for row in cells]
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("matrix rows must all have the same length")
        return cls(len(grid), width, tuple(v for row in grid for v in row))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "MagnitudeMatrix":
        return cls(rows, cols, (0.0,) * (rows * cols))

    @classmethod
    def universal(cls, rows: int, cols: int) -> "MagnitudeMatrix":
        return cls(rows, cols, (1.0,) * (rows * cols))

    @classmethod
    def a_universal(
        cls, rows: int, cols: int, columns: Iterable[int]
    ) -> "MagnitudeMatrix":
        """All-ones in the given columns, zero elsewhere.

        Column positions are 1-based, matching the way parameter positions
        are numbered everywhere else in this module.
        """
        wanted = set(columns)
        for c in wanted:
            if not 1 <= c <= cols:
                raise IndexError(f"column {c} out of range 1..{cols}")
        entries = tuple(
            1.0 if (j + 1) in wanted else 0.0
            for _ in range(rows)
            for j in range(cols)
        )
        return cls(rows, cols, entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def at(self, i: int, j: int) -> float:
        return self.entries[i * self.cols + j]

    def to_lists(self) -> list[list[float]]:
        return [
            [self.at(i, j) for j in range(self.cols)] for i in range(self.rows)
        ]

    def _require_same_shape(self, other: "MagnitudeMatrix", op: str) -> None:
        if self.shape != other.shape:
            raise ShapeError(
                f"{op} needs equal shapes, got "
                f"{self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )

    # -- set operations ----------------------------------------------------

    def union(self, other: "MagnitudeMatrix") -> "MagnitudeMatrix":
        """Entrywise maximum."""
        self._require_same_shape(other, "union")
        return MagnitudeMatrix(
            self.rows,
            self.cols,
            tuple(max(x, y) for x, y in zip(self.entries, other.entries)),
        )

    def intersection(self, other: "MagnitudeMatrix") -> "MagnitudeMatrix":
        """Entrywise minimum."""
        self._require_same_shape(other, "intersection")
        return MagnitudeMatrix(
            self.rows,
            self.cols,
            tuple(min(x, y) for x, y in zip(self.entries, other.entries)),
        )

    def complement(self) -> "MagnitudeMatrix":
        """Entrywise 1 - x."""
        return MagnitudeMatrix(
            self.rows, self.cols, tuple(1.0 - v for v in self.entries)
        )

    # -- order relations ---------------------------------------------------

    def is_submatrix_of(self, other: "MagnitudeMatrix") -> bool:
        """Pointwise less-or-equal."""
        self._require_same_shape(other, "submatrix comparison")
        return all(x <= y for x, y in zip(self.entries, other.entries))

    def is_proper_submatrix_of(self, other: "MagnitudeMatrix") -> bool:
        """Pointwise less-or-equal with at least one strict inequality."""
        self._require_same_shape(other, "submatrix comparison")
        return self.is_submatrix_of(other) and any(
            x < y for x, y in zip(self.entries, other.entries)
        )

    def equals(self, other: "MagnitudeMatrix") -> bool:
        """Pointwise equality; raises on a shape mismatch, unlike ==."""
        self._require_same_shape(other, "equality comparison")
        return self.entries == other.entries

    # -- block products ----------------------------------------------------
    # Output column p holds combine(a[i, j], b[i, k]) at p = n*(j-1)+k for
    # 1-based j, k, so each input column of A spans a block of n columns.

    def _block_product(self, other, combine, op):
        self._require_same_shape(other, op)
        n = self.cols
        out = []
        for i in range(self.rows):
            for j in range(n):
                a = self.at(i, j)
                for k in range(n):
                    out.append(combine(a, other.at(i, k)))
        return MagnitudeMatrix(self.rows, n * n, tuple(out))

    def and_product(self, other: "MagnitudeMatrix") -> "MagnitudeMatrix":
        return self._block_product(other, lambda a, b: min(a, b), "And product")

    def or_product(self, other: "MagnitudeMatrix") -> "MagnitudeMatrix":
        return self._block_product(other, lambda a, b: max(a, b), "Or product")

    def and_not_product(self, other: "MagnitudeMatrix") -> "MagnitudeMatrix":
        return self._block_product(other, lambda a, b: min(a, 1.0 - b), "AndNot product")

    def or_not_product(self, other: "MagnitudeMatrix") -> "MagnitudeMatrix":
        return self._block_product(other, lambda a, b: max(a, 1.0 - b), "OrNot product")

    # -- ordinary multiplication --------------------------------------------

    def usual_product(self, other: "MagnitudeMatrix") -> "RealMatrix":
        """Standard sum-of-products matrix multiplication.

        Entries are not clamped: a product of m x n and n x p degree
        matrices can reach n, which is why the result is a RealMatrix.
        """
        if self.cols != other.rows:
            raise ShapeError(
                f"usual product needs inner dimensions to agree, got "
                f"{self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        entries = []
        for i in range(self.rows):
            for j in range(other.cols):
                entries.append(
                    sum(self.at(i, k) * other.at(k, j) for k in range(self.cols))
                )
        return RealMatrix(self.rows, other.cols, tuple(entries))


@dataclass(frozen=True)
class RealMatrix:
    """Row-major grid of non-negative reals with no upper bound."""

    rows: int
    cols: int
    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(float(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        _check_entries(entries, 0.0, None)
        object.__setattr__(self, "entries", entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def at(self, i: int, j: int) -> float:
        return self.entries[i * self.cols + j]

    def to_lists(self) -> list[list[float]]:
        return [
            [self.at(i, j) for j in range(self.cols)] for i in range(self.rows)
        ]


@dataclass(frozen=True)
class FuzzySoftSetTable:
    """A fuzzy soft set in relation form: degree per (object, parameter).

    Pairs absent from ``memberships`` default to degree 0, which is also how
    parameters outside the approximation set are represented.
    """

    universe: tuple[str, ...]
    parameters: tuple[str, ...]
    memberships: Mapping[tuple[str, str], float]

    def __post_init__(self) -> None:
        universe = tuple(self.universe)
        parameters = tuple(self.parameters)
        if not universe or not parameters:
            raise ValueError("universe and parameter lists must be non-empty")
        if len(set(universe)) != len(universe):
            raise ValueError("object labels must be unique")
        if len(set(parameters)) != len(parameters):
            raise ValueError("parameter labels must be unique")
        known_u, known_p = set(universe), set(parameters)
        memberships = dict(self.memberships)
        for (u, x), degree in memberships.items():
            if u not in known_u or x not in known_p:
                raise ValueError(f"membership for unknown pair ({u!r}, {x!r})")
            if not (math.isfinite(degree) and 0.0 <= degree <= 1.0):
                raise ValueError(
                    f"membership for ({u!r}, {x!r}) must lie in [0, 1], got {degree!r}"
                )
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "memberships", memberships)

    def to_matrix(self) -> MagnitudeMatrix:
        """Rows follow universe order, columns follow parameter order."""
        return MagnitudeMatrix.from_rows(
            [
                [float(self.memberships.get((u, x), 0.0)) for x in self.parameters]
                for u in self.universe
            ]
        )
