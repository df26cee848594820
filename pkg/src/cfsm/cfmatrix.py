"""Complex fuzzy numbers and matrices.

Values live on the closed unit disc in polar form: an amplitude in [0, 1]
and a phase in [0, 2*pi) radians. "Addition" of matrices is the entrywise
componentwise maximum and composition is max-min, so every operation stays
on the disc.

Phase convention: both the join (max) and the meet (min) of two values act
componentwise, pairing the larger amplitude with the larger phase and the
smaller amplitude with the smaller phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ShapeError

TWO_PI = 2.0 * math.pi


def wrap_phase(phase: float) -> float:
    """Reduce an angle to the interval [0, 2*pi)."""
    p = math.fmod(phase, TWO_PI)
    if p < 0.0:
        p += TWO_PI
    if p >= TWO_PI:  # the addition above can land exactly on 2*pi
        p = 0.0
    return p


@dataclass(frozen=True)
class ComplexFuzzyNumber:
    """A unit-disc membership value r*e^(i*w), stored as (r, w).

    The amplitude r must lie in [0, 1]; out-of-range values are rejected
    rather than clamped. The phase is normalized modulo 2*pi at
    construction, so equal values compare equal.
    """

    amplitude: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        amp = float(self.amplitude)
        if not (math.isfinite(amp) and 0.0 <= amp <= 1.0):
            raise ValueError(f"amplitude must lie in [0, 1], got {self.amplitude!r}")
        ph = float(self.phase)
        if not math.isfinite(ph):
            raise ValueError(f"phase must be finite, got {self.phase!r}")
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "phase", wrap_phase(ph))

    def __abs__(self) -> float:
        # |r*e^(i*w)| = r, independent of the phase
        return self.amplitude

    def conjugate(self) -> "ComplexFuzzyNumber":
        """Negated phase, renormalized; a zero phase stays zero."""
        if self.phase == 0.0:
            return self
        return ComplexFuzzyNumber(self.amplitude, TWO_PI - self.phase)

    def evaluate(self) -> complex:
        """The ordinary complex number r*(cos w + i sin w)."""
        return complex(
            self.amplitude * math.cos(self.phase),
            self.amplitude * math.sin(self.phase),
        )


def fuzzy_max(a: ComplexFuzzyNumber, b: ComplexFuzzyNumber) -> ComplexFuzzyNumber:
    """Componentwise maximum of amplitudes and phases."""
    return ComplexFuzzyNumber(max(a.amplitude, b.amplitude), max(a.phase, b.phase))


def fuzzy_min(a: ComplexFuzzyNumber, b: ComplexFuzzyNumber) -> ComplexFuzzyNumber:
    """Componentwise minimum of amplitudes and phases."""
    return ComplexFuzzyNumber(min(a.amplitude, b.amplitude), min(a.phase, b.phase))


Cell = Union[ComplexFuzzyNumber, Sequence[float], float, int]


def _coerce(cell: Cell) -> ComplexFuzzyNumber:
    if isinstance(cell, ComplexFuzzyNumber):
        return cell
    if isinstance(cell, (int, float)):
        return ComplexFuzzyNumber(float(cell))
    amplitude, phase = cell
    return ComplexFuzzyNumber(float(amplitude), float(phase))


@dataclass(frozen=True)
class ComplexFuzzyMatrix:
    """A rectangular grid of ComplexFuzzyNumber entries, stored row-major."""

    rows: int
    cols: int
    entries: tuple[ComplexFuzzyNumber, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, cells: Iterable[Iterable[Cell]]) -> "ComplexFuzzyMatrix":
        """Build from nested rows of ComplexFuzzyNumber, (amplitude, phase)
        pairs, or bare amplitudes (phase 0)."""
        grid = [[_coerce(cell) for cell in row] for row in cells]
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("matrix rows must all have the same length")
        return cls(len(grid), width, tuple(c for row in grid for c in row))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def at(self, i: int, j: int) -> ComplexFuzzyNumber:
        return self.entries[i * self.cols + j]

    def amplitudes(self) -> list[list[float]]:
        return [
            [self.at(i, j).amplitude for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def phases(self) -> list[list[float]]:
        return [
            [self.at(i, j).phase for j in range(self.cols)] for i in range(self.rows)
        ]

    def _require_same_shape(self, other: "ComplexFuzzyMatrix", op: str) -> None:
        if self.shape != other.shape:
            raise ShapeError(
                f"{op} needs equal shapes, got "
                f"{self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )

    def fuzzy_add(self, other: "ComplexFuzzyMatrix") -> "ComplexFuzzyMatrix":
        """Entrywise componentwise maximum."""
        self._require_same_shape(other, "fuzzy addition")
        return ComplexFuzzyMatrix(
            self.rows,
            self.cols,
            tuple(fuzzy_max(x, y) for x, y in zip(self.entries, other.entries)),
        )

    def maxmin(self, other: "ComplexFuzzyMatrix") -> "ComplexFuzzyMatrix":
        """Max-min composition: entry (i, j) is the componentwise maximum
        over k of the componentwise minimum of self[i, k] and other[k, j]."""
        if self.cols != other.rows:
            raise ShapeError(
                f"max-min product needs inner dimensions to agree, got "
                f"{self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = fuzzy_min(self.at(i, 0), other.at(0, j))
                for k in range(1, self.cols):
                    acc = fuzzy_max(acc, fuzzy_min(self.at(i, k), other.at(k, j)))
                out.append(acc)
        return ComplexFuzzyMatrix(self.rows, other.cols, tuple(out))

    def trace(self) -> ComplexFuzzyNumber:
        """Componentwise maximum over the diagonal of a square matrix."""
        if self.rows != self.cols:
            raise ShapeError(f"trace needs a square matrix, got {self.rows}x{self.cols}")
        acc = self.at(0, 0)
        for i in range(1, self.rows):
            acc = fuzzy_max(acc, self.at(i, i))
        return acc

    def conjugate_transpose(self) -> "ComplexFuzzyMatrix":
        """Transpose with every entry conjugated."""
        out = tuple(
            self.at(i, j).conjugate()
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return ComplexFuzzyMatrix(self.cols, self.rows, out)
