"""Definition-literal recomputations and algebraic-law checkers.

Everything here re-derives results straight from the defining formulas,
without calling the arithmetic helpers of the modules under test, so a bug
cannot hide on both sides of a comparison. Runs are deterministic for a
fixed seed.
"""

from __future__ import annotations

import cmath
import hashlib
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .cfmatrix import ComplexFuzzyMatrix
from .errors import ShapeError
from .fourier import SignalSample
from .softmatrix import MagnitudeMatrix

Grid = list[list[float]]


def naive_maxmin(a: ComplexFuzzyMatrix, b: ComplexFuzzyMatrix) -> ComplexFuzzyMatrix:
    """Triple-loop max-min composition, amplitudes and phases tracked by
    hand instead of through the fuzzy_min/fuzzy_max helpers."""
    if a.cols != b.rows:
        raise ShapeError(
            f"max-min product needs inner dimensions to agree, got "
            f"{a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            best_amp = -1.0
            best_phase = -1.0
            for k in range(a.cols):
                left = a.at(i, k)
                right = b.at(k, j)
                amp = left.amplitude if left.amplitude < right.amplitude else right.amplitude
                phase = left.phase if left.phase < right.phase else right.phase
                if amp > best_amp:
                    best_amp = amp
                if phase > best_phase:
                    best_phase = phase
            row.append((best_amp, best_phase))
        rows.append(row)
    return ComplexFuzzyMatrix.from_rows(rows)


@dataclass(frozen=True)
class LawFailure:
    inputs_digest: str
    lhs: tuple[tuple[float, ...], ...]
    rhs: tuple[tuple[float, ...], ...]
    max_deviation: float


@dataclass(frozen=True)
class LawReport:
    law: str
    trials: int
    failures: tuple[LawFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


LAW_NAMES = (
    "intersection_commutative",
    "union_commutative",
    "intersection_associative",
    "union_associative",
    "intersection_distributes_over_union",
    "union_distributes_over_intersection",
    "demorgan_union",
    "demorgan_intersection",
)

Complement = Callable[[MagnitudeMatrix], Grid]


def _random_grid(rng: random.Random, rows: int, cols: int) -> Grid:
    # degrees on the 0.05 grid keep failure reports readable
    return [[rng.randrange(21) * 0.05 for _ in range(cols)] for _ in range(rows)]


def _digest(*grids: Grid) -> str:
    return hashlib.sha1(repr(grids).encode("utf-8")).hexdigest()[:12]


def _freeze(grid: Grid) -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(row) for row in grid)


def check_proposition_laws(
    trials: int,
    shape: tuple[int, int] = (4, 4),
    seed: int = 0,
    complement_override: Optional[Complement] = None,
) -> list[LawReport]:
    """Check the eight lattice laws on random degree matrices.

    One side of each law is evaluated through the MagnitudeMatrix API, the
    other straight from the raw grids with inline min/max/1-x, and both
    must agree exactly. ``complement_override`` replaces the API-side
    complement wherever a law uses it; the literal side always uses 1-x,
    which is what lets a corrupted complement be detected.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rows, cols = shape
    rng = random.Random(seed)
    comp: Complement = complement_override or (lambda m: m.complement().to_lists())
    failures: dict[str, list[LawFailure]] = {name: [] for name in LAW_NAMES}

    for _ in range(trials):
        ga = _random_grid(rng, rows, cols)
        gb = _random_grid(rng, rows, cols)
        gc = _random_grid(rng, rows, cols)
        a = MagnitudeMatrix.from_rows(ga)
        b = MagnitudeMatrix.from_rows(gb)
        c = MagnitudeMatrix.from_rows(gc)

        checks: list[tuple[str, Grid, Grid]] = [
            (
                "intersection_commutative",
                a.intersection(b).to_lists(),
                [[min(y, x) for x, y in zip(ra, rb)] for ra, rb in zip(ga, gb)],
            ),
            (
                "union_commutative",
                a.union(b).to_lists(),
                [[max(y, x) for x, y in zip(ra, rb)] for ra, rb in zip(ga, gb)],
            ),
            (
                "intersection_associative",
                a.intersection(b).intersection(c).to_lists(),
                [
                    [min(x, min(y, z)) for x, y, z in zip(ra, rb, rc)]
                    for ra, rb, rc in zip(ga, gb, gc)
                ],
            ),
            (
                "union_associative",
                a.union(b).union(c).to_lists(),
                [
                    [max(x, max(y, z)) for x, y, z in zip(ra, rb, rc)]
                    for ra, rb, rc in zip(ga, gb, gc)
                ],
            ),
            (
                "intersection_distributes_over_union",
                a.intersection(b.union(c)).to_lists(),
                [
                    [max(min(x, y), min(x, z)) for x, y, z in zip(ra, rb, rc)]
                    for ra, rb, rc in zip(ga, gb, gc)
                ],
            ),
            (
                "union_distributes_over_intersection",
                a.union(b.intersection(c)).to_lists(),
                [
                    [min(max(x, y), max(x, z)) for x, y, z in zip(ra, rb, rc)]
                    for ra, rb, rc in zip(ga, gb, gc)
                ],
            ),
            (
                "demorgan_union",
                comp(a.union(b)),
                [
                    [min(1.0 - x, 1.0 - y) for x, y in zip(ra, rb)]
                    for ra, rb in zip(ga, gb)
                ],
            ),
            (
                "demorgan_intersection",
                comp(a.intersection(b)),
                [
                    [max(1.0 - x, 1.0 - y) for x, y in zip(ra, rb)]
                    for ra, rb in zip(ga, gb)
                ],
            ),
        ]

        for name, lhs, rhs in checks:
            if lhs != rhs:
                deviation = max(
                    abs(u - v)
                    for lrow, rrow in zip(lhs, rhs)
                    for u, v in zip(lrow, rrow)
                )
                failures[name].append(
                    LawFailure(_digest(ga, gb, gc), _freeze(lhs), _freeze(rhs), deviation)
                )

    return [LawReport(name, trials, tuple(failures[name])) for name in LAW_NAMES]


def complex_eval_cross_check(s: SignalSample, t: SignalSample) -> float:
    """Largest gap between a cross term's complex modulus and its amplitude.

    The terms are re-paired here by hand; each is evaluated as an actual
    complex number amp * e^(i*phase) and |.| must reproduce amp.
    """
    worst = 0.0
    for a in s.terms:
        for b in t.terms:
            amp = a.amplitude if a.amplitude < b.amplitude else b.amplitude
            phase = a.phase if a.phase < b.phase else b.phase
            deviation = abs(abs(amp * cmath.exp(1j * phase)) - amp)
            if deviation > worst:
                worst = deviation
    return worst
