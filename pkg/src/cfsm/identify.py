"""Reference-signal identification.

Two procedures are provided:

* ``maxmin_decision`` multiplies two square sample-magnitude matrices with
  the ordinary product, takes column minima, and picks the object with the
  largest resulting degree.

* ``fourier_identify`` scores each candidate against the reference sample
  by sample: the cross product of two term lists pairs every term of one
  with every term of the other, taking the minimum amplitude and minimum
  phase, scaled by 1/(K*L). A sample's score is the largest term modulus,
  which depends on amplitudes only; the candidate with the highest score
  anywhere wins.

Ties are broken by input order (first wins) and reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ShapeError
from .fourier import CandidateSignal, SignalSample
from .softmatrix import MagnitudeMatrix, RealMatrix


@dataclass(frozen=True)
class CrossTerm:
    """One pairing of a candidate term k with a reference term l."""

    amplitude: float
    phase: float
    source: tuple[int, int]


@dataclass(frozen=True)
class CrossProduct:
    terms: tuple[CrossTerm, ...]
    scale: float


def cross_product(s: SignalSample, t: SignalSample) -> CrossProduct:
    """All K*L ordered pairings, each taking min amplitude and min phase."""
    if not s.terms or not t.terms:
        raise ValueError("cross product needs non-empty term lists")
    terms = tuple(
        CrossTerm(
            min(a.amplitude, b.amplitude),
            min(a.phase, b.phase),
            (k, l),
        )
        for k, a in enumerate(s.terms)
        for l, b in enumerate(t.terms)
    )
    return CrossProduct(terms, 1.0 / len(terms))


def sample_score(s: SignalSample, t: SignalSample) -> float:
    """Largest cross-term modulus over K*L.

    Since |r*e^(i*w)| = r, the score is computed from amplitudes alone;
    phases cannot change it.
    """
    if not s.terms or not t.terms:
        raise ValueError("sample score needs non-empty term lists")
    best = max(
        min(a.amplitude, b.amplitude) for a in s.terms for b in t.terms
    )
    return best / (len(s.terms) * len(t.terms))


@dataclass(frozen=True)
class ScoreVector:
    """Per-sample scores of one candidate against the reference."""

    label: str
    scores: tuple[float, ...]

    def __post_init__(self) -> None:
        scores = tuple(float(v) for v in self.scores)
        if not scores:
            raise ValueError("a score vector needs at least one entry")
        object.__setattr__(self, "scores", scores)

    @property
    def best(self) -> float:
        return max(self.scores)


def score_vector(candidate: CandidateSignal, reference: CandidateSignal) -> ScoreVector:
    if candidate.big_n != reference.big_n:
        raise ValueError(
            f"candidate {candidate.label!r} has {candidate.big_n} samples, "
            f"reference has {reference.big_n}"
        )
    return ScoreVector(
        candidate.label,
        tuple(
            sample_score(c, r)
            for c, r in zip(candidate.samples, reference.samples)
        ),
    )


@dataclass(frozen=True)
class IdentificationResult:
    """Winner plus the full score report; ``tied`` lists every candidate
    sharing the winning score (more than one entry means an exact tie)."""

    winner: str
    scores: tuple[ScoreVector, ...]
    tied: tuple[str, ...]


def fourier_identify(
    candidates: Sequence[CandidateSignal], reference: CandidateSignal
) -> IdentificationResult:
    """Score every candidate and pick the one with the highest best score."""
    pool = list(candidates)
    if not pool:
        raise ValueError("at least one candidate signal is required")
    vectors = tuple(score_vector(c, reference) for c in pool)
    top = max(v.best for v in vectors)
    tied = tuple(v.label for v in vectors if v.best == top)
    return IdentificationResult(winner=tied[0], scores=vectors, tied=tied)


def column_min(matrix: RealMatrix) -> list[float]:
    """Minimum over the rows of each column."""
    return [
        min(matrix.at(i, j) for i in range(matrix.rows))
        for j in range(matrix.cols)
    ]


@dataclass(frozen=True)
class OptimumFuzzySet:
    """Decision output: positive degrees per object, and the argmax.

    Zero-degree objects are left out of ``memberships`` but still take part
    in the winner selection, so an all-zero decision yields the first label
    with ``degenerate`` set.
    """

    memberships: tuple[tuple[str, float], ...]
    winner: str
    winner_degree: float

    @property
    def degenerate(self) -> bool:
        return self.winner_degree == 0.0


def maxmin_decision(
    a: MagnitudeMatrix, b: MagnitudeMatrix, universe: Sequence[str]
) -> OptimumFuzzySet:
    """Ordinary product of two square N x N degree matrices, then column
    minima; the object whose column minimum is largest is the winner."""
    if a.rows != a.cols:
        raise ShapeError(f"decision inputs must be square, got {a.rows}x{a.cols}")
    if a.shape != b.shape:
        raise ShapeError(
            f"decision inputs must share one shape, got "
            f"{a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    labels = tuple(universe)
    if len(labels) != a.rows:
        raise ValueError(f"expected {a.rows} labels, got {len(labels)}")
    degrees = column_min(a.usual_product(b))
    best = max(degrees)
    winner = labels[degrees.index(best)]
    memberships = tuple(
        (label, degree) for label, degree in zip(labels, degrees) if degree > 0.0
    )
    return OptimumFuzzySet(memberships, winner, best)
