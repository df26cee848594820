"""Discrete Fourier transforms and amplitude-restricted sample expansion.

The transform pair uses the e^(-i*2*pi*k*n/N) forward kernel with the 1/N
factor on the inverse. Sizes are small here, so both directions are the
direct O(N^2) sums; no FFT is needed.

A signal whose spectrum amplitudes are restricted to [0, 1] expands, at each
sample index n, into a list of unit-disc terms (X[k], 2*pi*k*n/N mod 2*pi).
Those term lists are what the identification scoring consumes. Amplitude
lists are allowed to differ per sample index, so a candidate stores one term
list per sample rather than a single spectrum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .cfmatrix import TWO_PI, ComplexFuzzyNumber


def dft(values: Sequence[complex]) -> list[complex]:
    """X[k] = sum_n x[n] * e^(-i*2*pi*k*n/N)."""
    xs = [complex(v) for v in values]
    if not xs:
        raise ValueError("dft needs a non-empty sequence")
    n = len(xs)
    return [
        sum(xs[t] * cmath.exp(-2j * math.pi * k * t / n) for t in range(n))
        for k in range(n)
    ]


def idft(values: Sequence[complex]) -> list[complex]:
    """x[n] = (1/N) * sum_k X[k] * e^(i*2*pi*k*n/N)."""
    xs = [complex(v) for v in values]
    if not xs:
        raise ValueError("idft needs a non-empty sequence")
    n = len(xs)
    return [
        sum(xs[k] * cmath.exp(2j * math.pi * k * t / n) for k in range(n)) / n
        for t in range(n)
    ]


@dataclass(frozen=True)
class SignalSample:
    """One observed sample: a list of (amplitude, phase) terms plus 1/N.

    Built from a spectrum via expand_sample the phases are the derived
    multiples of 2*pi*index/N; constructed directly they may be arbitrary,
    which the scoring tests exploit to show phases never matter.
    """

    index: int
    terms: tuple[ComplexFuzzyNumber, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("a sample needs at least one term")
        if not 0 <= self.index < len(terms):
            raise ValueError(
                f"sample index {self.index} out of range 0..{len(terms) - 1}"
            )
        object.__setattr__(self, "terms", terms)

    @property
    def scale(self) -> float:
        return 1.0 / len(self.terms)

    def value(self) -> complex:
        """(1/N) * sum_k amplitude_k * e^(i*phase_k)."""
        total = sum(
            (term.amplitude * cmath.exp(1j * term.phase) for term in self.terms),
            start=0j,
        )
        return total * self.scale


def expand_sample(
    amplitudes: Sequence[float], index: int, big_n: int
) -> SignalSample:
    """Expand spectrum amplitudes into the term list of sample ``index``.

    Term k carries phase (2*pi*k*index/big_n) mod 2*pi. Amplitudes must lie
    in [0, 1] and there must be exactly ``big_n`` of them.
    """
    amps = [float(a) for a in amplitudes]
    if big_n < 1:
        raise ValueError("big_n must be positive")
    if len(amps) != big_n:
        raise ValueError(f"expected {big_n} amplitudes, got {len(amps)}")
    if not 0 <= index < big_n:
        raise ValueError(f"sample index {index} out of range 0..{big_n - 1}")
    terms = tuple(
        ComplexFuzzyNumber(a, TWO_PI * k * index / big_n) for k, a in enumerate(amps)
    )
    return SignalSample(index, terms)


@dataclass(frozen=True)
class CandidateSignal:
    """A labelled signal observed N times, one term list per sample."""

    label: str
    samples: tuple[SignalSample, ...]

    def __post_init__(self) -> None:
        samples = tuple(self.samples)
        if not samples:
            raise ValueError("a signal needs at least one sample")
        n = len(samples)
        for i, sample in enumerate(samples):
            if len(sample.terms) != n:
                raise ValueError(
                    f"sample {i} has {len(sample.terms)} terms, expected {n}"
                )
            if sample.index != i:
                raise ValueError(
                    f"sample at position {i} carries index {sample.index}"
                )
        object.__setattr__(self, "samples", samples)

    @property
    def big_n(self) -> int:
        return len(self.samples)

    @classmethod
    def from_amplitudes(
        cls, label: str, rows: Sequence[Sequence[float]]
    ) -> "CandidateSignal":
        """One amplitude list per sample index; phases are derived."""
        big_n = len(rows)
        return cls(
            label,
            tuple(expand_sample(row, n, big_n) for n, row in enumerate(rows)),
        )
