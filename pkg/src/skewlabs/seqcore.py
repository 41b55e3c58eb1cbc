"""Binary ±1 sequences and their exact autocorrelation metrics.

A sequence is any 1-d array-like of +1/-1 entries.  All autocorrelation
quantities are computed in exact integer arithmetic; only the merit factor
itself is a float.
"""

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
import math

import numpy as np


def as_sequence(values) -> np.ndarray:
    """Validate a ±1 sequence and return it as a read-only int64 array.

    Raises ValueError for empty input or entries outside {+1, -1}.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"sequence must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("sequence must have at least one entry")
    if not bool(np.all((arr == 1) | (arr == -1))):
        raise ValueError("sequence entries must be +1 or -1")
    out = arr.astype(np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class AutocorrelationProfile:
    """Off-peak autocorrelations C_1..C_{L-1} with their sidelobe energy.

    c[k-1] holds C_k = sum_i s_i s_{i+k}; energy = sum_k C_k^2.  Both are
    exact integers.  The lag-0 term (always L) is excluded.
    """

    c: np.ndarray
    energy: int
    length: int


@dataclass(frozen=True)
class MeritReport:
    """Summary metrics for one sequence.

    psl is the largest off-peak |C_k|; for a length-1 sequence there are no
    off-peak lags and psl is reported as 0.
    """

    length: int
    energy: int
    merit_factor: float
    psl: int


def autocorrelations(s) -> AutocorrelationProfile:
    """Compute all off-peak autocorrelations and the sidelobe energy of s."""
    s = as_sequence(s)
    L = s.size
    # np.correlate on int64 input is an exact integer multiply-accumulate;
    # the upper half of 'full' mode is C_1..C_{L-1}.
    c = np.correlate(s, s, mode="full")[L:]
    c.setflags(write=False)
    energy = int(c @ c)
    return AutocorrelationProfile(c=c, energy=energy, length=L)


def energy(s) -> int:
    """Sidelobe energy sum_k C_k^2 of s, as an exact integer."""
    return autocorrelations(s).energy


def merit_factor(s) -> float:
    """Merit factor L^2 / (2 E).  Returns math.inf when E = 0 (length 1)."""
    prof = autocorrelations(s)
    if prof.energy == 0:
        return math.inf
    return prof.length * prof.length / (2.0 * prof.energy)


def psl(s) -> int:
    """Peak sidelobe level max_k |C_k|.  Requires length >= 2."""
    prof = autocorrelations(s)
    if prof.length < 2:
        raise ValueError("peak sidelobe level needs length >= 2 (no off-peak lags)")
    return int(np.max(np.abs(prof.c)))


def evaluate(s) -> MeritReport:
    """Full metric report for s (energy, merit factor, psl)."""
    prof = autocorrelations(s)
    if prof.energy == 0:
        f = math.inf
    else:
        f = prof.length * prof.length / (2.0 * prof.energy)
    peak = int(np.max(np.abs(prof.c))) if prof.length >= 2 else 0
    return MeritReport(length=prof.length, energy=prof.energy, merit_factor=f, psl=peak)


def spectrum_modulus(s, samples: int) -> np.ndarray:
    """Modulus of p(z) = sum_j s_j z^{j-1} on the unit circle.

    Evaluates |p(e^{2 pi i t})| at the half-open uniform grid t = m/samples,
    m = 0..samples-1.  Works for any samples >= 1: coefficients are folded
    modulo the sample count before a single inverse FFT.
    """
    s = as_sequence(s)
    if not isinstance(samples, (int, np.integer)) or isinstance(samples, bool):
        raise ValueError("samples must be a positive integer")
    m = int(samples)
    if m < 1:
        raise ValueError("samples must be a positive integer")
    folded = np.zeros(m, dtype=np.float64)
    np.add.at(folded, np.arange(s.size) % m, s)
    # ifft carries the e^{+2 pi i} sign convention that matches p's argument.
    return np.abs(np.fft.ifft(folded)) * m


def format_merit_factor(value: float) -> str:
    """Render a merit factor the way published tables do: 4 decimals, half-up."""
    if math.isinf(value):
        return "inf"
    return str(Decimal(repr(value)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))
