"""Exhaustive ground truth over the full space (2^L) or skew subspace (2^n).

States are visited in Gray-code order, one flip per step.  Small spaces are
walked through FlipEvaluator itself, so the enumeration doubles as a stress
test of the flip logic; larger spaces (up to the hard caps) run the same
update rule as a compiled kernel.  Both engines visit identical state
sequences and are cross-checked in the test suite.

``optima`` counts every enumerated state attaining the minimum: full
sequences in full mode, half sequences in skew mode.  No symmetry classes
are quotiented out.
"""

from dataclasses import dataclass

import numpy as np

from . import skewsym
from .incremental import FULL, SKEW, FlipEvaluator

FULL_LENGTH_CAP = 28
SKEW_LENGTH_CAP = 41

# Spaces up to this many states go through FlipEvaluator; beyond it the
# compiled kernel takes over.
_EVALUATOR_STATE_LIMIT = 1 << 14

_kernel = None


@dataclass(frozen=True, eq=False)
class OracleResult:
    length: int
    mode: str
    energy: int
    optima: int
    witness: np.ndarray


def exhaustive(length: int, mode: str = FULL) -> OracleResult:
    """Scan every state at the given length and return the minimal energy.

    Hard caps keep the scan at desk scale: length <= 28 in full mode and
    length <= 41 (half length <= 21) in skew mode.
    """
    if mode not in (FULL, SKEW):
        raise ValueError(f"mode must be {FULL!r} or {SKEW!r}, got {mode!r}")
    if length < 1:
        raise ValueError("length must be >= 1")
    if mode == FULL:
        if length > FULL_LENGTH_CAP:
            raise ValueError(
                f"full-space scan is capped at length {FULL_LENGTH_CAP} "
                f"(2^{length} states is beyond desk scale)"
            )
        bits = length
    else:
        if length % 2 == 0:
            raise ValueError("skew mode needs an odd length")
        if length > SKEW_LENGTH_CAP:
            raise ValueError(
                f"skew-space scan is capped at length {SKEW_LENGTH_CAP} "
                f"(half length {(length + 1) // 2} is beyond desk scale)"
            )
        bits = (length + 1) // 2
    if (1 << bits) <= _EVALUATOR_STATE_LIMIT:
        return _scan_evaluator(length, mode)
    return _scan_compiled(length, mode)


def _mask_to_witness(mask: int, length: int, mode: str) -> np.ndarray:
    bits = length if mode == FULL else (length + 1) // 2
    vec = np.array([-1 if (mask >> i) & 1 else 1 for i in range(bits)], dtype=np.int64)
    if mode == SKEW:
        return skewsym.expand(vec)
    vec.setflags(write=False)
    return vec


def _scan_evaluator(length: int, mode: str) -> OracleResult:
    """Gray-code scan driving FlipEvaluator one flip per step."""
    bits = length if mode == FULL else (length + 1) // 2
    if mode == FULL:
        ev = FlipEvaluator(np.ones(length, dtype=np.int64))
    else:
        ev = FlipEvaluator.from_half(np.ones(bits, dtype=np.int64))
    best = ev.energy
    count = 1
    witness_mask = 0
    state = 0
    for i in range(1, 1 << bits):
        pos = (i & -i).bit_length() - 1
        e = ev.apply_flip(pos)
        state ^= 1 << pos
        if e < best:
            best, count, witness_mask = e, 1, state
        elif e == best:
            count += 1
    return OracleResult(
        length=length,
        mode=mode,
        energy=best,
        optima=count,
        witness=_mask_to_witness(witness_mask, length, mode),
    )


def _get_kernel():
    global _kernel
    if _kernel is None:
        import numba

        @numba.njit(cache=True)
        def kernel(s, half, skew):
            length = s.size
            c = np.empty(length - 1, dtype=np.int64)
            e = 0
            for k in range(1, length):
                acc = 0
                for i in range(length - k):
                    acc += s[i] * s[i + k]
                c[k - 1] = acc
                e += acc * acc
            bits = half if skew else length
            best = e
            count = 1
            witness = np.int64(0)
            state = np.int64(0)
            for i in range(1, 1 << bits):
                t = i & (-i)
                pos = 0
                while t > 1:
                    t >>= 1
                    pos += 1
                flips = 1
                second = pos
                if skew:
                    mirror = 2 * half - 2 - pos
                    if mirror != pos:
                        flips = 2
                        second = mirror
                for f in range(flips):
                    p = pos if f == 0 else second
                    sp = s[p]
                    for k in range(1, length):
                        t2 = 0
                        if p - k >= 0:
                            t2 += s[p - k]
                        if p + k < length:
                            t2 += s[p + k]
                        if t2 != 0:
                            d = -2 * sp * t2
                            old = c[k - 1]
                            c[k - 1] = old + d
                            e += d * (2 * old + d)
                    s[p] = -sp
                state ^= np.int64(1) << pos
                if e < best:
                    best = e
                    count = 1
                    witness = state
                elif e == best:
                    count += 1
            return best, count, witness

        _kernel = kernel
    return _kernel


def _scan_compiled(length: int, mode: str) -> OracleResult:
    """Same Gray-code scan as _scan_evaluator, run as a compiled kernel."""
    half = (length + 1) // 2
    try:
        kernel = _get_kernel()
    except ImportError:
        return _scan_evaluator(length, mode)
    if mode == SKEW:
        start = np.array(skewsym.expand(np.ones(half, dtype=np.int64)))
    else:
        start = np.ones(length, dtype=np.int64)
    best, count, witness_mask = kernel(start, half, mode == SKEW)
    return OracleResult(
        length=length,
        mode=mode,
        energy=int(best),
        optima=int(count),
        witness=_mask_to_witness(int(witness_mask), length, mode),
    )
