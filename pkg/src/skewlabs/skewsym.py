"""Skew-symmetric sequences and their half-length representation.

An odd-length sequence of length L = 2n-1 is skew-symmetric when
s_{n+i} = (-1)^i s_{n-i} for i = 1..n-1 (1-based).  Its first n entries
then determine the whole sequence, and every odd-lag autocorrelation
vanishes.
"""

import numpy as np

from .seqcore import as_sequence


def expand(half) -> np.ndarray:
    """Expand the first-half entries of a skew-symmetric sequence.

    A half sequence of n entries yields the full sequence of length 2n-1.
    """
    h = as_sequence(half)
    n = h.size
    s = np.empty(2 * n - 1, dtype=np.int64)
    s[:n] = h
    if n > 1:
        i = np.arange(1, n)
        s[n - 1 + i] = (1 - 2 * (i & 1)) * h[n - 1 - i]
    s.setflags(write=False)
    return s


def is_skew_symmetric(s) -> bool:
    """True iff s has odd length and satisfies the skew-symmetry relation."""
    s = as_sequence(s)
    if s.size % 2 == 0:
        return False
    n = (s.size + 1) // 2
    if n == 1:
        return True
    i = np.arange(1, n)
    return bool(np.all(s[n - 1 + i] == (1 - 2 * (i & 1)) * s[n - 1 - i]))


def contract(s) -> np.ndarray:
    """Inverse of expand: first (L+1)/2 entries of a skew-symmetric sequence.

    Raises ValueError if s is not skew-symmetric.
    """
    s = as_sequence(s)
    if not is_skew_symmetric(s):
        raise ValueError("sequence is not skew-symmetric")
    h = s[: (s.size + 1) // 2].copy()
    h.setflags(write=False)
    return h
