"""Exhaustive oracle: brute force cross-checks and engine agreement."""

import itertools

import numpy as np
import pytest

from skewlabs import energy, expand, is_skew_symmetric
from skewlabs.oracle import (
    FULL_LENGTH_CAP,
    SKEW_LENGTH_CAP,
    _scan_compiled,
    _scan_evaluator,
    exhaustive,
)


def brute_force_full(L):
    best = None
    count = 0
    for p in itertools.product((-1, 1), repeat=L):
        e = energy(np.array(p, dtype=np.int64))
        if best is None or e < best:
            best, count = e, 1
        elif e == best:
            count += 1
    return best, count


def brute_force_skew(L):
    n = (L + 1) // 2
    best = None
    count = 0
    for h in itertools.product((-1, 1), repeat=n):
        e = energy(expand(np.array(h, dtype=np.int64)))
        if best is None or e < best:
            best, count = e, 1
        elif e == best:
            count += 1
    return best, count


@pytest.mark.parametrize("L", range(1, 12))
def test_full_matches_brute_force(L):
    want_e, want_n = brute_force_full(L)
    r = exhaustive(L, "full")
    assert (r.energy, r.optima) == (want_e, want_n)
    assert energy(r.witness) == want_e
    assert r.witness.size == L


@pytest.mark.parametrize("L", [1, 3, 5, 7, 9, 11, 13, 15, 17])
def test_skew_matches_brute_force(L):
    want_e, want_n = brute_force_skew(L)
    r = exhaustive(L, "skew")
    assert (r.energy, r.optima) == (want_e, want_n)
    assert is_skew_symmetric(r.witness)
    assert energy(r.witness) == want_e


def test_known_optima():
    # Barker lengths: the optimum is the Barker energy
    assert exhaustive(4, "full").energy == 2
    assert exhaustive(5, "full").energy == 2
    assert exhaustive(7, "full").energy == 3
    assert exhaustive(11, "full").energy == 5
    assert exhaustive(13, "full").energy == 6
    assert exhaustive(13, "skew").energy == 6


def test_engines_agree():
    # drive both the evaluator walk and the compiled kernel over the same
    # spaces and compare everything that must match
    for L, mode in [(12, "full"), (15, "full"), (23, "skew"), (29, "skew")]:
        a = _scan_evaluator(L, mode)
        b = _scan_compiled(L, mode)
        assert (a.energy, a.optima) == (b.energy, b.optima), (L, mode)
        assert energy(a.witness) == a.energy
        assert energy(b.witness) == b.energy


def test_skew_count_consistent_with_full():
    # every skew optimum is a full sequence too, so the full optimum at the
    # same length can only be lower or equal
    for L in (5, 7, 9, 11, 13):
        assert exhaustive(L, "full").energy <= exhaustive(L, "skew").energy


def test_trivial_lengths():
    r = exhaustive(1, "full")
    assert r.energy == 0 and r.optima == 2
    r = exhaustive(2, "full")
    assert r.energy == 1 and r.optima == 4
    r = exhaustive(1, "skew")
    assert r.energy == 0 and r.optima == 2


def test_argument_validation():
    with pytest.raises(ValueError):
        exhaustive(0, "full")
    with pytest.raises(ValueError):
        exhaustive(6, "skew")
    with pytest.raises(ValueError):
        exhaustive(FULL_LENGTH_CAP + 1, "full")
    with pytest.raises(ValueError):
        exhaustive(SKEW_LENGTH_CAP + 2, "skew")
    with pytest.raises(ValueError):
        exhaustive(9, "half")
