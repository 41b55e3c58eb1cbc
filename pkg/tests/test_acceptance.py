"""Acceptance gate: seven end-to-end checks, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines.
Each test prints its line before asserting, so a failure still reports.
"""

import json
import time

import numpy as np

import skewlabs as sl
from skewlabs.cli import main as cli_main
from skewlabs.search import SearchConfig, run_search


def verdict(name, ok, detail=""):
    line = f"acceptance {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    return ok


def test_record_table_regression():
    """51 bundled records: lengths, skewness, merit agreement, F > 7, < 1 s."""
    t0 = time.perf_counter()
    entries = sl.load_records()
    checks = sl.verify_records(entries)
    elapsed = time.perf_counter() - t0

    lengths_ok = [e.length for e in entries] == list(range(301, 402, 2))
    all_skew = all(c.skew_symmetric for c in checks)
    merit_ok = all(
        abs(c.merit_factor - c.entry.merit_value) <= 5e-5 for c in checks
    )
    above_7 = all(c.merit_factor > 7.0 for c in checks)
    fast = elapsed < 1.0

    ok = (
        len(checks) == 51 and lengths_ok and all_skew and merit_ok and above_7 and fast
    )
    assert verdict(
        "1 record-table regression",
        ok,
        f"51 rows, {elapsed * 1000:.0f} ms",
    )


def test_odd_lag_correlations_vanish():
    """1000 random skew-symmetric sequences have zero odd-lag correlations."""
    rng = np.random.default_rng(12345)
    ok = True
    for _ in range(1000):
        n = int(rng.integers(1, 257))
        s = sl.expand(rng.choice([-1, 1], size=n))
        c = sl.autocorrelations(s).c
        if np.any(c[0::2]):
            ok = False
            break
    assert verdict("2 odd-lag zeros", ok, "1000 halves, n <= 256")


def test_incremental_matches_scratch():
    """10^4 random (state, flip) pairs per mode, integer-exact agreement."""
    rng = np.random.default_rng(777)
    pairs = 10**4
    ok = True

    for _ in range(pairs):
        L = int(rng.integers(2, 65))
        s = rng.choice([-1, 1], size=L)
        p = int(rng.integers(L))
        ev = sl.FlipEvaluator(s)
        d = ev.delta_energy(p)
        e_new = ev.apply_flip(p)
        s2 = s.copy()
        s2[p] = -s2[p]
        prof = sl.autocorrelations(s2)
        if not (
            e_new == prof.energy
            and d == prof.energy - sl.energy(s)
            and np.array_equal(ev.autocorrelation, prof.c)
        ):
            ok = False
            break

    for _ in range(pairs):
        n = int(rng.integers(1, 33))
        h = rng.choice([-1, 1], size=n)
        p = int(rng.integers(n))
        ev = sl.FlipEvaluator.from_half(h)
        d = ev.delta_energy(p)
        e_new = ev.apply_flip(p)
        h2 = h.copy()
        h2[p] = -h2[p]
        prof = sl.autocorrelations(sl.expand(h2))
        if not (
            e_new == prof.energy
            and d == prof.energy - sl.energy(sl.expand(h))
            and np.array_equal(ev.autocorrelation, prof.c)
        ):
            ok = False
            break

    assert verdict("3 incremental exactness", ok, f"{pairs} pairs per mode")


def test_search_reaches_oracle_optima():
    """10 seeded runs per instance reach the exhaustive optimum >= 9 times."""
    ok = True
    worst = None
    for mode, lengths in (("skew", range(5, 28, 2)), ("full", range(3, 17))):
        for L in lengths:
            opt = sl.exhaustive(L, mode).energy
            hits = 0
            for seed in range(1, 11):
                cfg = SearchConfig(
                    length=L,
                    mode=mode,
                    seed=seed,
                    target_energy=opt,
                    max_flips=10**6,
                    max_restarts=10**3,
                )
                r = run_search(cfg)
                hits += int(r.target_reached and r.energy == opt)
            if worst is None or hits < worst[2]:
                worst = (mode, L, hits)
            if hits < 9:
                ok = False
    assert verdict(
        "4 oracle equivalence",
        ok,
        f"worst instance {worst[0]} L={worst[1]}: {worst[2]}/10",
    )


def test_spectral_identities():
    """mean|p|^2 = L and mean|p|^4 = L^2 + 2E to 1e-9 relative, 100 draws."""
    rng = np.random.default_rng(4242)
    ok = True
    for _ in range(100):
        L = int(rng.integers(2, 200))
        s = rng.choice([-1, 1], size=L)
        e = sl.energy(s)
        v2 = sl.spectrum_modulus(s, 2 * L - 1)
        v4 = sl.spectrum_modulus(s, 4 * L - 3)
        mean2 = float(np.mean(v2**2))
        mean4 = float(np.mean(v4**4))
        if abs(mean2 - L) > 1e-9 * L:
            ok = False
            break
        if abs(mean4 - (L * L + 2 * e)) > 1e-9 * (L * L + 2 * e):
            ok = False
            break
    assert verdict("5 spectral identities", ok, "100 sequences")


def test_barker13_landmark():
    """Barker-13: E = 6, F = 169/12, PSL = 1, skew-symmetric, and optimal."""
    b13 = sl.decode("00CA", 13)
    rep = sl.evaluate(b13)
    oracle = sl.exhaustive(13, "skew")
    ok = (
        rep.energy == 6
        and rep.merit_factor == 169 / 12
        and sl.format_merit_factor(rep.merit_factor) == "14.0833"
        and rep.psl == 1
        and sl.is_skew_symmetric(b13)
        and oracle.energy == 6
    )
    assert verdict("6 Barker-13 landmark", ok, "E=6 F=169/12 PSL=1 optimal")


def test_search_cli_determinism(tmp_path, capsys):
    """Two identical seeded CLI runs write equal records modulo timing."""
    out = tmp_path / "runs.jsonl"
    args = [
        "search", "--length", "51", "--seed", "20260819",
        "--max-flips", "30000", "--max-restarts", "60",
        "--workers", "1", "--out", str(out),
    ]
    assert cli_main(list(args)) == 0
    assert cli_main(list(args)) == 0
    capsys.readouterr()
    a, b = [json.loads(line) for line in out.read_text().splitlines()]
    for rec in (a, b):
        rec["timestamp"] = None
        rec["result"]["wall_time"] = None
    ok = a == b
    assert verdict("7 determinism", ok, "identical modulo timestamp")
