"""Restart-based stochastic local search with self-avoiding-walk memory.

Each walk is steepest descent over the 1-flip neighborhood that always
moves to the best not-yet-visited neighbor, uphill if it must, while the
best state seen so far is tracked separately.  Visited states are held as
64-bit fingerprints in a bounded FIFO set; a walk restarts from a fresh
uniform state after a stagnation window without improvement, or at a dead
end.  Fingerprint collisions can only make the walk skip a state, never
corrupt a result: every reported energy comes from the evaluator, whose
exactness is oracle-tested.

Determinism: a single worker is a pure function of the seed.  Worker w
derives its stream as splitmix64(seed + w) feeding a PCG64 generator, so a
multi-worker run is the deterministic best of deterministic walks (unless
a wall-time limit or the optional shared stop signal cuts workers short).
"""

import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import skewsym
from .incremental import FULL, SKEW, FlipEvaluator
from .seqcore import merit_factor

RNG_NAME = "pcg64"

_MASK64 = (1 << 64) - 1
_FINGERPRINT_SEED = 0x5EED5EED5EED5EED


def _splitmix64(x: int) -> int:
    """One splitmix64 output step; the fixed seed-mixing function."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _position_keys(count: int) -> list:
    """Fixed per-position fingerprint keys (a splitmix64 stream)."""
    keys = []
    x = _FINGERPRINT_SEED
    for _ in range(count):
        x = _splitmix64(x)
        keys.append(x)
    return keys


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run.

    max_flips is the total accepted-flip budget of a run; the stagnation
    window before a restart is max_flips // max_restarts.  target_energy
    stops the run as soon as the best energy is <= target.  share_stop
    lets parallel workers abort once any worker reaches the target; it is
    off by default so that multi-worker results stay fully deterministic.
    """

    length: int
    mode: str = FULL
    seed: int = 0
    target_energy: Optional[int] = None
    max_flips: int = 10**8
    max_restarts: int = 10**3
    wall_time_limit: Optional[float] = None
    workers: int = 1
    memory_capacity: int = 1 << 20
    share_stop: bool = False

    def validate(self) -> None:
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if self.mode not in (FULL, SKEW):
            raise ValueError(f"mode must be {FULL!r} or {SKEW!r}, got {self.mode!r}")
        if self.mode == SKEW and self.length % 2 == 0:
            raise ValueError("skew mode needs an odd length")
        if self.max_flips < 1 or self.max_restarts < 1:
            raise ValueError("flip and restart budgets must be positive")
        if self.wall_time_limit is not None and self.wall_time_limit <= 0:
            raise ValueError("wall_time_limit must be positive when set")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.memory_capacity < 0:
            raise ValueError("memory_capacity must be >= 0")


@dataclass(frozen=True, eq=False)
class SearchResult:
    """Outcome of a run; sequence is always the full ±1 form."""

    sequence: np.ndarray = field(repr=False)
    energy: int
    merit_factor: float
    flips: int
    restarts: int
    wall_time: float
    seed: int
    mode: str
    target_reached: bool
    worker: int = 0
    rng: str = RNG_NAME


class _VisitedSet:
    """Bounded set of fingerprints with FIFO eviction; capacity 0 disables it."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self._queue = deque()
        self._members = set()

    def __contains__(self, fp: int) -> bool:
        return fp in self._members

    def add(self, fp: int) -> None:
        if self.capacity == 0:
            return
        if len(self._queue) >= self.capacity:
            self._members.discard(self._queue.popleft())
        self._queue.append(fp)
        self._members.add(fp)

    def clear(self) -> None:
        self._queue.clear()
        self._members.clear()


def _run_worker(cfg: SearchConfig, worker: int, stop_event=None, observer=None):
    """One deterministic search walk sequence for the given worker index."""
    rng = np.random.Generator(np.random.PCG64(_splitmix64((cfg.seed + worker) & _MASK64)))
    start = time.perf_counter()

    L = cfg.length
    skew = cfg.mode == SKEW
    n = (L + 1) // 2
    keys = _position_keys(L)
    if skew:
        toggles = [keys[j] ^ keys[2 * n - 2 - j] if j != n - 1 else keys[n - 1] for j in range(n)]
    else:
        toggles = keys

    window = max(1, cfg.max_flips // cfg.max_restarts)
    visited = _VisitedSet(cfg.memory_capacity)

    flips = 0
    restarts = 0
    best_energy = None
    best_seq = None
    timed_out = False

    def out_of_time():
        return cfg.wall_time_limit is not None and time.perf_counter() - start >= cfg.wall_time_limit

    def target_hit():
        return cfg.target_energy is not None and best_energy <= cfg.target_energy

    while True:
        bits = rng.integers(0, 2, size=n if skew else L)
        half_or_full = 1 - 2 * bits.astype(np.int64)
        if skew:
            ev = FlipEvaluator.from_half(half_or_full)
        else:
            ev = FlipEvaluator(half_or_full)
        if observer is not None:
            observer("walk_start", {"restart": restarts, "sequence": ev.sequence})
        visited.clear()
        fp = 0
        seq = ev.sequence
        for i in range(L):
            if seq[i] == -1:
                fp ^= keys[i]
        visited.add(fp)

        if best_energy is None or ev.energy < best_energy:
            best_energy = ev.energy
            best_seq = ev.sequence
        stagnation = 0

        stopped = False
        while True:
            if target_hit() or best_energy == 0 or flips >= cfg.max_flips:
                stopped = True
                break
            if out_of_time():
                stopped = timed_out = True
                break
            if stop_event is not None and stop_event.is_set():
                stopped = True
                break
            if stagnation >= window:
                break  # restart

            deltas = ev.delta_energies()
            accepted = None
            for idx in np.argsort(deltas, kind="stable"):
                candidate = fp ^ toggles[idx]
                if candidate not in visited:
                    accepted = (int(idx), candidate)
                    break
            if accepted is None:
                break  # dead end: every neighbor fingerprint retained

            pos, fp = accepted
            ev.apply_flip(pos)
            flips += 1
            visited.add(fp)
            if observer is not None:
                observer("accept", {"fingerprint": fp, "energy": ev.energy})
            if ev.energy < best_energy:
                best_energy = ev.energy
                best_seq = ev.sequence
                stagnation = 0
            else:
                stagnation += 1

        if stopped or restarts >= cfg.max_restarts:
            break
        restarts += 1

    target_reached = cfg.target_energy is not None and best_energy <= cfg.target_energy
    if stop_event is not None and target_reached:
        stop_event.set()
    return SearchResult(
        sequence=best_seq,
        energy=best_energy,
        merit_factor=merit_factor(best_seq),
        flips=flips,
        restarts=restarts,
        wall_time=time.perf_counter() - start,
        seed=cfg.seed,
        mode=cfg.mode,
        target_reached=target_reached,
        worker=worker,
    )


def run_search(cfg: SearchConfig) -> SearchResult:
    """Run one deterministic search (worker index 0); see SearchConfig."""
    cfg.validate()
    return _run_worker(cfg, 0)


def run_parallel(cfg: SearchConfig) -> SearchResult:
    """Run cfg.workers independent searches and keep the best result.

    Worker w uses the derived seed splitmix64(seed + w).  Aggregation is
    deterministic: minimal energy, then lowest worker index.  With
    workers=1 this is bit-for-bit identical to run_search.
    """
    cfg.validate()
    if cfg.workers == 1:
        return _run_worker(cfg, 0)
    stop_event = threading.Event() if (cfg.share_stop and cfg.target_energy is not None) else None
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [pool.submit(_run_worker, cfg, w, stop_event) for w in range(cfg.workers)]
        results = [f.result() for f in futures]
    return min(results, key=lambda r: (r.energy, r.worker))
