"""
Sequence metrics walkthrough
----------------------------

Autocorrelations, sidelobe energy, merit factor and PSL for a few
hand-picked sequences, ending with the classic Barker-13.
"""

import numpy as np

import skewlabs as sl

examples = {
    "all ones (L=8)": np.ones(8, dtype=np.int64),
    "alternating (L=8)": np.array([1, -1] * 4),
    "Barker-4": np.array([1, 1, 1, -1]),
    "Barker-13": sl.decode("00CA", 13),
}

for name, s in examples.items():
    rep = sl.evaluate(s)
    prof = sl.autocorrelations(s)
    print(name)
    print("  sequence:", "".join("+" if v == 1 else "-" for v in s))
    print("  C_k:", list(prof.c))
    print(f"  E = {rep.energy}, F = {sl.format_merit_factor(rep.merit_factor)}, PSL = {rep.psl}")
    print()

# Random sequences hover around F ~ 1; good sequences are rare.
rng = np.random.default_rng(0)
factors = [sl.merit_factor(rng.choice([-1, 1], size=64)) for _ in range(2000)]
print(f"random L=64 sequences: mean F = {np.mean(factors):.3f}, "
      f"best of 2000 = {max(factors):.3f}")
print("Barker-13 for scale: F =", sl.format_merit_factor(169 / 12))
