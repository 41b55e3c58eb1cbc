"""
Hex codec and the bundled record table
--------------------------------------

The compact interchange format packs a ±1 sequence into hex: bit 0 is +1,
bit 1 is -1, and any surplus leading bits must be zero.  The bundled table
of best-known skew-symmetric sequences (odd lengths 301 to 401) ships in
this format; here we decode it and recheck every row from scratch.
"""

import skewlabs as sl

s = sl.decode("1D", 5)
print("decode('1D', 5)  ->", "".join("+" if v == 1 else "-" for v in s))
print("encode round trip ->", sl.encode(s))
print()

entries = sl.load_records()
print(f"{len(entries)} bundled records, lengths {entries[0].length}..{entries[-1].length}")

checks = sl.verify_records(entries)
assert all(c.ok for c in checks)

print(f"{'L':>5} {'E':>7} {'F':>9}  skew")
for c in checks[::10]:
    print(f"{c.entry.length:>5} {c.energy:>7} {sl.format_merit_factor(c.merit_factor):>9}  "
          f"{c.skew_symmetric}")

worst = min(checks, key=lambda c: c.merit_factor)
best = max(checks, key=lambda c: c.merit_factor)
print()
print(f"every recomputed merit factor exceeds 7: min F = "
      f"{sl.format_merit_factor(worst.merit_factor)} at L = {worst.entry.length}, "
      f"max F = {sl.format_merit_factor(best.merit_factor)} at L = {best.entry.length}")
