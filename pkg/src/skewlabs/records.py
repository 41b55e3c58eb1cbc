"""Bundled table of best-known long skew-symmetric records, and its checks.

The packaged dataset lists one row per odd length from 301 to 401: the
length, the published 4-decimal merit factor, and the hex-encoded sequence.
verify_records recomputes everything from the hex and cross-checks the
published numbers.
"""

from dataclasses import dataclass
from importlib import resources

from .codec import decode
from .seqcore import autocorrelations
from .skewsym import is_skew_symmetric

MERIT_TOLERANCE = 5e-5  # half of one unit in the 4th printed decimal


@dataclass(frozen=True)
class RecordEntry:
    """One dataset row; merit_factor keeps the published 4-decimal string."""

    length: int
    merit_factor: str
    hex: str

    @property
    def merit_value(self) -> float:
        return float(self.merit_factor)


@dataclass(frozen=True)
class RecordCheck:
    """Outcome of re-deriving one record from its hex string."""

    entry: RecordEntry
    energy: int
    merit_factor: float
    skew_symmetric: bool
    merit_matches: bool
    energy_matches: bool
    parity_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.skew_symmetric
            and self.merit_matches
            and self.energy_matches
            and self.parity_ok
        )


def load_records(path=None) -> list:
    """Load record rows from a 3-column text file (default: bundled table)."""
    if path is None:
        text = resources.files("skewlabs.data").joinpath("records.txt").read_text()
    else:
        with open(path) as f:
            text = f.read()
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'length merit hex', got {line!r}")
        entries.append(RecordEntry(length=int(parts[0]), merit_factor=parts[1], hex=parts[2]))
    return entries


def check_record(entry: RecordEntry) -> RecordCheck:
    """Recompute one record's metrics and compare with the published values.

    Checks, in order: the hex decodes to the declared length and the result
    is skew-symmetric; the recomputed merit factor is within half a printed
    unit of the published one; the exact energy equals the energy implied by
    the published merit factor; and the energy has the parity a
    skew-symmetric sequence forces, E = (L-1)/2 (mod 2).
    """
    s = decode(entry.hex, entry.length)
    prof = autocorrelations(s)
    e = prof.energy
    L = entry.length
    f = L * L / (2.0 * e)
    implied_e = round(L * L / (2.0 * entry.merit_value))
    return RecordCheck(
        entry=entry,
        energy=e,
        merit_factor=f,
        skew_symmetric=is_skew_symmetric(s),
        merit_matches=abs(f - entry.merit_value) <= MERIT_TOLERANCE,
        energy_matches=implied_e == e,
        parity_ok=e % 2 == ((L - 1) // 2) % 2,
    )


def verify_records(entries=None) -> list:
    """Check every record (default: the bundled table); one RecordCheck per row."""
    if entries is None:
        entries = load_records()
    return [check_record(entry) for entry in entries]
