"""Hexadecimal codec for ±1 sequences.

Convention: each hex digit expands to 4 bits (0 -> 0000 ... F -> 1111), any
surplus leading bits beyond the declared length must be 0 and are dropped,
then bit 0 maps to +1 and bit 1 maps to -1.
"""

import numpy as np

from .seqcore import as_sequence

_HEX_DIGITS = set("0123456789abcdefABCDEF")
_BIT_SHIFTS = np.array([3, 2, 1, 0], dtype=np.uint8)


def decode(hexstring: str, length: int) -> np.ndarray:
    """Decode a hex string to a ±1 sequence of the declared length.

    Interior whitespace is stripped; lowercase digits are accepted.  Raises
    ValueError on non-hex characters, a declared length longer than the
    available bits, or a nonzero dropped prefix.
    """
    digits = "".join(hexstring.split())
    if not digits:
        raise ValueError("hex string has no digits")
    bad = set(digits) - _HEX_DIGITS
    if bad:
        raise ValueError(f"not a hex digit: {sorted(bad)!r}")
    if length < 1:
        raise ValueError("declared length must be >= 1")
    nibbles = np.array([int(ch, 16) for ch in digits], dtype=np.uint8)
    bits = ((nibbles[:, None] >> _BIT_SHIFTS) & 1).reshape(-1)
    surplus = bits.size - length
    if surplus < 0:
        raise ValueError(
            f"declared length {length} exceeds the {bits.size} bits available"
        )
    if np.any(bits[:surplus]):
        raise ValueError("dropped leading bits must all be 0")
    seq = 1 - 2 * bits[surplus:].astype(np.int64)
    seq.setflags(write=False)
    return seq


def encode(s) -> str:
    """Encode a ±1 sequence as uppercase hex (+1 -> bit 0, -1 -> bit 1).

    The bit string is left-padded with zeros to a multiple of 4, so
    decode(encode(s), len(s)) == s.
    """
    s = as_sequence(s)
    bits = ((1 - s) // 2).astype(np.uint8)
    pad = (-bits.size) % 4
    if pad:
        bits = np.concatenate([np.zeros(pad, dtype=np.uint8), bits])
    nibbles = bits.reshape(-1, 4) @ np.array([8, 4, 2, 1], dtype=np.uint8)
    return "".join("0123456789ABCDEF"[v] for v in nibbles)
