"""Stable derivation of independent 64-bit seeds from a master seed."""

import hashlib
import struct


def derive_seed(seed: int, *parts) -> int:
    h = hashlib.blake2b(digest_size=8)
    h.update(struct.pack("<Q", seed & 0xFFFFFFFFFFFFFFFF))
    for p in parts:
        h.update(str(p).encode())
        h.update(b"\x00")
    return int.from_bytes(h.digest(), "little")
