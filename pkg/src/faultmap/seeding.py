"""Deterministic seed derivation for experiment substreams.

A single root seed fans out into independent child seeds, one per
(trial, stage) pair, so trials can run in any order or in parallel and
still reproduce bit-identical results.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def _word(part: int | str) -> int:
    if isinstance(part, str):
        return int.from_bytes(hashlib.sha256(part.encode()).digest()[:8], "little")
    return part & _MASK


def derive_seed(root: int, *parts: int | str) -> int:
    """Mix a root seed with tag words into a 64-bit child seed."""
    x = _splitmix64(root & _MASK)
    for part in parts:
        x = _splitmix64(x ^ _word(part))
    return x


def rng_from(root: int, *parts: int | str) -> np.random.Generator:
    """Generator seeded from :func:`derive_seed` of the given path."""
    return np.random.default_rng(derive_seed(root, *parts))
