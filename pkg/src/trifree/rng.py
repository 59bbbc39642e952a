"""Deterministic, splittable random streams.

Every randomized routine in this package draws from a named substream
derived from a user-supplied 64-bit seed plus an integer path.  Substreams
are independent of each other and of evaluation order, so results are
bit-identical across reruns and across any parallel schedule that assigns
work by path.
"""

from __future__ import annotations

import hashlib
import random

MAX_SEED = 2**64 - 1


def check_seed(seed: int) -> int:
    """Validate a user-facing seed (64-bit unsigned integer)."""
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be in [0, 2**64), got {seed}")
    return seed


def substream(seed: int, *path: int) -> random.Random:
    """Return an independent generator for the given seed and path.

    The stream depends only on (seed, path): substream(s, 3, 1) is the same
    generator state everywhere, and distinct paths give decorrelated
    streams.  Path components must be non-negative integers.
    """
    check_seed(seed)
    h = hashlib.sha256()
    h.update(b"trifree.rng")
    for part in (seed, *path):
        if not isinstance(part, int) or isinstance(part, bool) or part < 0:
            raise ValueError(f"path components must be non-negative integers, got {part!r}")
        h.update(b"/")
        h.update(str(part).encode("ascii"))
    return random.Random(int.from_bytes(h.digest(), "big"))
