"""Deterministic, schedule-independent random streams."""

from __future__ import annotations

import hashlib
import random


def derive_rng(seed: int, *labels) -> random.Random:
    """A PRNG keyed by (seed, labels); independent of call order elsewhere."""
    material = "/".join(str(x) for x in (seed, *labels)).encode()
    sub_seed = int.from_bytes(hashlib.sha256(material).digest()[:8], "big")
    return random.Random(sub_seed)
