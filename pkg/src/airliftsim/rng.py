"""Named deterministic random streams.

Each consumer of randomness (terrain, airport placement, cargo sampling,
malfunctions, policies) draws from its own stream derived from the scenario
seed, so changing one rate parameter never perturbs the others' draws.
"""

from __future__ import annotations

import zlib

import numpy as np

STREAMS = ("terrain", "placement", "cargo", "malfunctions", "policy")


def _key(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def stream(seed: int, name: str, *extra: int) -> np.random.Generator:
    """Generator for a named stream; identical (seed, name, extra) gives
    identical draws."""
    return np.random.default_rng([seed & 0xFFFFFFFF, _key(name), *extra])


def derive_seed(seed: int, name: str) -> int:
    """Stable 32-bit sub-seed, for components that keep their own RNG."""
    return (seed ^ _key(name)) & 0x7FFFFFFF
