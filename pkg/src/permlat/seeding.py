"""Deterministic 64-bit seed derivation."""
from __future__ import annotations

import random

MASK64 = (1 << 64) - 1


def mix_seed(seed: int, index: int) -> int:
    """
    SplitMix64 finaliser applied to ``seed + (index + 1) * golden_gamma``.

    Sub-seeds depend only on ``(seed, index)``, so samples can be generated in
    any order or in parallel without changing results.
    """
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def rng_for(seed: int, *path: int) -> random.Random:
    """A ``random.Random`` seeded from ``seed`` mixed with each index in ``path``."""
    s = seed & MASK64
    for i in path:
        s = mix_seed(s, i)
    return random.Random(s)


def random_box_vector(rng: random.Random, n: int, box: int, nonzero: bool = True) -> tuple[int, ...]:
    while True:
        x = tuple(rng.randint(-box, box) for _ in range(n))
        if any(x) or not nonzero:
            return x
