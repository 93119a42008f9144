"""Frozen random-stream scheme.

Version 1: numpy PCG64 seeded through SeedSequence. Replication r of an
experiment uses seed material

    (base_seed XOR (0x9E3779B97F4A7C15 * (r + 1))) mod 2**64

so its stream depends only on (base_seed, r), never on execution order.
Changing any of this requires bumping STREAM_SCHEME_VERSION.
"""

import numpy as np

STREAM_SCHEME_VERSION = 1
SEED_MULTIPLIER = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1


def _generator(material: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(material)))


def replication_seed(base_seed: int, r: int) -> int:
    return (base_seed ^ (SEED_MULTIPLIER * (r + 1))) & MASK64


def replication_stream(base_seed: int, r: int) -> np.random.Generator:
    """Independent stream of replication r."""
    return _generator(replication_seed(base_seed, r))


def instance_stream(instance_seed: int) -> np.random.Generator:
    """Stream the instance generator draws its parameters from."""
    return _generator(instance_seed & MASK64)
