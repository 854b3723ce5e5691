"""Deterministic seed derivation.

Every random draw in the package flows through `rng_for`, so one root seed
fully determines a run. Derived streams are keyed by integer tuples
(e.g. root, image index, iteration, sample) and never shared.
"""

import numpy as np

_MASK64 = (1 << 64) - 1


def rng_for(*keys: int) -> np.random.Generator:
    """Independent generator for a tuple of integer keys."""
    entropy = [int(k) & _MASK64 for k in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))
