"""Deterministic stream derivation for every randomized routine.

All randomness flows through counter-based Philox generators keyed by
``SeedSequence((seed, domain, index))``.  Streams are therefore independent,
order-insensitive, and reproducible across platforms and worker counts.

Domain map (fixed contract, relied on by golden tests):

* ``LABELS = 0``    component / group label draws in data generators
* ``POINTS = 1``    coordinate draws in data generators
* ``RESTARTS = 2``  K-means restart ``r`` uses ``(seed, 2, r)``
"""

import numpy as np

LABELS = 0
POINTS = 1
RESTARTS = 2


def stream(seed: int, domain: int, index: int = 0) -> np.random.Generator:
    """Return the Philox generator for one named stream."""
    ss = np.random.SeedSequence((int(seed), int(domain), int(index)))
    return np.random.Generator(np.random.Philox(ss))
