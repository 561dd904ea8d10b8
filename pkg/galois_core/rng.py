"""Counter-based random streams: one master seed, one stream per counter."""

import numpy as np


def stream(master_seed: int, counter: int = 0) -> np.random.Generator:
    """Independent Philox generator for (master_seed, counter)."""
    seq = np.random.SeedSequence(entropy=int(master_seed), spawn_key=(int(counter),))
    return np.random.Generator(np.random.Philox(seq))
