"""Named, independently seeded RNG streams for reproducible runs.

Every stochastic component (masking, reservoir, init, augmentation, shuffling)
pulls from its own stream so adding draws in one place never shifts another.
"""

from __future__ import annotations

import hashlib

import numpy as np
import torch


def substream_seed(seed: int, name: str) -> int:
    """Stable 63-bit seed derived from a base seed and a stream name."""
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return int.from_bytes(digest[:8], "little") >> 1


class RngStreams:
    """Lazily created numpy and torch generators keyed by stream name."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._numpy: dict[str, np.random.Generator] = {}
        self._torch: dict[str, torch.Generator] = {}

    def numpy(self, name: str) -> np.random.Generator:
        if name not in self._numpy:
            self._numpy[name] = np.random.Generator(np.random.PCG64(substream_seed(self.seed, name)))
        return self._numpy[name]

    def torch(self, name: str) -> torch.Generator:
        if name not in self._torch:
            gen = torch.Generator()
            gen.manual_seed(substream_seed(self.seed, name))
            self._torch[name] = gen
        return self._torch[name]
