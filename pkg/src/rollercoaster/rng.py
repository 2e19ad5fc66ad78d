"""Seeded random generation.

Everything random in the package goes through ``SplitMix64`` (version
``splitmix64-v1``): state advances by the golden-ratio increment and each
output is the usual 30/27/31 xor-shift-multiply finaliser.  Blocks are drawn
in counter mode, so ``next_block(k)`` returns exactly the next ``k`` scalar
outputs.
"""
import numpy as np

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

VERSION = "splitmix64-v1"


def _mix_scalar(z):
    z = ((z ^ (z >> 30)) * _M1) & MASK
    z = ((z ^ (z >> 27)) * _M2) & MASK
    return z ^ (z >> 31)


def _mix_array(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    version = VERSION

    def __init__(self, seed: int = 0):
        self.state = int(seed) & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return _mix_scalar(self.state)

    def next_block(self, count: int) -> np.ndarray:
        steps = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            states = np.uint64(self.state) + steps * np.uint64(GAMMA)
            out = _mix_array(states)
        self.state = (self.state + count * GAMMA) & MASK
        return out

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def permutation(self, n: int) -> np.ndarray:
        """Uniform permutation of ``1..n`` as int64 (argsort of random keys)."""
        return np.argsort(self.next_block(n), kind="stable").astype(np.int64) + 1

    def point_set(self, count: int) -> list[tuple[int, int]]:
        """``count`` points with distinct x in ``1..count`` and distinct y, sorted by x."""
        ys = self.permutation(count)
        return [(i + 1, int(y)) for i, y in enumerate(ys)]


def random_permutation(n: int, seed: int) -> np.ndarray:
    return SplitMix64(seed).permutation(n)
