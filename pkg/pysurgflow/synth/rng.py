from typing import Sequence, TypeVar

from pysurgflow.errors import WorkflowInputError

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB


class SplitMix64:
    """The SplitMix64 generator.

    Its output sequence is fully specified by the seed, so synthetic data can
    be regenerated bit for bit by any implementation of the same algorithm.
    """

    def __init__(self, seed: int) -> None:
        if type(seed) is not int:
            raise WorkflowInputError("Seed must be an integer, but got {!r}".format(seed))
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_MULTIPLIER_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_MULTIPLIER_2) & MASK64
        return z ^ (z >> 31)

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high], by rejection sampling."""
        if high < low:
            raise WorkflowInputError("Empty range [{}, {}]".format(low, high))
        span = high - low + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            draw = self.next_u64()
            if draw < limit:
                return low + draw % span

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def chance(self, probability: float) -> bool:
        return self.random() < probability

    def choice(self, items: Sequence[T]) -> T:
        if len(items) == 0:
            raise WorkflowInputError("Cannot choose from an empty sequence")
        return items[self.randint(0, len(items) - 1)]
