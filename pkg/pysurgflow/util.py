import difflib
import math
from fractions import Fraction
from typing import Iterable, Optional, Union

Number = Union[int, float, Fraction]


def round_half_away(value: Number) -> int:
    """Round to the nearest integer, halves going away from zero."""
    value = Fraction(value)
    if value >= 0:
        return math.floor(value + Fraction(1, 2))
    return -math.floor(-value + Fraction(1, 2))


def nearest_label(label: str, candidates: Iterable[str]) -> Optional[str]:
    """Find the closest known label to an unknown one, for error hints."""
    matches = difflib.get_close_matches(label, list(candidates), n=1, cutoff=0.6)
    if len(matches) == 0:
        return None
    return matches[0]


def frames_to_ms(frame: int, rate_hz: Number) -> Fraction:
    """Exact sampling instant of a frame, in milliseconds."""
    return Fraction(frame) * 1000 / Fraction(rate_hz)


def first_frame_at_or_after(time_ms: Number, rate_hz: Number) -> int:
    """Smallest k with k * 1000 / rate_hz >= time_ms."""
    return math.ceil(Fraction(time_ms) * Fraction(rate_hz) / 1000)
