import logging
from fractions import Fraction
from typing import List, NamedTuple, Union

import numpy as np

from pysurgflow.config import GRIP_CLOSE, GRIP_OPEN
from pysurgflow.errors import WorkflowInputError, verifyPositive
from pysurgflow.kinematics.sample import Arm, KinematicSeries

logger = logging.getLogger(__name__)


def minmax_normalize(series: KinematicSeries) -> KinematicSeries:
    """Scale every column to [-1, 1] over the series.

    Constant columns map to 0.
    """
    data = series.data
    low = data.min(axis=0)
    span = data.max(axis=0) - low
    constant = span == 0
    scaled = 2 * (data - low) / np.where(constant, 1.0, span) - 1
    scaled[:, constant] = 0.0
    return series.with_data(scaled)


def znormalize(series: KinematicSeries) -> KinematicSeries:
    """Centre every column to mean 0 and population std 1.

    Constant columns map to 0.
    """
    data = series.data
    std = data.std(axis=0)
    constant = std == 0
    scaled = (data - data.mean(axis=0)) / np.where(constant, 1.0, std)
    scaled[:, constant] = 0.0
    return series.with_data(scaled)


def downsample(series: KinematicSeries, target_hz: Union[int, float]) -> KinematicSeries:
    """Keep every (rate / target)-th sample, starting with the first.

    Raises:
        WorkflowInputError: if the target rate does not divide the series rate.
    """
    verifyPositive("target_hz", target_hz)
    stride = Fraction(series.rate_hz) / Fraction(target_hz)
    if stride.denominator != 1:
        raise WorkflowInputError(
            "Cannot downsample from {} Hz to {} Hz: stride {} is not an integer".format(
                series.rate_hz, target_hz, float(stride)
            )
        )
    step = int(stride)
    logger.debug("Downsampling %d samples with stride %d", len(series), step)
    return series.with_data(series.data[::step], target_hz)


class GripAnomaly(NamedTuple):
    index: int
    arm: Arm
    value: float
    kind: str

    def __str__(self) -> str:
        return "sample {} {} grip {} is {}".format(
            self.index, self.arm, self.value, self.kind
        )


BELOW_RANGE = "below-range"
ABOVE_RANGE = "above-range"


def validate_grip(series: KinematicSeries) -> List[GripAnomaly]:
    """Flag grip values outside the closed [-6, 0] interval."""
    anomalies = []
    for index, sample in enumerate(series):
        for arm in Arm:
            grip = sample.arm(arm).grip
            if grip < GRIP_CLOSE:
                anomalies.append(GripAnomaly(index, arm, grip, BELOW_RANGE))
            elif grip > GRIP_OPEN:
                anomalies.append(GripAnomaly(index, arm, grip, ABOVE_RANGE))
    if len(anomalies) > 0:
        logger.warning("%d grip values out of range", len(anomalies))
    return anomalies
