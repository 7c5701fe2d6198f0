import math
from enum import Enum
from typing import Iterable, List, NamedTuple, Sequence, Union

import numpy as np

from pysurgflow.config import DEFAULT_RATE_HZ
from pysurgflow.errors import WorkflowInputError, verifyPositive


class Arm(Enum):
    left = "left"
    right = "right"

    def __str__(self) -> str:
        return self.value


Arm.__module__ = "pysurgflow"

ARM_FIELDS = ["x", "y", "z", "alpha", "beta", "gamma", "grip", "grip_voltage"]

KINEMATIC_COLUMNS = [
    "{}_{}".format(arm, field) for arm in (Arm.left, Arm.right) for field in ARM_FIELDS
]


class ArmSample(NamedTuple):
    """One arm's record at one instant.

    Translations are kept in recorded units, angles are radians. A grip of 0
    means open and -6 means closed.
    """

    x: float
    y: float
    z: float
    alpha: float
    beta: float
    gamma: float
    grip: float
    grip_voltage: float

    @classmethod
    def zero(cls) -> "ArmSample":
        return cls(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def check_finite(self, where: str = "arm sample"):
        for name, value in zip(self._fields, self):
            if not math.isfinite(value):
                raise WorkflowInputError(
                    "{} field {} is not finite: {}".format(where, name, value)
                )


class KinematicSample(NamedTuple):
    left: ArmSample
    right: ArmSample

    def arm(self, arm: Arm) -> ArmSample:
        return self.left if arm == Arm.left else self.right

    def as_row(self) -> List[float]:
        return list(self.left) + list(self.right)

    @classmethod
    def from_row(cls, row: Sequence[float]) -> "KinematicSample":
        if len(row) != len(KINEMATIC_COLUMNS):
            raise WorkflowInputError(
                "A kinematic row has {} values, but got {}".format(
                    len(KINEMATIC_COLUMNS), len(row)
                )
            )
        half = len(ARM_FIELDS)
        values = [float(v) for v in row]
        return cls(ArmSample(*values[:half]), ArmSample(*values[half:]))


class KinematicSeries:
    """Synchronously sampled two-arm kinematics, one row per sample.

    The data is an (n, 16) float array in KINEMATIC_COLUMNS order.
    """

    def __init__(
        self,
        data: Union[np.ndarray, Iterable[Sequence[float]]],
        rate_hz: Union[int, float] = DEFAULT_RATE_HZ,
    ) -> None:
        verifyPositive("rate_hz", rate_hz)
        array = np.array(data, dtype=np.float64)
        if array.ndim != 2 or array.shape[1] != len(KINEMATIC_COLUMNS):
            raise WorkflowInputError(
                "Kinematic data must have shape (n, {}), but got {}".format(
                    len(KINEMATIC_COLUMNS), array.shape
                )
            )
        if array.shape[0] == 0:
            raise WorkflowInputError("A kinematic series cannot be empty")
        if not np.all(np.isfinite(array)):
            row = int(np.argwhere(~np.isfinite(array))[0][0])
            raise WorkflowInputError(
                "Kinematic sample {} holds a non-finite value".format(row)
            )
        array.setflags(write=False)
        self.data = array
        self.rate_hz = rate_hz

    @classmethod
    def from_samples(
        cls,
        samples: Iterable[KinematicSample],
        rate_hz: Union[int, float] = DEFAULT_RATE_HZ,
    ) -> "KinematicSeries":
        return cls([sample.as_row() for sample in samples], rate_hz)

    def __len__(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, index: int) -> KinematicSample:
        return KinematicSample.from_row(self.data[index].tolist())

    def __iter__(self):
        for index in range(len(self)):
            yield self[index]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, KinematicSeries)
            and self.rate_hz == other.rate_hz
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self) -> str:
        return "KinematicSeries({} samples at {} Hz)".format(len(self), self.rate_hz)

    def column(self, name: str) -> np.ndarray:
        if name not in KINEMATIC_COLUMNS:
            raise WorkflowInputError("Unknown kinematic column {!r}".format(name))
        return self.data[:, KINEMATIC_COLUMNS.index(name)]

    def with_data(
        self, data: np.ndarray, rate_hz: Union[int, float] = None
    ) -> "KinematicSeries":
        return KinematicSeries(data, self.rate_hz if rate_hz is None else rate_hz)


KinematicSeries.__module__ = "pysurgflow"
