import numpy as np
import pytest

import pysurgflow as sf


def test_kinematic_columns():
    assert len(sf.KINEMATIC_COLUMNS) == 16
    assert sf.KINEMATIC_COLUMNS[0] == "left_x"
    assert sf.KINEMATIC_COLUMNS[7] == "left_grip_voltage"
    assert sf.KINEMATIC_COLUMNS[15] == "right_grip_voltage"


def test_sample_row():
    sample = sf.KinematicSample.from_row(list(range(16)))
    assert sample.left.x == 0.0
    assert sample.right.grip == 14.0
    assert sample.arm(sf.Arm.right) is sample.right
    assert sample.as_row() == [float(v) for v in range(16)]

    with pytest.raises(sf.WorkflowInputError):
        sf.KinematicSample.from_row([0.0] * 15)


def test_arm_check_finite():
    sf.ArmSample.zero().check_finite()

    with pytest.raises(sf.WorkflowInputError):
        sf.ArmSample(0.0, float("nan"), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0).check_finite()


def test_series():
    samples = [sf.KinematicSample(sf.ArmSample.zero(), sf.ArmSample.zero())] * 3
    series = sf.KinematicSeries.from_samples(samples)
    assert len(series) == 3
    assert series.rate_hz == 30
    assert list(series) == samples
    assert series == sf.KinematicSeries(np.zeros((3, 16)))
    assert series.column("right_z").tolist() == [0.0, 0.0, 0.0]

    with pytest.raises(ValueError):
        series.data[0, 0] = 1.0

    with pytest.raises(sf.WorkflowInputError):
        series.column("left_w")


@pytest.mark.parametrize(
    "data",
    [
        np.zeros((0, 16)),
        np.zeros((3, 15)),
        np.zeros(16),
        np.array([[0.0] * 15 + [float("inf")]]),
    ],
)
def test_series_rejects(data):
    with pytest.raises(sf.WorkflowInputError):
        sf.KinematicSeries(data)


def test_series_rate_must_be_positive():
    with pytest.raises(sf.WorkflowInputError):
        sf.KinematicSeries(np.zeros((1, 16)), rate_hz=0)
