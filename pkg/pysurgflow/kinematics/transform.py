import math
from typing import List, Tuple

import numpy as np

from pysurgflow.errors import WorkflowInputError
from pysurgflow.kinematics.sample import ArmSample, KinematicSeries


def rot_x(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, c, -s, 0.0],
            [0.0, s, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def rot_y(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [c, 0.0, s, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [-s, 0.0, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def translate(x: float, y: float, z: float) -> np.ndarray:
    """Tx(x) Ty(y) Tz(z); the three axis translations commute."""
    T = np.eye(4)
    T[0:3, 3] = [x, y, z]
    return T


def _checked(arm: ArmSample, name: str) -> ArmSample:
    arm = ArmSample(*arm)
    arm.check_finite(name)
    return arm


def homogeneous_right(arm: ArmSample) -> np.ndarray:
    """Pose of the right instrument.

    H = T(x, y, z) Rx(pi/18) Ry(alpha) Rx(beta - 5 pi/9) Ry(gamma), composed
    left to right and acting on column vectors.

    Raises:
        WorkflowInputError: if a field is not finite.
    """
    s = _checked(arm, "right arm")
    return (
        translate(s.x, s.y, s.z)
        @ rot_x(math.pi / 18)
        @ rot_y(s.alpha)
        @ rot_x(s.beta - 5 * math.pi / 9)
        @ rot_y(s.gamma)
    )


def homogeneous_left(arm: ArmSample) -> np.ndarray:
    """Pose of the left instrument.

    H = T(x, y, z) Rx(-pi/18) Ry(alpha) Rx(beta + pi/18) Ry(gamma).

    Raises:
        WorkflowInputError: if a field is not finite.
    """
    s = _checked(arm, "left arm")
    return (
        translate(s.x, s.y, s.z)
        @ rot_x(-math.pi / 18)
        @ rot_y(s.alpha)
        @ rot_x(s.beta + math.pi / 18)
        @ rot_y(s.gamma)
    )


def is_rigid_transform(H: np.ndarray, tol: float = 1e-9) -> bool:
    """Check a 4x4 matrix is a rigid transform.

    The bottom row must be exactly (0, 0, 0, 1) and the rotation block must
    satisfy R^T R = I and det R = 1 to within tol.
    """
    H = np.asarray(H, dtype=np.float64)
    if H.shape != (4, 4):
        raise WorkflowInputError("Expected a 4x4 matrix, but got {}".format(H.shape))
    if not np.array_equal(H[3], [0.0, 0.0, 0.0, 1.0]):
        return False
    R = H[0:3, 0:3]
    if np.max(np.abs(R.T @ R - np.eye(3))) > tol:
        return False
    return abs(np.linalg.det(R) - 1.0) <= tol


def series_transforms(series: KinematicSeries) -> List[Tuple[np.ndarray, np.ndarray]]:
    """(left, right) transforms of every sample of a series."""
    return [
        (homogeneous_left(sample.left), homogeneous_right(sample.right))
        for sample in series
    ]
