from pysurgflow.kinematics.sample import (
    ARM_FIELDS,
    KINEMATIC_COLUMNS,
    Arm,
    ArmSample,
    KinematicSample,
    KinematicSeries,
)
from pysurgflow.kinematics.transform import (
    homogeneous_left,
    homogeneous_right,
    is_rigid_transform,
    rot_x,
    rot_y,
    series_transforms,
    translate,
)
from pysurgflow.kinematics.preprocess import (
    ABOVE_RANGE,
    BELOW_RANGE,
    GripAnomaly,
    downsample,
    minmax_normalize,
    validate_grip,
    znormalize,
)

__all__ = [
    "ABOVE_RANGE",
    "ARM_FIELDS",
    "Arm",
    "ArmSample",
    "BELOW_RANGE",
    "GripAnomaly",
    "KINEMATIC_COLUMNS",
    "KinematicSample",
    "KinematicSeries",
    "downsample",
    "homogeneous_left",
    "homogeneous_right",
    "is_rigid_transform",
    "minmax_normalize",
    "rot_x",
    "rot_y",
    "series_transforms",
    "translate",
    "validate_grip",
    "znormalize",
]
