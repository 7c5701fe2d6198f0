from pysurgflow.timeline import *
from pysurgflow.timeline import __all__ as timeline_all
from pysurgflow.metrics import *
from pysurgflow.metrics import __all__ as metrics_all
from pysurgflow.ranking import *
from pysurgflow.ranking import __all__ as ranking_all
from pysurgflow.harmonize import *
from pysurgflow.harmonize import __all__ as harmonize_all
from pysurgflow.kinematics import *
from pysurgflow.kinematics import __all__ as kinematics_all
from pysurgflow.synth import *
from pysurgflow.synth import __all__ as synth_all
from pysurgflow.formats import *
from pysurgflow.formats import __all__ as formats_all
from pysurgflow.types import ACTIVITY_COLUMNS, Column, Granularity, Task
from pysurgflow.errors import (
    ParseIssue,
    ParseIssueKind,
    VocabularyError,
    WorkflowInputError,
    WorkflowInternalError,
    WorkflowParseError,
    WorkflowValidationError,
)
from pysurgflow.config import (
    DEFAULT_ACCEPTABLE_DELAY_MS,
    DEFAULT_RATE_HZ,
    FIRST_PASS_THRESHOLD_MS,
    GRIP_CLOSE,
    GRIP_OPEN,
    IDLE,
    SECOND_PASS_THRESHOLD_MS,
)

# begin __all__
__all__ = (
    timeline_all
    + metrics_all
    + ranking_all
    + harmonize_all
    + kinematics_all
    + synth_all
    + formats_all
    + [
        "ACTIVITY_COLUMNS",
        "Column",
        "Granularity",
        "Task",
        "ParseIssue",
        "ParseIssueKind",
        "VocabularyError",
        "WorkflowInputError",
        "WorkflowInternalError",
        "WorkflowParseError",
        "WorkflowValidationError",
        "DEFAULT_ACCEPTABLE_DELAY_MS",
        "DEFAULT_RATE_HZ",
        "FIRST_PASS_THRESHOLD_MS",
        "GRIP_CLOSE",
        "GRIP_OPEN",
        "IDLE",
        "SECOND_PASS_THRESHOLD_MS",
    ]
)
# end __all__
