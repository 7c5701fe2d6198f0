# Label filling every frame not covered by an annotated segment.
IDLE = "Idle"

# Frame rate of the synchronised video/kinematic streams.
DEFAULT_RATE_HZ = 30

# Full width of the tolerance window centred on a ground-truth transition.
DEFAULT_ACCEPTABLE_DELAY_MS = 500

# Observer harmonization thresholds (strict: |A - B| < threshold merges).
FIRST_PASS_THRESHOLD_MS = 1000
SECOND_PASS_THRESHOLD_MS = 500

# Nominal grip range of the robotic instruments.
GRIP_OPEN = 0.0
GRIP_CLOSE = -6.0
