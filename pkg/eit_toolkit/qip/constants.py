import math

MODULE_NAME = "qip"

LOG2_E = math.log2(math.e)

# inequality chains checked by the gate metrics, each "much greater than" scaled by validity_margin
DECOHERENCE_REGIME = "deco2"
CONTROL_LIMITED_REGIME = "schmlim"
SUPPRESSED_EMISSION_REGIME = "suppress"
NON_DEMOLITION_REGIME = "nondem"

# number of log-spaced alpha_sq points scanned before the threshold root search
THRESHOLD_SCAN_POINTS = 64
