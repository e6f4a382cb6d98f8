# ============================================================
# General Constants
# ============================================================
LOCAL_DEV_PORT = 6757
SEMIQUANT_LOGGER = "semiquant"
SEMIQUANT_LOGS_DIR = "SemiquantLogs"
SEMIQUANT_LOG_FILE = "semiquant.log"
SEMIQUANT_MAX_FILE_SIZE = 10 * 1024 * 1024   # 10MB
SEMIQUANT_BACKUP_COUNT = 5                   # 5 backup files circulating in the logs directory
SEMIQUANT_CONSOLE_OUTPUT = True              # console goes to stderr, stdout carries reports
TOOL_VERSION = "0.1.0"


# ============================================================
# Report Constants
# ============================================================
REPORT_SCHEMA_VERSION = "1.0"
REPORT_SCHEMA_FILE = "report.schema.json"


# ============================================================
# Numerical Tolerances
# ============================================================
IDENTITY_TOL = 1e-10        # floating-point identities (plane-wave residuals)
VIOLATION_TOL = 1e-3        # a residual above this is an O(1) violation witness
CLOSED_FORM_TOL = 1e-12     # closed-form field-theory identities
EIGEN_SIGN_TOL = 1e-10      # sign tests on symmetric eigensolver output
DISPERSION_TOL = 1e-8
ODE_TOL = 1e-9
FD_STEP = 1e-5              # central-difference step for callable profiles
STOCHASTIC_SIGMAS = 4.0


# ============================================================
# Sampling Defaults
# ============================================================
DEFAULT_SEED = 20240601
WAVE_VECTOR_BOX = 2.0       # wave vectors sampled uniformly in [-2, 2]^4
SCAN_POINTS = 401           # u, v samples on [-pi, pi] for the postulate scan
SINE_H_SMALL = 1e-8         # SineFamily(h) below this is evaluated as Linear


# ============================================================
# Langevin Simulation Defaults
# ============================================================
DEFAULT_K_GRID = [0.0, 0.5, 1.0, 2.0, 4.0]
DEFAULT_DTAU = 0.005
DEFAULT_N_STEPS = 100_000
DEFAULT_N_BURNIN = 2_000
DEFAULT_N_BATCHES = 50


# ============================================================
# No-go Induction Plan
# ============================================================
# (step, pair degrees, determining triple classes, check triple class, expected unknowns)
INDUCTION_STEPS = [
    (1, (2, 2), ("M2,M2,Q2", "M2,M2,C2"), "M2,M2,M2", 6),
    (2, (2, 3), ("M2,M3,Q2", "M2,M3,C2"), "M2,A3,M2", 48),
    (3, (2, 4), ("M2,M4,Q2", "M2,M4,C2"), "M2,A4,M2", 100),
    (4, (3, 3), ("M3,Q3,M2", "M3,C3,M2"), "M3,M3,M2", 66),
]
GRAPH_RECURSION_LIMIT = 50


# ============================================================
# Exit Codes
# ============================================================
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BAD_INPUT = 2
EXIT_DEVIATION = 3
