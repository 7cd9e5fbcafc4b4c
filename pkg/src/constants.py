from enum import Enum


class Constants:
    PROJECT_NAME = "gafzeros"
    VERSION = "0.1.0"
    ERROR_LOG_FILENAME = "gafzeros_error"
    RESULT_FILENAME = "result"
    DIGEST_PREFIX_LENGTH = 12
    EXIT_OK = 0
    EXIT_FAILED = 1
    EXIT_ABORTED = 2
    EXIT_ERROR = 3


class Log:
    LOG_FILE_NAME = "gafzeros.log"
    LOG_FILE_ROTATION = "50 MB"


class Extensions:
    JSON = "json"
    CSV = "csv"
    SVG = "svg"
    LOG = "log"


class Kind(Enum):
    GAF = "gaf"
    SYMMETRIC = "symmetric"
    TWO_ATOM = "two_atom"


class Family(Enum):
    UNIFORM = "uniform"
    GAUSSIAN = "gaussian"
    SECH = "sech"
    TABULATED = "tabulated"


class ModelFamily(Enum):
    PALEY_WIENER = "paley-wiener"
    FOCK_BARGMANN = "fock-bargmann"
    SECH = "sech"


class DensityKind(Enum):
    L = "L"
    S = "S"
    R = "R"


class Verdict(Enum):
    DETERMINISTIC = "deterministic-limit"
    RANDOM = "random-limit"


class Quadrature:
    ACCURATE_NODES = 128
    REFINEMENT_FACTOR = 1.5
    TAIL_TOLERANCE = 1e-12
    MAX_TRUNCATION = 1000.0
    CC_ORDER = 16
    CC_PANEL_WIDTH = 0.25
    TABULATED_ORDER = 8
    TABULATED_TAIL_FRACTION = 0.2
    MOMENT_TOLERANCE = 1e-10
    DEGENERACY_TOLERANCE = 1e-12
    RULE_MARGIN = 0.01


class Tolerances:
    REFINE = 1e-10
    REAL = 1e-8
    SNAP = 1e-12
    COARSE = 0.05
    BOUNDARY_FLOOR = 1e-9
    NEAR_INTEGER = 0.05
    MAX_INTEGER_GAP = 0.25
    WINDING_ORDER = 8
    WINDING_PANEL = 0.05
    WINDING_EDGE_TOLERANCE = 1e-2
    WINDING_REFINEMENTS = 3
    WINDING_MAX_DEPTH = 48
    JITTER_ATTEMPTS = 5
    JITTER_SCALE = 1e-6
    SPLIT_ATTEMPTS = 6
    NEWTON_STEPS = 50
    MIN_LEAF_SIZE = 1e-7
    SCAN_STEP = 0.01
    SCAN_RETRIES = 4
    THIN_STRIP = 1e-4
    S_SMALL_Y = 1e-3
    LAPLACIAN_STEPS = (1e-3, 5e-4)
    LOG_FLOOR = 1e-300
    NEGATIVE_INTENSITY = 1e-6
    KERNEL_SLACK = 1e-12
    TRUNCATION_TARGET = 1e-8


class Experiment:
    DEFAULT_BINS = 40
    DEFAULT_TILE_WIDTH = 1.0
    DEFAULT_TRIALS = 20
    DEFAULT_T = 200.0
    DEFAULT_SEED = 0
    DEFAULT_BAND = (-0.3, 0.3)
    MIN_RANDOMNESS_TRIALS = 20
    MIN_TAIL_TRIALS = 1000
    VARIANCE_FLOOR_FACTOR = 10.0
    SHRINK_FRACTION = 0.5
    CONJUGATE_SIGMA = 4.0
    WEAK_CONVERGENCE_SIGMA = 3.0
    DENSITY_POINTS = 201
    INTENSITY_POINTS = 21


class DefaultEnvConfigs:
    THREADS = "1"
    OUTPUT_DIR = "out"
    DEFAULT_N_MODES = "0"
    MAX_N_MODES = "4096"
    EXPORT_DEBUG_LOG_FILE = "False"


class Subcommand(Enum):
    DENSITY = "density"
    INTENSITY = "intensity"
    SAMPLE = "sample"
    ZEROS = "zeros"
    MEASURE = "measure"
    CONVERGENCE = "convergence"
    RANDOMNESS = "randomness"
    VERIFY = "verify"
    TAIL = "tail"
    FIGURE1 = "figure1"
    REPLAY = "replay"
