SEED_ENV_VAR = "PLANAR_LIE_SEED"
LOG_LEVEL_ENV_VAR = "PLANAR_LIE_LOG_LEVEL"
DEFAULT_SEED = 20200101

# Parser limits; keep arbitrary input from exhausting memory or the stack.
MAX_EXPONENT = 64
MAX_NESTING = 100
MAX_DEGREE = 256
MAX_NUMBER_DIGITS = 1000
MAX_TERMS = 4096

REPORT_SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_CLOSED = 2
EXIT_PARSE_ERROR = 3
EXIT_NOT_SOLVABLE = 4
EXIT_IRRATIONAL_SPECTRUM = 5
EXIT_UNCLASSIFIABLE = 6
EXIT_INVALID_PARAMETERS = 7
