"""Process exit codes of the efpe command line."""

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_SIZE_MISMATCH = 3
EXIT_TOLERANCE_NOT_REACHED = 4
