"""
Error taxonomy – every failure carries a stable code.

Front ends translate codes into exit statuses (cli.EXIT_CODES) and HTTP
statuses (routers.hypothesis.ERROR_CODES).
"""


class LognormalCatError(Exception):
    """Structured error with code."""

    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        self.code = code or self.code
        self.message = message
        super().__init__(message)


# ── Input errors: bad data or bad configuration ──────────────────


class InputError(LognormalCatError):
    code = "INPUT_ERROR"


class NonPositiveObservation(InputError):
    code = "NON_POSITIVE_OBSERVATION"


class TooFewObservations(InputError):
    code = "TOO_FEW_OBSERVATIONS"


class TooFewGroups(InputError):
    code = "TOO_FEW_GROUPS"


class DegenerateSample(InputError):
    code = "DEGENERATE_SAMPLE"


class AlphaOutOfRange(InputError):
    code = "ALPHA_OUT_OF_RANGE"


class MTooSmall(InputError):
    code = "M_TOO_SMALL"


class InvalidSeed(InputError):
    code = "INVALID_SEED"


class InvalidScenario(InputError):
    code = "INVALID_SCENARIO"


class InvalidTable(InputError):
    code = "INVALID_TABLE"


class OutputPathError(InputError):
    code = "OUTPUT_PATH"


# ── Numerical errors: the computation itself failed ──────────────


class NumericalError(LognormalCatError):
    code = "NUMERICAL_ERROR"


class NonPositiveVariance(NumericalError):
    code = "NON_POSITIVE_VARIANCE"


class DegenerateProfile(NumericalError):
    code = "DEGENERATE_PROFILE"


class NoConvergence(NumericalError):
    code = "NO_CONVERGENCE"


class InconsistentLikelihood(NumericalError):
    code = "INCONSISTENT_LIKELIHOOD"


class StudyFailed(NumericalError):
    code = "STUDY_FAILED"
