class HilbertGrowthError(Exception):
    """A general error in the hilbert-growth package"""

    DESCRIPTION = "General error"

    def __str__(self):
        if len(self.args) == 1:
            details = self.args[0]
        else:
            details = self.args
        return f"{self.DESCRIPTION}: {details}"


class HilbertGrowthValueError(HilbertGrowthError, ValueError):
    DESCRIPTION = "One or more of the provided parameters is not valid"


class HilbertGrowthWindowError(HilbertGrowthValueError):
    DESCRIPTION = "The degree window does not cover the requested degrees"


class HilbertGrowthFormatError(HilbertGrowthError):
    """Malformed input file, reported with its 1-based line number"""

    DESCRIPTION = "Malformed input"

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line

    def __str__(self):
        if self.line is not None:
            return f"{self.DESCRIPTION}: line {self.line}: {self.args[0]}"
        return f"{self.DESCRIPTION}: {self.args[0]}"


class GenericityError(HilbertGrowthError):
    """Seeded random draws disagreed or the redraw budget ran out"""

    DESCRIPTION = "Genericity check failed"


class HypothesisError(HilbertGrowthError):
    """A hypothesis of the requested statement does not hold on the input"""

    DESCRIPTION = "Hypothesis not satisfied"

    def __init__(self, hypothesis, details=None):
        super().__init__(details or hypothesis)
        self.hypothesis = hypothesis
        self.details = details

    def __str__(self):
        if self.details:
            return f"{self.DESCRIPTION}: {self.hypothesis}: {self.details}"
        return f"{self.DESCRIPTION}: {self.hypothesis}"


class TheoremViolationError(HilbertGrowthError):
    """A proven conclusion failed on input that passed every hypothesis"""

    DESCRIPTION = "Theorem violation alarm"

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context or {}


STATUS_OK = "ok"
STATUS_ERROR = "error"
STATUS_HYPOTHESIS_FAIL = "hypothesis_fail"
STATUS_ALARM = "alarm"

EXIT_CODES = {
    STATUS_OK: 0,
    STATUS_ERROR: 1,
    STATUS_HYPOTHESIS_FAIL: 2,
    STATUS_ALARM: 3,
}

ERROR_MAP = {
    TheoremViolationError: STATUS_ALARM,
    HypothesisError: STATUS_HYPOTHESIS_FAIL,
}


def status_from_error(error: Exception) -> str:
    for error_class, status in ERROR_MAP.items():
        if isinstance(error, error_class):
            return status
    return STATUS_ERROR
