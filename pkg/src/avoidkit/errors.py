class AvoidkitError(RuntimeError):
    """
    Base class for all errors in avoidkit. The `exit_code` is what the CLI exits with.
    """

    exit_code: int = 1


class InputError(ValueError, AvoidkitError):
    """
    Raised when inputs violate an operation's preconditions.
    """

    exit_code = 2


class DegenerateInput(InputError):
    """
    Raised for affinely dependent defining tuples, points not in general position,
    and other degenerate configurations.
    """


class NoIntersection(DegenerateInput):
    """
    Raised when a line is parallel to a hyperplane and does not meet it.
    """


class NotSeparable(InputError):
    """
    Raised when two point sets have intersecting convex hulls.
    """


class ParseError(InputError):
    """
    Raised for malformed point or report files.
    """

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ConfigError(InputError):
    """
    Raised when settings of avoidkit itself are invalid.
    """


class CapExceeded(AvoidkitError):
    """
    Raised when a brute-force oracle is asked to run above its size cap.
    """

    exit_code = 3


class VerificationFailed(AvoidkitError):
    """
    Raised when a constructed object fails its own verification.
    """

    exit_code = 1


class SearchFailed(AvoidkitError):
    """
    Raised when a search finds nothing of the requested size.
    """

    exit_code = 1


class InternalError(AvoidkitError):
    """
    Raised for states that should be impossible. Carries a diagnostic.
    """

    exit_code = 1
