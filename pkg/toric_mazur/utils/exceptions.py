from typing import Optional, Tuple


class ToricMazurException(Exception):
    """
    Base exception class for toric-mazur custom exceptions.
    """


class RootDatumError(ToricMazurException):
    """
    Exception raised for an invalid root datum, an unknown root or an incompatible pairing.
    """


class FanError(ToricMazurException):
    """
    Exception raised when a cone id is unknown or a cone straddles a root hyperplane.
    """


class OrthogonalSetError(ToricMazurException):
    """
    Exception raised when a family of characters is not a valid orthogonal set.

    :param message: Human readable reason.
    :param pair: The adjacent cone pair whose wall condition fails, if any.
    :param cone_id: The cone whose character is missing or ill-formed, if any.
    """

    def __init__(
            self,
            message: str,
            pair: Optional[Tuple[str, str]] = None,
            cone_id: Optional[str] = None,
    ) -> None:
        super().__init__(message)
        self.pair = pair
        self.cone_id = cone_id


class NotConvexError(ToricMazurException):
    """
    Exception raised when global sections are requested for a divisor whose support
    function is not convex.
    """


class InconsistentCoefficientsError(ToricMazurException):
    """
    Exception raised when ray coefficients admit no integral character on some cone.
    """


class LeviSpecError(ToricMazurException):
    """
    Exception raised for batches that do not sum to n or a rank-1 spec with a non-root.
    """


class DivisorFormatError(ToricMazurException):
    """
    Exception raised when a divisor JSON document is malformed.

    :param message: Human readable reason.
    :param cone_id: The offending cone id, if known.
    """

    def __init__(self, message: str, cone_id: Optional[str] = None) -> None:
        super().__init__(message)
        self.cone_id = cone_id


# Exceptions reported by the command line as input errors (exit code 2)
INPUT_ERRORS = (
    RootDatumError,
    FanError,
    OrthogonalSetError,
    NotConvexError,
    InconsistentCoefficientsError,
    LeviSpecError,
    DivisorFormatError,
)
