# pylint: disable=missing-docstring
#
# Custom exception types used throughout the library. All exceptions derive
# from SteinerError.


class SteinerError(Exception):
    """
    Base class for all PySteiner errors.
    """


class SteinerInvalidInput(SteinerError):
    """
    Raised when the input of a function/method is invalid.
    """


class SteinerConditionError(SteinerInvalidInput):
    """
    Raised when a linear map fails the Steiner (injectivity) condition.

    The lexicographically first failing point is kept in ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SteinerFormatError(SteinerInvalidInput):
    """
    Raised when a bundle or triplet document can't be parsed.
    """


class SteinerBudgetError(SteinerError):
    """
    Raised when an enumeration would visit more points than the budget allows.
    """


class SteinerSamplerError(SteinerError):
    """
    Raised when rejection sampling gives up.
    """


class SteinerInvariantViolation(SteinerError):
    """
    Raised when a proven invariant fails. Always a bug in the library.
    """


class SteinerComparisonFailure(AssertionError):
    """
    Raised when a comparison between two jumping loci fails.
    """
