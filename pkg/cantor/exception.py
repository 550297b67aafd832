from cantor import utils


class CantorException(Exception):
    """Base class for all cantor exceptions.

    Every concrete exception is named after the machine-readable error code it
    reports, and :attr:`exit_code` selects the process exit status when the
    exception reaches :func:`cantor.main.main`.

    """

    exit_code = utils.CANTOR_COMMAND_ERROR

    @property
    def code(self):
        return type(self).__name__


class ValidationException(CantorException):
    """Raised when an input is rejected before any computation starts."""

    exit_code = utils.CANTOR_VALIDATION_ERROR


class ComputationException(CantorException):
    """Raised when a well-formed computation cannot be carried out."""

    exit_code = utils.CANTOR_COMMAND_ERROR
