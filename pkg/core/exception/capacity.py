from core.exception.core import AbstractException


class CapacityExceededException(AbstractException):
    """
    Raised when a byte stream does not fit the pixels it is meant for.

    `required` and `available` are always reported in bytes.
    """

    def __init__(
        self,
        message,
        required: int,
        available: int,
        err_code="CAPACITY_EXCEEDED",
        exit_code=2,
        *args,
        **kwargs,
    ):
        super().__init__(
            message=message,
            err_code=err_code,
            exit_code=exit_code,
            required=required,
            available=available,
            *args,
            **kwargs,
        )
        self.required = required
        self.available = available
