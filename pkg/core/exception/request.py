from core.exception.core import AbstractException


class InvalidRequestException(AbstractException):
    def __init__(
        self, message, err_code="INVALID_REQUEST", exit_code=2, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )
