from core.exception.core import AbstractException


class NotAStegoImageException(AbstractException):

    def __init__(
        self, message, err_code="NOT_A_STEGO_IMAGE", exit_code=5, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )


class CorruptHeaderException(AbstractException):

    def __init__(
        self, message, err_code="CORRUPT_HEADER", exit_code=5, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )
