from core.exception.core import AbstractException


class UnsupportedFormatException(AbstractException):

    def __init__(
        self, message, err_code="UNSUPPORTED_FORMAT", exit_code=3, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )


class UnsupportedDepthException(AbstractException):

    def __init__(
        self, message, err_code="UNSUPPORTED_DEPTH", exit_code=3, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )


class CorruptImageException(AbstractException):

    def __init__(
        self, message, err_code="CORRUPT_IMAGE", exit_code=3, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )


class FileAccessException(AbstractException):

    def __init__(self, message, err_code="IO_ERROR", exit_code=4, *args, **kwargs):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )


class ShapeMismatchException(AbstractException):

    def __init__(
        self, message, err_code="SHAPE_MISMATCH", exit_code=6, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )
