from core.exception.core import AbstractException


class KernelContractException(AbstractException):
    """Kernel called outside its declared preconditions (e.g. block id >= 4)."""

    def __init__(
        self, message, err_code="KERNEL_CONTRACT", exit_code=1, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )


class KernelLaunchException(AbstractException):
    """A kernel instance failed; carries the first failing (block, thread)."""

    def __init__(
        self, message, err_code="KERNEL_LAUNCH_FAILED", exit_code=1, *args, **kwargs
    ):
        super().__init__(
            message=message, err_code=err_code, exit_code=exit_code, *args, **kwargs
        )
