from src.errors import GeneralException


class IntensityException(GeneralException):
    pass


class InvalidKernelException(IntensityException):
    pass


class StencilException(IntensityException):
    pass
