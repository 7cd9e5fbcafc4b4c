from src.errors import GeneralException


class SamplerException(GeneralException):
    pass


class NonSymmetricSamplingException(SamplerException):
    pass
