from src.errors import GeneralException


class DensityException(GeneralException):
    pass


class DegenerateMeasureException(DensityException):
    pass


class NonSymmetricMeasureException(DensityException):
    pass


class ClosedFormDomainException(DensityException):
    pass
