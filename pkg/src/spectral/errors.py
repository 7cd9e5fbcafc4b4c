from typing import Optional

from src.errors import GeneralException


class SpectralException(GeneralException):
    pass


class EmptyMeasureException(SpectralException):
    pass


class MeasureBuildException(SpectralException):
    pass


class MeasureReadException(SpectralException):
    pass


class InvalidSpectralMeasureException(SpectralException):
    pass


class StripViolationException(SpectralException):
    pass


class QuadratureException(SpectralException):
    def __init__(self, message: str, error_estimate: Optional[float] = None) -> None:
        super().__init__(message)
        self.error_estimate = error_estimate
