import math
from abc import ABCMeta
from typing import List

from loguru import logger

from src.model.spectral_measure import SpectralMeasure
from src.model.strip import StripSpec
from src.model.validation_report import ValidationReport
from src.spectral.errors import EmptyMeasureException
from src.spectral.moments import exponential_moment


class MeasureValidator(metaclass=ABCMeta):
    def validate(self, measure: SpectralMeasure, strip: StripSpec) -> ValidationReport:
        raise NotImplementedError


class GeneralMeasureValidator(MeasureValidator):
    def validate(self, measure: SpectralMeasure, strip: StripSpec) -> ValidationReport:
        if measure is None or not measure.get_total_mass() > 0.0:
            raise EmptyMeasureException("Spectral measure is empty")

        messages: List[str] = []
        reach = strip.reach()
        half_width = measure.half_width()

        moment = None
        if reach < half_width:
            moment = exponential_moment(measure, reach)
            if not math.isfinite(moment):
                messages.append(f"Exponential moment diverges at reach {reach}")
        else:
            for density in measure.get_densities():
                if density.half_width() <= reach:
                    messages.append(
                        f"Exponential moment of {density.get_family().value} component diverges "
                        f"on band [{strip.get_y_min()}, {strip.get_y_max()}] (half width {density.half_width()})"
                    )

        if half_width < strip.get_half_width() and reach < half_width:
            logger.debug(
                f"Strip half width {strip.get_half_width()} narrowed to {half_width} by the measure"
            )

        report = ValidationReport(
            valid=len(messages) == 0,
            symmetric=measure.is_symmetric(),
            degenerate=measure.is_degenerate(),
            reach=reach,
            half_width=half_width,
            exponential_moment=moment,
            messages=messages,
        )

        if not report.is_valid():
            logger.warning(f"Invalid spectral measure : {'; '.join(messages)}")

        return report


def validate(measure: SpectralMeasure, strip: StripSpec) -> ValidationReport:
    return GeneralMeasureValidator().validate(measure=measure, strip=strip)
