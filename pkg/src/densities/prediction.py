from functools import partial

from loguru import logger

from src.constants import Kind
from src.errors import InvalidKindException
from src.model.prediction import HorizontalDensityPrediction
from src.model.spectral_measure import SpectralMeasure
from src.densities.errors import DegenerateMeasureException
from src.densities.horizontal import gaf_density_L, real_atom_R, sym_density_S


def predict(measure: SpectralMeasure, kind: Kind) -> HorizontalDensityPrediction:
    if measure.is_degenerate_gaf() or (kind == Kind.SYMMETRIC and measure.is_degenerate()):
        raise DegenerateMeasureException(
            "Degenerate spectrum, the horizontal limit is random and has no density"
        )

    if kind == Kind.GAF:
        prediction = HorizontalDensityPrediction(
            kind=kind, density=partial(gaf_density_L, measure)
        )
    elif kind == Kind.SYMMETRIC:
        prediction = HorizontalDensityPrediction(
            kind=kind,
            density=partial(sym_density_S, measure),
            atom_at_zero=real_atom_R(measure),
        )
    elif kind == Kind.TWO_ATOM:
        raise DegenerateMeasureException(
            "Two-atom spectra have a random horizontal limit, nothing to predict"
        )
    else:
        raise InvalidKindException(f"Unknown kind : {kind}")

    logger.debug(f"Prediction for {kind.value} : atom {prediction.get_atom_at_zero()}")

    return prediction
