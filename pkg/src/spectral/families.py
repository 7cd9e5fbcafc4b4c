from src.constants import ModelFamily
from src.errors import InvalidFamilyException
from src.model.spectral_measure import (
    GaussianDensity,
    SechDensity,
    SpectralMeasure,
    UniformDensity,
)
from src.spectral.measure_builder import SpectralMeasureBuilder


def paley_wiener(a: float = 1.0) -> SpectralMeasure:
    return SpectralMeasureBuilder().add_density(UniformDensity(a=a)).build()


def fock_bargmann(a: float = 1.0) -> SpectralMeasure:
    return SpectralMeasureBuilder().add_density(GaussianDensity(a=a)).build()


def sech_spectrum() -> SpectralMeasure:
    return SpectralMeasureBuilder().add_density(SechDensity()).build()


def two_atom(q: float, mass: float = 1.0) -> SpectralMeasure:
    return (
        SpectralMeasureBuilder()
        .add_atom(location=-q, mass=mass / 2.0)
        .add_atom(location=q, mass=mass / 2.0)
        .build()
    )


def atom_sech_mixture(q: float = 1.0, atom_weight: float = 0.5) -> SpectralMeasure:
    return (
        SpectralMeasureBuilder()
        .add_atom(location=-q, mass=atom_weight / 2.0)
        .add_atom(location=q, mass=atom_weight / 2.0)
        .add_density(SechDensity(weight=1.0 - atom_weight))
        .build()
    )


def model_measure(family: ModelFamily, a: float = 1.0) -> SpectralMeasure:
    if family == ModelFamily.PALEY_WIENER:
        return paley_wiener(a)
    elif family == ModelFamily.FOCK_BARGMANN:
        return fock_bargmann(a)
    elif family == ModelFamily.SECH:
        return sech_spectrum()

    raise InvalidFamilyException(f"Unknown model family : {family}")
