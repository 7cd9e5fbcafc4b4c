import math

import numpy as np

from src.constants import Kind
from src.model.realization import MonomialBasisRealization, SincBasisRealization
from src.sampler.errors import SamplerException
from src.sampler.rng import CounterRandomSource

DEFAULT_SINC_MARGIN = 64


def _coefficients(kind: Kind, seed: int, trial: int, count: int) -> np.ndarray:
    source = CounterRandomSource(seed)
    if kind == Kind.GAF:
        return source.complex_normals(trial, count)
    elif kind == Kind.SYMMETRIC:
        return source.real_normals(trial, count)[:, 0].astype(complex)

    raise SamplerException(f"Basis samplers support gaf and symmetric kinds, got {kind}")


def sample_sinc_basis(
    a: float,
    x0: float,
    x1: float,
    kind: Kind,
    seed: int,
    trial: int,
    margin: int = DEFAULT_SINC_MARGIN,
) -> SincBasisRealization:
    """Paley-Wiener sample through sinc(2 a z - n) for the n whose peaks lie near [x0, x1]."""
    first = int(math.floor(2.0 * a * x0)) - margin
    last = int(math.ceil(2.0 * a * x1)) + margin
    indices = np.arange(first, last + 1)

    return SincBasisRealization(
        kind=kind,
        a=a,
        indices=indices,
        coefficients=_coefficients(kind, seed, trial, indices.size),
        seed=seed,
        trial=trial,
    )


def monomial_terms(a: float, radius: float) -> int:
    peak = 2.0 * (a * math.pi * radius) ** 2
    return int(math.ceil(peak + 10.0 * math.sqrt(peak) + 40.0))


def sample_monomial_basis(
    a: float,
    radius: float,
    kind: Kind,
    seed: int,
    trial: int,
) -> MonomialBasisRealization:
    """Fock-Bargmann sample through (b z)^n / sqrt(n!) exp(-a^2 pi^2 z^2), accurate for |z| <= radius."""
    count = monomial_terms(a, radius)

    return MonomialBasisRealization(
        kind=kind,
        a=a,
        coefficients=_coefficients(kind, seed, trial, count),
        seed=seed,
        trial=trial,
    )
