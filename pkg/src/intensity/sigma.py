from typing import Tuple

from src.constants import Tolerances
from src.intensity.errors import InvalidKernelException


def sigma_eigenvalues(k_zz: float, k_zzbar: complex) -> Tuple[float, float]:
    k_zz = float(k_zz)
    modulus = abs(k_zzbar)

    if k_zz < modulus - Tolerances.KERNEL_SLACK * max(k_zz, 1.0):
        raise InvalidKernelException(
            f"K(z,z)={k_zz} is smaller than |K(z,conj z)|={modulus}"
        )

    return (k_zz + modulus) / 2.0, max((k_zz - modulus) / 2.0, 0.0)


def sigma_trace_determinant(first: float, second: float) -> Tuple[float, float]:
    return first + second, first * second
