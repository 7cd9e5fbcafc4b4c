from typing import List, Optional

from src.spectral.errors import InvalidSpectralMeasureException


class ValidationReport:
    def __init__(
        self,
        valid: bool,
        symmetric: bool,
        degenerate: bool,
        reach: float,
        half_width: float,
        exponential_moment: Optional[float],
        messages: List[str],
    ) -> None:
        self._valid = valid
        self._symmetric = symmetric
        self._degenerate = degenerate
        self._reach = reach
        self._half_width = half_width
        self._exponential_moment = exponential_moment
        self._messages = messages

    def is_valid(self) -> bool:
        return self._valid

    def is_symmetric(self) -> bool:
        return self._symmetric

    def is_degenerate(self) -> bool:
        return self._degenerate

    def get_reach(self) -> float:
        return self._reach

    def get_half_width(self) -> float:
        return self._half_width

    def get_exponential_moment(self) -> Optional[float]:
        return self._exponential_moment

    def get_messages(self) -> List[str]:
        return self._messages

    def raise_for_invalid(self) -> None:
        if not self._valid:
            raise InvalidSpectralMeasureException("; ".join(self._messages))

    def to_dict(self) -> dict:
        return {
            "valid": self._valid,
            "symmetric": self._symmetric,
            "degenerate": self._degenerate,
            "reach": self._reach,
            "half_width": self._half_width,
            "exponential_moment": self._exponential_moment,
            "messages": self._messages,
        }
