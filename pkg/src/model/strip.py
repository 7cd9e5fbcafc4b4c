import math

from src.errors import InvalidStripException


class StripSpec:
    def __init__(self, half_width: float, y_min: float, y_max: float) -> None:
        self._half_width = float(half_width)
        self._y_min = float(y_min)
        self._y_max = float(y_max)

        if not self._half_width > 0.0:
            raise InvalidStripException(f"Invalid half width : {half_width}")
        if not self._y_min < self._y_max:
            raise InvalidStripException(
                f"Empty working band : [{self._y_min}, {self._y_max}]"
            )
        if not (-self._half_width < self._y_min and self._y_max < self._half_width):
            raise InvalidStripException(
                f"Working band [{self._y_min}, {self._y_max}] leaves the strip of half width {self._half_width}"
            )

    @classmethod
    def for_band(cls, y_min: float, y_max: float):
        return cls(half_width=math.inf, y_min=y_min, y_max=y_max)

    def get_half_width(self) -> float:
        return self._half_width

    def get_y_min(self) -> float:
        return self._y_min

    def get_y_max(self) -> float:
        return self._y_max

    def reach(self) -> float:
        return max(abs(self._y_min), abs(self._y_max))

    def contains(self, y: float) -> bool:
        return self._y_min <= y <= self._y_max

    def to_dict(self) -> dict:
        return {
            "half_width": self._half_width,
            "y_min": self._y_min,
            "y_max": self._y_max,
        }
