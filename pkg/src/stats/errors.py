from src.errors import GeneralException


class StatsException(GeneralException):
    pass


class OverlappingTilesException(StatsException):
    pass


class TilingGapException(StatsException):
    pass


class BinMismatchException(StatsException):
    pass


class InsufficientTrialsException(StatsException):
    pass
