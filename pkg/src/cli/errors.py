from src.errors import GeneralException


class CommandException(GeneralException):
    pass


class MissingMeasureException(CommandException):
    pass


class ConfigDigestMismatchException(CommandException):
    pass


class VersionMismatchException(CommandException):
    pass


class ReplayMismatchException(CommandException):
    pass


class ExportException(CommandException):
    pass
