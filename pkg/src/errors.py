class GeneralException(Exception):
    pass


class InvalidKindException(GeneralException):
    pass


class InvalidFamilyException(GeneralException):
    pass


class InvalidEnvConfig(GeneralException):
    pass


class InvalidStripException(GeneralException):
    pass


class AbortException(GeneralException):
    pass


class InvalidConfigException(GeneralException):
    pass
