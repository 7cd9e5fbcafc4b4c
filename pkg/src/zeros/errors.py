from src.errors import GeneralException


class ZeroLocatorException(GeneralException):
    pass


class BoundaryZeroException(ZeroLocatorException):
    pass


class WindingException(ZeroLocatorException):
    pass


class CertificateException(ZeroLocatorException):
    pass


class SplitException(ZeroLocatorException):
    pass


class RealScanException(ZeroLocatorException):
    pass
