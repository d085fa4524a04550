"""Exception hierarchy shared by every module."""


class BisectorError(Exception):
    """Base class for all library errors."""


class DivisionByZero(BisectorError, ZeroDivisionError):
    pass


class ParseError(BisectorError, ValueError):
    def __init__(self, text, position, message="malformed rational"):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class ZeroPolynomial(BisectorError, ValueError):
    pass


class ConstantPolynomial(BisectorError, ValueError):
    pass


class EndpointIsRoot(BisectorError, ValueError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"interval endpoint {point} is a root")


class GeometricRootAnomaly(BisectorError):
    pass


class UnsupportedCoefficients(BisectorError, ValueError):
    pass


class NotPrimitive(BisectorError, ValueError):
    pass


class UnsupportedDegree(BisectorError, ValueError):
    pass


class InvalidLength(BisectorError, ValueError):
    pass


class DegenerateTriangle(BisectorError, ValueError):
    pass


class DegenerateFamily(BisectorError, ValueError):
    pass


class RootMismatch(BisectorError, ValueError):
    pass


class PrecisionExceeded(BisectorError):
    pass
