"""Exception types shared across the package."""


class HeylandError(Exception):
    """Base class for all errors raised by this package."""


# geometry

class DegenerateInput(HeylandError):
    """Two points that must be distinct coincide."""


class NoIntersection(HeylandError):
    """The requested intersection does not exist."""


class InfiniteIntersections(HeylandError):
    """The requested intersection is a whole line."""


class CollinearPoints(HeylandError):
    """Three points meant to define a circle lie on one line."""


# diagram construction

class IllPosedConstruction(HeylandError):
    """The diagram construction has no solution for these test points."""


class DegenerateChord(IllPosedConstruction):
    """Torque chord endpoints coincide."""


class NotOnCircle(HeylandError):
    """Operating point does not lie on the diagram circle."""


class OutsideMotoringArc(HeylandError):
    """Operating point lies outside the motoring arc."""


# circuit model / fractional linear maps

class SingularNetwork(HeylandError):
    """Network reduction hit a zero impedance denominator."""


class InvalidSlip(HeylandError):
    """Slip value outside the admissible domain (s = 0)."""


class DegenerateMap(HeylandError):
    """Fractional linear map with zero determinant."""


# configuration files

class InputFileError(HeylandError):
    """Base class for configuration-file problems."""


class MissingKey(InputFileError):
    def __init__(self, key: str):
        super().__init__(f"missing required key '{key}'")
        self.key = key


class MalformedValue(InputFileError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class InvariantViolation(InputFileError):
    def __init__(self, key: str, message: str):
        super().__init__(f"'{key}' {message}")
        self.key = key
