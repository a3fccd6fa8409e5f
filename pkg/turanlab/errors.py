"""
Domain errors for turanlab
Each error carries a machine-readable name used by the command line
"""


class TuranLabError(Exception):
    """Base class for every error the library raises on purpose"""

    name = "TuranLabError"

    def to_dict(self):
        return {"error": self.name, "message": str(self)}


class MalformedGraph6(TuranLabError):
    """Input is not a valid graph6 record"""

    name = "MalformedGraph6"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

    def to_dict(self):
        data = super().to_dict()
        if self.line is not None:
            data["line"] = self.line
        return data


class TooLarge(TuranLabError):
    """Requested size exceeds a documented limit"""

    name = "TooLarge"


class Overflow(TuranLabError):
    """An exact count does not fit in a signed 64-bit word"""

    name = "Overflow"


class NotKkFree(TuranLabError):
    """A graph required to be K_k-free contains K_k"""

    name = "NotKkFree"


class NoValidM(TuranLabError):
    """No catalogued m satisfies the supersaturation selection rule"""

    name = "NoValidM"


class NonTermination(TuranLabError):
    """An iterative procedure exceeded its step cap"""

    name = "NonTermination"


class IoFailure(TuranLabError):
    """Reading or writing persistent storage failed"""

    name = "IoFailure"


class DegeneratePair(TuranLabError):
    """chi(H) >= chi(F): density brackets are not meaningful"""

    name = "DegeneratePair"


class InvalidArgument(TuranLabError):
    """An argument is outside the documented range"""

    name = "InvalidArgument"
