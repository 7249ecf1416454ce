"""Shared exception types, one per contract failure mode."""

from .algebraic import ExtensionTooDeep, OrbitSplit
from .intervals import PrecisionExhausted
from .unipoly import EndpointRoot

__all__ = [
    "CommonComponent",
    "CurveContracted",
    "DegenerateEpsilon",
    "DegenerateImage",
    "EndpointRoot",
    "EvenMultiplicity",
    "ExtensionTooDeep",
    "IdentityFails",
    "ImageInLine",
    "NotAnRSE",
    "NotBirational",
    "NotDivisible",
    "NotIrreducible",
    "NotMinusOne",
    "NotRational",
    "OrbitSplit",
    "PairNotDisjoint",
    "PointNotOnCurve",
    "PointNotSingular",
    "PrecisionExhausted",
    "RankMismatch",
    "SquarefreeRequired",
    "Unclassifiable",
    "WrongRing",
]


class SquarefreeRequired(Exception):
    pass


class CommonComponent(Exception):
    pass


class PointNotOnCurve(Exception):
    pass


class PointNotSingular(Exception):
    pass


class NotIrreducible(Exception):
    pass


class NotRational(Exception):
    pass


class NotAnRSE(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class Unclassifiable(Exception):
    pass


class DegenerateImage(Exception):
    pass


class ImageInLine(Exception):
    pass


class NotBirational(Exception):
    pass


class NotDivisible(Exception):
    pass


class IdentityFails(Exception):
    def __init__(self, residual):
        super().__init__(f"identity fails; residual {residual}")
        self.residual = residual


class CurveContracted(Exception):
    pass


class RankMismatch(Exception):
    pass


class NotMinusOne(Exception):
    pass


class PairNotDisjoint(Exception):
    pass


class EvenMultiplicity(Exception):
    pass


class DegenerateEpsilon(Exception):
    pass


class WrongRing(Exception):
    pass
