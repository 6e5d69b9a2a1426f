"""Pairing group backends: an exponent-trace mock and a supersingular curve."""

from .base import BilinearGroup, GElement, GTElement
from .curve import CurveGroup, CurveParams, make_curve_group
from .mock import MockGroup, make_mock_group

__all__ = [
    "BilinearGroup",
    "GElement",
    "GTElement",
    "MockGroup",
    "make_mock_group",
    "CurveGroup",
    "CurveParams",
    "make_curve_group",
]
