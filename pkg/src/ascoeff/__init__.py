"""Exact coefficients of the transformed Al-Salam-Chihara polynomials."""
from .param_ring import ParamPoly, ParseError, RationalPoint, q_binomial, q_int
from .recurrence import g
from .xy_ring import XYPoly, specialize_xy

__version__ = "0.1.0"

__all__ = ["ParamPoly", "ParseError", "RationalPoint", "XYPoly", "g", "q_binomial",
           "q_int", "specialize_xy"]
