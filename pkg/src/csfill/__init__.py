"""Culler-Shalen seminorms and finite Dehn fillings: exact computations."""
from .exceptions import CSFillError, PreconditionError, SchemaError
from .lattice import (LONGITUDE, MERIDIAN, PeripheralClass, Slope, distance,
                      h1_filling_order, parse_slope, slope_of)
from .seminorm import (CullerShalenSeminorm, IdealFunctional, classify, evaluate,
                       fundamental_ball, minimal_value)
from .filling_bounds import (BoundContext, FiniteType, distance_bound, norm_bound,
                             torus_knot_surgery, triangle_type)

__version__ = "0.1.0"

__all__ = [
    "CSFillError", "PreconditionError", "SchemaError",
    "PeripheralClass", "Slope", "MERIDIAN", "LONGITUDE",
    "distance", "slope_of", "parse_slope", "h1_filling_order",
    "CullerShalenSeminorm", "IdealFunctional", "classify", "evaluate",
    "minimal_value", "fundamental_ball",
    "BoundContext", "FiniteType", "norm_bound", "distance_bound",
    "triangle_type", "torus_knot_surgery",
]
