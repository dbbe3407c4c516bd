"""Reed-Solomon-type codes indexed by the q-cyclotomic orbits of Z/(q^m - 1)."""

from .code import CodeSpec
from .decoder import DecodeResult, ErrorWord, KeyEquationSolution
from .estimator import OrbitCode
from .exceptions import (
    CodeSpecError,
    DecodeFailure,
    FieldError,
    InternalInconsistency,
    OrbitCodeError,
    PolynomialError,
)
from .galois import FieldParams, TowerField, build_tower
from .orbits import LocationSet, Orbit, enumerate_orbits
from .polyring import PolyF

__version__ = "0.1.0"

__all__ = [
    "CodeSpec",
    "CodeSpecError",
    "DecodeFailure",
    "DecodeResult",
    "ErrorWord",
    "FieldError",
    "FieldParams",
    "InternalInconsistency",
    "KeyEquationSolution",
    "LocationSet",
    "Orbit",
    "OrbitCode",
    "OrbitCodeError",
    "PolyF",
    "PolynomialError",
    "TowerField",
    "build_tower",
    "enumerate_orbits",
]
