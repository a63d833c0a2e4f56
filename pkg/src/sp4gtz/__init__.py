"""GTZ bases of sp4 realized by Gamma-series."""
from .diagrams import GTZDiagram, HighestWeight, enumerate_diagrams
from .kernels import BACKEND
from .poly import LABELS, DetLabel, Poly, Rational, canonicalize_label

__all__ = [
    "BACKEND", "DetLabel", "GTZDiagram", "HighestWeight", "LABELS", "Poly", "Rational",
    "canonicalize_label", "enumerate_diagrams",
]
__version__ = "0.1.0"
