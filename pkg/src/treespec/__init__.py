"""Exact constructions and certificates for spanning-tree counts."""

from .algebra import A, B, C, D, FeasVec, Mat2
from .graph import MultiGraph, tau, tau_brute
from .witness import OpLetter, WitnessGraph, build, predicted_vector, vector_of

__all__ = [
    "A", "B", "C", "D", "FeasVec", "Mat2",
    "MultiGraph", "tau", "tau_brute",
    "OpLetter", "WitnessGraph", "build", "predicted_vector", "vector_of",
]

__version__ = "0.1.0"
