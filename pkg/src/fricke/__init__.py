"""Exact Fricke trace polynomials of words in the free group F(a, b)."""

from .polyring import Poly3, norms, to_json, to_text
from .trace import char_equiv, compute_matrix, compute_recursive, predict_leading
from .words import canonical_key, parse_word

__version__ = "0.1.0"

__all__ = [
    "Poly3",
    "canonical_key",
    "char_equiv",
    "compute_matrix",
    "compute_recursive",
    "norms",
    "parse_word",
    "predict_leading",
    "to_json",
    "to_text",
]
