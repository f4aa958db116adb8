"""Fricke trace polynomials: two engines, predictors and oracles."""

from .matrix import (
    DEFAULT_MATRIX_CAP,
    GenericMatrix,
    LETTER_MATRICES,
    compute_matrix,
    trace_parts,
    trace_sparse,
    word_matrix,
)
from .oracles import MODULUS, char_equiv, check_at, constant_term_oracle, modular_check, q8_image
from .predict import LeadingTerm, predict_degree, predict_leading, predict_positive_degree, top_part
from .recursive import BASE_TABLE, DEFAULT_RECURSIVE_CAP, compute_recursive, split_point
from .slices import SliceReport, quadratic_family_word, syllable_product, syllable_slice_report

__all__ = [
    "BASE_TABLE",
    "DEFAULT_MATRIX_CAP",
    "DEFAULT_RECURSIVE_CAP",
    "GenericMatrix",
    "LETTER_MATRICES",
    "LeadingTerm",
    "MODULUS",
    "SliceReport",
    "char_equiv",
    "check_at",
    "compute_matrix",
    "compute_recursive",
    "constant_term_oracle",
    "modular_check",
    "predict_degree",
    "predict_leading",
    "predict_positive_degree",
    "q8_image",
    "quadratic_family_word",
    "split_point",
    "syllable_product",
    "syllable_slice_report",
    "top_part",
    "trace_parts",
    "trace_sparse",
    "word_matrix",
]
