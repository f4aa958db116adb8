"""Degree and leading-term predictions from cyclic pair counts alone."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidInput
from ..polyring import Poly3
from ..words import cyclic_core, is_cyclically_reduced, pair_counts, syllable_form


@dataclass(frozen=True)
class LeadingTerm:
    degree: int
    exponents: tuple[int, int, int]
    sign: int

    def as_poly(self) -> Poly3:
        return Poly3.monomial(*self.exponents, c=self.sign)


def predict_leading(w: str) -> LeadingTerm:
    """Top homogeneous part of f_w for a nontrivial cyclically reduced word.

    It is the single monomial (-1)^(N_ab + N_ba) x^(m_a - R) y^(m_b - R) z^R,
    so deg f_w = n - R.
    """
    if not w or not is_cyclically_reduced(w):
        raise ValueError(f"{w!r} is not a nontrivial cyclically reduced word")
    pc = pair_counts(w)
    R = pc.R
    sign = -1 if (pc[("a", "b")] + pc[("b", "a")]) % 2 else 1
    exps = (pc.m_a - R, pc.m_b - R, R)
    return LeadingTerm(len(w) - R, exps, sign)


def predict_degree(w: str) -> int:
    """deg f_w for any word (the trivial word has f = 2, degree 0)."""
    core = cyclic_core(w)
    if not core:
        return 0
    return len(core) - pair_counts(core).R


def predict_positive_degree(w: str) -> int:
    """n - s for a positive word with 2s syllables; n for a generator power."""
    if not w:
        raise InvalidInput("positive word must be nonempty")
    if any(c not in "ab" for c in w):
        raise InvalidInput(f"{w!r} is not a positive word")
    form = syllable_form(w)
    if form.pure_power is not None:
        return len(w)
    return len(w) - form.s


def top_part(f: Poly3) -> Poly3:
    """Terms of maximal total degree."""
    d = f.degree
    return Poly3({e: c for e, c in f.terms.items() if sum(e) == d})
