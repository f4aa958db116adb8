"""The top z-slice of f_w and its syllable product formula.

For w = a^{alpha_1} b^{beta_1} ... a^{alpha_s} b^{beta_s} the coefficient of
z^s in f_w is +-prod E_{|alpha_i|}(x) prod E_{|beta_i|}(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..chebyshev import cheb_second
from ..errors import SliceMismatch
from ..polyring import Poly3, z_slice
from ..words import syllable_form


def quadratic_family_word(m: int) -> str:
    """w_m = a^m b^m (ab)^m, of length 4m."""
    return "a" * m + "b" * m + "ab" * m


def syllable_product(alphas, betas) -> Poly3:
    """prod E_{|alpha_i|}(x) * prod E_{|beta_i|}(y)."""
    px = cheb_second(1)
    for alpha in alphas:
        px = px * cheb_second(abs(alpha))
    py = cheb_second(1)
    for beta in betas:
        py = py * cheb_second(abs(beta))
    return Poly3(
        {(i, j, 0): a * b for i, a in enumerate(px.coeffs) if a for j, b in enumerate(py.coeffs) if b}
    )


@dataclass(frozen=True)
class SliceReport:
    s: int
    D_a: int
    D_b: int
    L_a: int
    kappa_a: int
    kappa_b: int
    top_slice: Poly3
    predicted_slice: Poly3
    sign: int
    cubic_coeff: int | None

    @property
    def support_identity(self) -> bool:
        return self.top_slice.support == (self.kappa_a + 1) * (self.kappa_b + 1)

    @property
    def cubic_lower_bound(self) -> int | None:
        return comb(self.L_a, 3) if self.L_a >= 3 else None


def syllable_slice_report(w: str, f: Poly3) -> SliceReport:
    """Check the top z-slice of ``f = f_w`` against the syllable formula.

    ``w`` must be cyclically reduced and involve both generators.  The sign
    is fixed by the coefficient of x^D_a y^D_b, which is +-1 on both sides.
    Raises :class:`SliceMismatch` if the slice, its support count or the
    cubic coefficient lower bound disagree.
    """
    form = syllable_form(w)
    if form.s < 1:
        raise ValueError(f"{w!r} is a generator power; it has no syllable slice")
    a_abs = [abs(a) for a in form.alphas]
    b_abs = [abs(b) for b in form.betas]
    D_a = sum(m - 1 for m in a_abs)
    D_b = sum(m - 1 for m in b_abs)
    kappa_a = sum((m - 1) // 2 for m in a_abs)
    kappa_b = sum((m - 1) // 2 for m in b_abs)
    L_a = sum(1 for m in a_abs if m >= 3)

    g = z_slice(f, form.s)
    predicted = syllable_product(form.alphas, form.betas)
    sign = g.coeff(D_a, D_b, 0)
    if sign not in (1, -1) or g != predicted * sign:
        raise SliceMismatch(f"top z-slice of f_{w} is not +-prod E: got {g}, expected +-({predicted})")
    if g.support != (kappa_a + 1) * (kappa_b + 1):
        raise SliceMismatch(f"support of g_s is {g.support}, expected {(kappa_a + 1) * (kappa_b + 1)}")

    cubic = None
    if L_a >= 3:
        cubic = f.coeff(D_a - 6, D_b, form.s)
        if abs(cubic) < comb(L_a, 3):
            raise SliceMismatch(f"|cubic coefficient| {abs(cubic)} below binom({L_a}, 3)")
    return SliceReport(form.s, D_a, D_b, L_a, kappa_a, kappa_b, g, predicted, sign, cubic)
