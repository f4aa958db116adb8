"""Independent checks on computed trace polynomials.

* :func:`constant_term_oracle` evaluates the word in the quaternion group
  with a -> i, b -> j; traces of +-1 are +-2 and of the other six are 0.
* :func:`modular_check` reruns the generic matrix product at random scalar
  points of F_p[zeta]/(zeta^2 - z0*zeta + 1) and compares with f evaluated
  mod p, a Schwartz-Zippel style polynomial identity test.
"""

from __future__ import annotations

import random

from ..polyring import Poly3, evaluate
from .matrix import DEFAULT_MATRIX_CAP, compute_matrix

MODULUS = (1 << 61) - 1
DEFAULT_POINTS = 8

# unit codes 0..3 = 1, i, j, k; product table gives (sign, unit)
_Q8_UNIT_MUL = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)
_Q8_LETTER = {"a": (1, 1), "A": (-1, 1), "b": (1, 2), "B": (-1, 2)}


def q8_image(w: str) -> tuple[int, int]:
    """Image of ``w`` in Q8 as (sign, unit) with unit in 0..3 = 1, i, j, k."""
    sign, unit = 1, 0
    for c in w:
        ls, lu = _Q8_LETTER[c]
        ps, unit = _Q8_UNIT_MUL[unit][lu]
        sign *= ls * ps
    return sign, unit


def constant_term_oracle(w: str) -> int:
    """f_w(0, 0, 0), read off from the quaternion image of ``w``."""
    sign, unit = q8_image(w)
    return 2 * sign if unit == 0 else 0


def _scalar_trace(w: str, x0: int, y0: int, z0: int, p: int) -> tuple[int, int]:
    """Tr M(w) in F_p[zeta]/(zeta^2 - z0 zeta + 1) as (u, v) meaning u + v*zeta."""

    def mul(s, t):
        u1, v1 = s
        u2, v2 = t
        vv = v1 * v2
        return (u1 * u2 - vv) % p, (u1 * v2 + v1 * u2 + z0 * vv) % p

    def add(s, t):
        return (s[0] + t[0]) % p, (s[1] + t[1]) % p

    zero, one, minus_one = (0, 0), (1, 0), (p - 1, 0)
    xs, ys = (x0 % p, 0), (y0 % p, 0)
    zeta = (0, 1)
    mats = {
        "a": (xs, minus_one, one, zero),
        "A": (zero, one, minus_one, xs),
        "b": (zero, zeta, ((-z0) % p, 1), ys),
        "B": (ys, (0, p - 1), (z0 % p, p - 1), zero),
    }
    a, b, c, d = one, zero, zero, one
    for letter in w:
        ga, gb, gc, gd = mats[letter]
        a, b, c, d = (
            add(mul(a, ga), mul(b, gc)),
            add(mul(a, gb), mul(b, gd)),
            add(mul(c, ga), mul(d, gc)),
            add(mul(c, gb), mul(d, gd)),
        )
    return add(a, d)


def modular_check(
    w: str,
    f: Poly3,
    seed: int = 0,
    points: int = DEFAULT_POINTS,
    modulus: int = MODULUS,
) -> bool:
    """True iff ``f`` agrees with Tr M(w) at ``points`` random points mod p.

    Also fails if the zeta-component of the scalar trace is nonzero.
    """
    rng = random.Random(seed)
    for _ in range(points):
        x0, y0, z0 = (rng.randrange(modulus) for _ in range(3))
        u, v = _scalar_trace(w, x0, y0, z0, modulus)
        if v != 0 or u != evaluate(f, x0, y0, z0, modulus):
            return False
    return True


def check_at(w: str, f: Poly3, point: tuple[int, int, int], modulus: int = MODULUS) -> bool:
    """Single-point version of :func:`modular_check` at a chosen point."""
    x0, y0, z0 = point
    u, v = _scalar_trace(w, x0, y0, z0, modulus)
    return v == 0 and u == evaluate(f, x0, y0, z0, modulus)


def char_equiv(v: str, w: str, cap: int | None = DEFAULT_MATRIX_CAP) -> bool:
    """SL(2,C)-character equivalence, decided by comparing f_v and f_w."""
    return compute_matrix(v, cap) == compute_matrix(w, cap)
