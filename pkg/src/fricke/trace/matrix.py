"""Trace polynomials from generic matrices over R = Z[x,y,z,zeta]/(zeta^2 - z*zeta + 1).

With

    A = [[x, -1], [1, 0]]        B = [[0, zeta], [zeta - z, y]]

both of determinant one in R, Tr M(w) = f_w(x, y, z) for every word w, and
the zeta-part of the trace vanishes.

:func:`compute_matrix` evaluates the product on dense coefficient arrays.
Right multiplication by a letter matrix only needs monomial shifts and
additions, so each row of M is updated independently.  After a prefix with
``p`` a-type and ``q`` b-type letters the x-degree is at most ``p`` and the
y- and z-degrees at most ``q``; each entry is stored as stride-2 sub-boxes of
that box, one per occupied parity class.  Arrays are numpy object arrays of
Python ints, so arithmetic is exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import CapExceeded, InternalInvariantError
from ..polyring import ZERO, Poly3, R_ONE, RingElem, X, Y, Z, ZETA, lift
from ..words import cyclic_core, free_reduce

DEFAULT_MATRIX_CAP = 1000


@dataclass(frozen=True)
class GenericMatrix:
    """2x2 matrix over R, row-major."""

    a: RingElem
    b: RingElem
    c: RingElem
    d: RingElem

    def __matmul__(self, o: "GenericMatrix") -> "GenericMatrix":
        return GenericMatrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def trace(self) -> RingElem:
        return self.a + self.d

    def det(self) -> RingElem:
        return self.a * self.d - self.b * self.c


IDENTITY = GenericMatrix(R_ONE, RingElem(), RingElem(), R_ONE)
_MINUS_ONE = lift(-1)
_Z = lift(Z)

LETTER_MATRICES = {
    "a": GenericMatrix(lift(X), _MINUS_ONE, R_ONE, RingElem()),
    "A": GenericMatrix(RingElem(), R_ONE, _MINUS_ONE, lift(X)),
    "b": GenericMatrix(RingElem(), ZETA, ZETA - _Z, lift(Y)),
    "B": GenericMatrix(lift(Y), -ZETA, _Z - ZETA, RingElem()),
}


def word_matrix(w: str) -> GenericMatrix:
    """M(w) with sparse entries; slow, used as a reference."""
    m = IDENTITY
    for c in w:
        m = m @ LETTER_MATRICES[c]
    return m


def trace_sparse(w: str) -> RingElem:
    return word_matrix(w).trace()


# -- dense pipeline -----------------------------------------------------------
#
# Under A -> -A or B -> -B the trace changes by the sign of the letter count,
# so every entry of M splits over two complementary (i%2, j%2, k%2) classes.
# A component is a dict {class: array}, where array[i', j', k'] holds the
# coefficient of x^(2i'+a) y^(2j'+b) z^(2k'+c).  Multiplying by x, y or z flips
# one class bit: 0 -> 1 keeps the array, 1 -> 0 offsets it by one slab.


def _extent(cls, bounds):
    return tuple((d - b) // 2 + 1 for d, b in zip(bounds, cls))


def _shift(comp, axis, sign=1):
    out = []
    for cls, arr in comp.items():
        flipped = cls[:axis] + (1 - cls[axis],) + cls[axis + 1:]
        off = (0, 0, 0) if cls[axis] == 0 else tuple(int(a == axis) for a in range(3))
        out.append((flipped, arr, off, sign))
    return out


def _same(comp, sign=1):
    return [(cls, arr, (0, 0, 0), sign) for cls, arr in comp.items()]


def _combine(parts, bounds):
    """Sum signed, offset class arrays into canonical arrays for ``bounds``."""
    groups: dict = {}
    for part in parts:
        if part[1].size:
            groups.setdefault(part[0], []).append(part)
    out = {}
    for cls, items in groups.items():
        shape = _extent(cls, bounds)
        if len(items) == 1:
            _, arr, off, sign = items[0]
            if off == (0, 0, 0) and arr.shape == shape:
                # arrays are never mutated after creation, so sharing is safe
                out[cls] = arr if sign > 0 else -arr
                continue
        acc = np.zeros(shape, dtype=object)
        for _, arr, off, sign in items:
            sl = tuple(slice(o, o + s) for o, s in zip(off, arr.shape))
            if sign > 0:
                acc[sl] += arr
            else:
                acc[sl] -= arr
        out[cls] = acc
    return out


def _step(row, c, bounds):
    """Right-multiply one row (P0, Q0, P1, Q1) by the matrix of letter ``c``.

    Entry ``e`` of the row is P_e + Q_e*zeta; ``bounds`` are the degree bounds
    after the step.
    """
    P0, Q0, P1, Q1 = row
    if c == "a":
        # (m0, m1) -> (x m0 + m1, -m0)
        out = (
            _shift(P0, 0) + _same(P1),
            _shift(Q0, 0) + _same(Q1),
            _same(P0, -1),
            _same(Q0, -1),
        )
    elif c == "A":
        # (m0, m1) -> (-m1, m0 + x m1)
        out = (
            _same(P1, -1),
            _same(Q1, -1),
            _shift(P1, 0) + _same(P0),
            _shift(Q1, 0) + _same(Q0),
        )
    elif c == "b":
        # (m0, m1) -> (m1 (zeta - z), m0 zeta + y m1)
        # (P + Q zeta)(zeta - z) = -zP - Q + P zeta ; (P + Q zeta) zeta = -Q + (P + zQ) zeta
        out = (
            _shift(P1, 2, -1) + _same(Q1, -1),
            _same(P1),
            _shift(P1, 1) + _same(Q0, -1),
            _shift(Q1, 1) + _shift(Q0, 2) + _same(P0),
        )
    else:
        # (m0, m1) -> (y m0 + m1 (z - zeta), -m0 zeta)
        out = (
            _shift(P0, 1) + _shift(P1, 2) + _same(Q1),
            _shift(Q0, 1) + _same(P1, -1),
            _same(Q0),
            _same(P0, -1) + _shift(Q0, 2, -1),
        )
    return tuple(_combine(parts, bounds) for parts in out)


def _dense_trace(w: str):
    """Class-split components (P, Q) with Tr M(w) = P + Q*zeta."""
    one = {(0, 0, 0): np.ones((1, 1, 1), dtype=object)}
    rows = [(one, {}, {}, {}), ({}, {}, one, {})]
    p = q = 0
    for c in w:
        if c in "aA":
            p += 1
        else:
            q += 1
        rows = [_step(row, c, (p, q, q)) for row in rows]
    bounds = (p, q, q)
    P = _combine(_same(rows[0][0]) + _same(rows[1][2]), bounds)
    Q = _combine(_same(rows[0][1]) + _same(rows[1][3]), bounds)
    return P, Q


def _to_poly(comp) -> Poly3:
    terms = {}
    for (a, b, c), arr in comp.items():
        idx = np.nonzero(arr)
        vals = arr[idx].tolist()
        for i, j, k, v in zip(idx[0].tolist(), idx[1].tolist(), idx[2].tolist(), vals):
            terms[(2 * i + a, 2 * j + b, 2 * k + c)] = int(v)
    return Poly3._wrap(terms)


def trace_parts(w: str, cap: int | None = DEFAULT_MATRIX_CAP) -> tuple[Poly3, Poly3]:
    """(P_w, Q_w) with Tr M(w) = P_w + Q_w*zeta, on the cyclic core of ``w``."""
    n = len(free_reduce(w))
    if cap is not None and n > cap:
        raise CapExceeded(f"reduced word length {n} exceeds the matrix cap {cap}")
    core = cyclic_core(w)
    if not core:
        return Poly3.const(2), ZERO
    P, Q = _dense_trace(core)
    return _to_poly(P), _to_poly(Q)


def compute_matrix(w: str, cap: int | None = DEFAULT_MATRIX_CAP) -> Poly3:
    """Fricke polynomial f_w by the generic matrix model.

    >>> str(compute_matrix("aabb"))
    'x*y*z - x^2 - y^2 + 2'
    """
    P, Q = trace_parts(w, cap)
    if Q:
        raise InternalInvariantError(f"zeta-part of Tr M({w!r}) is nonzero: {Q}")
    return P


__all__ = [
    "DEFAULT_MATRIX_CAP",
    "GenericMatrix",
    "IDENTITY",
    "LETTER_MATRICES",
    "compute_matrix",
    "trace_parts",
    "trace_sparse",
    "word_matrix",
]
