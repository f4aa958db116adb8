"""Exact integer polynomials in x, y, z and the ring Z[x,y,z,zeta]/(zeta^2 - z*zeta + 1).

:class:`Poly3` is a sparse map from exponent triples to nonzero Python ints.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping


Exp = tuple[int, int, int]


class Poly3:
    """Immutable sparse trivariate integer polynomial."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exp, int] = {}
        for e, c in items:
            if c:
                if min(e) < 0:
                    raise ValueError(f"negative exponent in {e}")
                clean[tuple(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Exp, int]) -> "Poly3":
        # trusted constructor: terms already normalised
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Poly3":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, k: int, c: int = 1) -> "Poly3":
        return cls({(i, j, k): c})

    @property
    def terms(self) -> Mapping[Exp, int]:
        return MappingProxyType(self._terms)

    def coeff(self, i: int, j: int, k: int) -> int:
        return self._terms.get((i, j, k), 0)

    @property
    def support(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 stands for minus infinity (the zero polynomial)."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly3.const(other)
        if not isinstance(other, Poly3):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly3({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __neg__(self) -> "Poly3":
        return Poly3._wrap({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "Poly3":
        if isinstance(other, int):
            other = Poly3.const(other)
        if not isinstance(other, Poly3):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly3._wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly3":
        if isinstance(other, int):
            other = Poly3.const(other)
        if not isinstance(other, Poly3):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly3._wrap(out)

    def __rsub__(self, other) -> "Poly3":
        return (-self) + other

    def __mul__(self, other) -> "Poly3":
        if isinstance(other, int):
            if other == 0:
                return Poly3()
            return Poly3._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Poly3):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def shift(self, di: int = 0, dj: int = 0, dk: int = 0) -> "Poly3":
        """Multiply by the monomial x^di y^dj z^dk."""
        return Poly3._wrap({(i + di, j + dj, k + dk): c for (i, j, k), c in self._terms.items()})

    def __pow__(self, n: int) -> "Poly3":
        result = Poly3.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


X = Poly3.monomial(1, 0, 0)
Y = Poly3.monomial(0, 1, 0)
Z = Poly3.monomial(0, 0, 1)
ONE = Poly3.const(1)
ZERO = Poly3()


# -- multiplication ---------------------------------------------------------

def _mul_schoolbook(f: dict[Exp, int], g: dict[Exp, int]) -> dict[Exp, int]:
    if len(f) > len(g):
        f, g = g, f
    out: dict[Exp, int] = {}
    get = out.get
    for (a, b, c), u in f.items():
        for (d, e, h), v in g.items():
            key = (a + d, b + e, c + h)
            out[key] = get(key, 0) + u * v
    return {e: c for e, c in out.items() if c}


def poly_mul(f: Poly3, g: Poly3) -> Poly3:
    if not f._terms or not g._terms:
        return Poly3()
    return Poly3._wrap(_mul_schoolbook(f._terms, g._terms))


# -- quotient ring R = Z[x,y,z,zeta]/(zeta^2 - z zeta + 1) --------------------

@dataclass(frozen=True)
class RingElem:
    """``P + Q*zeta`` in normal form (zeta-degree at most one)."""

    P: Poly3 = ZERO
    Q: Poly3 = ZERO

    def __add__(self, other: "RingElem") -> "RingElem":
        return RingElem(self.P + other.P, self.Q + other.Q)

    def __sub__(self, other: "RingElem") -> "RingElem":
        return RingElem(self.P - other.P, self.Q - other.Q)

    def __neg__(self) -> "RingElem":
        return RingElem(-self.P, -self.Q)

    def __mul__(self, other: "RingElem") -> "RingElem":
        return ring_mul(self, other)

    def is_zero(self) -> bool:
        return self.P.is_zero() and self.Q.is_zero()


def ring_mul(u: RingElem, v: RingElem) -> RingElem:
    # zeta^2 = z*zeta - 1
    qq = u.Q * v.Q
    return RingElem(u.P * v.P - qq, u.P * v.Q + u.Q * v.P + qq.shift(0, 0, 1))


ZETA = RingElem(ZERO, ONE)
R_ONE = RingElem(ONE, ZERO)


def lift(f: Poly3 | int) -> RingElem:
    return RingElem(f if isinstance(f, Poly3) else Poly3.const(f), ZERO)


# -- evaluation, slices and norms -------------------------------------------

def evaluate(f: Poly3, x0: int, y0: int, z0: int, modulus: int | None = None) -> int:
    """Evaluate ``f`` at an integer point, optionally modulo a prime."""
    terms = f._terms
    if not terms:
        return 0
    if modulus is not None:
        x0, y0, z0 = x0 % modulus, y0 % modulus, z0 % modulus
    # nested Horner: x outermost, then y, then z
    by_i: dict[int, dict[int, dict[int, int]]] = {}
    for (i, j, k), c in terms.items():
        by_i.setdefault(i, {}).setdefault(j, {})[k] = c

    def horner(coeffs: dict[int, int | object], t: int, inner) -> int:
        acc = 0
        top = max(coeffs)
        for d in range(top, -1, -1):
            acc = acc * t
            if d in coeffs:
                acc += inner(coeffs[d])
            if modulus is not None:
                acc %= modulus
        return acc

    def in_z(ks):
        return horner(ks, z0, lambda c: c)

    def in_y(js):
        return horner(js, y0, in_z)

    return horner(by_i, x0, in_y)


def z_slice(f: Poly3, k: int) -> Poly3:
    """Coefficient of z^k, as a polynomial in x and y (all exponents k = 0)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Poly3._wrap({(i, j, 0): c for (i, j, kk), c in f._terms.items() if kk == k})


def z_degree(f: Poly3) -> int:
    return max((e[2] for e in f._terms), default=-1)


def bit(m: int) -> int:
    return abs(m).bit_length()


@dataclass(frozen=True)
class NormReport:
    degree: int
    l1: int
    linf: int
    support: int
    bit1: int
    bitinf: int


def norms(f: Poly3) -> NormReport:
    cs = f._terms.values()
    if not cs:
        return NormReport(-1, 0, 0, 0, 0, 0)
    abs_cs = [abs(c) for c in cs]
    bits = [c.bit_length() for c in abs_cs]
    return NormReport(f.degree, sum(abs_cs), max(abs_cs), len(abs_cs), sum(bits), max(bits))


# -- dense view ---------------------------------------------------------------

def dense_size(cap: int) -> int:
    """Number of monomials of total degree at most ``cap``."""
    return comb(cap + 3, 3)


def dense_index(i: int, j: int, k: int) -> int:
    """Position of x^i y^j z^k in the dense layout.

    Monomials are ordered by total degree, then lexicographically by (i, j, k).
    """
    d = i + j + k
    return comb(d + 2, 3) + i * (d + 1) - i * (i - 1) // 2 + j


def to_dense(f: Poly3, cap: int) -> list[int]:
    if f.degree > cap:
        raise OverflowError(f"degree {f.degree} exceeds dense cap {cap}")
    out = [0] * dense_size(cap)
    for (i, j, k), c in f._terms.items():
        out[dense_index(i, j, k)] = c
    return out


def from_dense(coeffs: list[int], cap: int) -> Poly3:
    if len(coeffs) != dense_size(cap):
        raise ValueError("dense array has the wrong length for this cap")
    terms = {}
    idx = 0
    for d in range(cap + 1):
        for i in range(d + 1):
            for j in range(d - i + 1):
                c = coeffs[idx]
                if c:
                    terms[(i, j, d - i - j)] = c
                idx += 1
    return Poly3._wrap(terms)


# -- serialisation ------------------------------------------------------------

def canonical_order(f: Poly3) -> list[tuple[Exp, int]]:
    """Terms sorted by total degree descending, then (i, j, k) descending."""
    return sorted(f._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)


def _monomial_text(e: Exp) -> str:
    parts = []
    for var, p in zip("xyz", e):
        if p == 1:
            parts.append(var)
        elif p > 1:
            parts.append(f"{var}^{p}")
    return "*".join(parts)


def to_text(f: Poly3) -> str:
    """Canonical human-readable form, e.g. ``-x*y*z + x^2 + y^2 + z^2 - 2``."""
    terms = canonical_order(f)
    if not terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(terms):
        mono = _monomial_text(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def to_dict(f: Poly3) -> dict:
    rep = norms(f)
    return {
        "terms": [{"i": i, "j": j, "k": k, "c": str(c)} for (i, j, k), c in canonical_order(f)],
        "degree": rep.degree,
        "support": rep.support,
        "l1": str(rep.l1),
        "linf": str(rep.linf),
        "bit1": rep.bit1,
    }


def to_json(f: Poly3) -> str:
    return json.dumps(to_dict(f))


def from_json(text: str | dict) -> Poly3:
    data = json.loads(text) if isinstance(text, str) else text
    return Poly3({(t["i"], t["j"], t["k"]): int(t["c"]) for t in data["terms"]})


_POLY_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:\s*\*\s*)?)?((?:[xyz](?:\^\d+)?)(?:\s*\*\s*[xyz](?:\^\d+)?)*)?\s*"
)


def parse_poly(text: str) -> Poly3:
    """Parse the output of :func:`to_text` (and similar hand-written input)."""
    text = text.strip()
    if text == "0":
        return Poly3()
    terms: dict[Exp, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _POLY_TERM.match(text, pos)
        sign, num, mono = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (num is None and not mono) or (sign is None and not first):
            raise ValueError(f"cannot parse polynomial near position {pos}: {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = [0, 0, 0]
        if mono:
            for factor in mono.split("*"):
                factor = factor.strip()
                var, _, p = factor.partition("^")
                e["xyz".index(var)] += int(p) if p else 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
        pos = m.end()
        first = False
    return Poly3(terms)
