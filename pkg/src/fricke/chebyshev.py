"""Integer Chebyshev families and Lucas numbers.

``cheb_first(n)`` is P_n(x) = 2 T_n(x/2), the trace of the n-th power of a
determinant-one matrix with trace x.  ``cheb_second(m)`` is
E_m(t) = U_{m-1}(t/2), so that X^m = E_m(tr X) X - E_{m-1}(tr X) I.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polyring import Poly3


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate integer polynomial, coefficients low to high."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def support(self) -> int:
        return sum(1 for c in self.coeffs if c)

    @property
    def l1(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    @property
    def linf(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __call__(self, t: int, modulus: int | None = None) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
            if modulus is not None:
                acc %= modulus
        return acc

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    def as_poly3(self, var: str = "x") -> Poly3:
        """Embed as a polynomial in one of x, y, z."""
        axis = "xyz".index(var)
        terms = {}
        for d, c in enumerate(self.coeffs):
            e = [0, 0, 0]
            e[axis] = d
            terms[tuple(e)] = c
        return Poly3(terms)


def _step(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # t*p - q
    out = [0] + list(p)
    for i, c in enumerate(q):
        out[i] -= c
    return tuple(out)


@lru_cache(maxsize=None)
def _first(n: int) -> tuple[int, ...]:
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    prev, cur = (2,), (0, 1)
    for _ in range(n - 1):
        prev, cur = cur, _step(cur, prev)
    return cur


@lru_cache(maxsize=None)
def _second(m: int) -> tuple[int, ...]:
    if m == 0:
        return ()
    prev, cur = (), (1,)
    for _ in range(m - 1):
        prev, cur = cur, _step(cur, prev)
    return cur


def cheb_first(n: int) -> UniPoly:
    """P_0 = 2, P_1 = x, P_{n+1} = x P_n - P_{n-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return UniPoly(_first(n))


def cheb_second(m: int) -> UniPoly:
    """E_0 = 0, E_1 = 1, E_{m+1} = t E_m - E_{m-1}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return UniPoly(_second(m))


def lucas(n: int) -> int:
    """Lucas numbers L_1 = 1, L_2 = 3, L_{n+1} = L_n + L_{n-1}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a, b = 2, 1  # L_0, L_1
    for _ in range(n - 1):
        a, b = b, a + b
    return b
