"""Embedded identity suites run by ``fricke selftest``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .chebyshev import cheb_first, cheb_second, lucas
from .polyring import Poly3, norms, parse_poly, z_slice
from .randmodels import count_cyclic_words
from .trace import compute_matrix, compute_recursive, quadratic_family_word
from .words import free_reduce

# every freely reduced word of length <= 2 plus both commutators
BASE_CASES: dict[str, str] = {
    "": "2",
    "a": "x",
    "A": "x",
    "b": "y",
    "B": "y",
    "aa": "x^2 - 2",
    "AA": "x^2 - 2",
    "bb": "y^2 - 2",
    "BB": "y^2 - 2",
    "ab": "z",
    "ba": "z",
    "AB": "z",
    "BA": "z",
    "aB": "x*y - z",
    "Ba": "x*y - z",
    "Ab": "x*y - z",
    "bA": "x*y - z",
    "abAB": "x^2 + y^2 + z^2 - x*y*z - 2",
    "aBAb": "x^2 + y^2 + z^2 - x*y*z - 2",
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""


def _base() -> tuple[int, str]:
    for w, text in BASE_CASES.items():
        want = parse_poly(text)
        for engine in (compute_matrix, compute_recursive):
            got = engine(w)
            if got != want:
                return 0, f"{engine.__name__}({w!r}) = {got}, expected {text}"
    return len(BASE_CASES), ""


def _chebyshev() -> tuple[int, str]:
    for n in range(1, 41):
        f = compute_matrix("a" * n)
        if f != cheb_first(n).as_poly3("x"):
            return 0, f"f_(a^{n}) differs from cheb_first({n})"
        if norms(f).l1 != lucas(n):
            return 0, f"l1(f_(a^{n})) != L_{n}"
    return 40, ""


def _slice() -> tuple[int, str]:
    for m in range(1, 11):
        f = compute_matrix(quadratic_family_word(m))
        e = cheb_second(m)
        want = Poly3({(i, j, 0): a * b for i, a in enumerate(e.coeffs) if a for j, b in enumerate(e.coeffs) if b})
        if z_slice(f, m + 1) != want:
            return 0, f"[z^{m + 1}] f_(w_{m}) != E_{m}(x) E_{m}(y)"
    return 10, ""


def _rivin() -> tuple[int, str]:
    for n in range(1, 11):
        got = count_cyclic_words(n)
        if got != 3**n + 2 + (-1) ** n:
            return 0, f"count_cyclic_words({n}) = {got}"
    return 10, ""


def _cross_engine() -> tuple[int, str]:
    count = 0
    memo: dict = {}
    for n in range(7):
        for letters in itertools.product("aAbB", repeat=n):
            w = "".join(letters)
            if free_reduce(w) != w:
                continue
            count += 1
            if compute_matrix(w) != compute_recursive(w, memo):
                return 0, f"engines disagree on {w!r}"
    return count, ""


SUITES: dict[str, Callable[[], tuple[int, str]]] = {
    "base": _base,
    "chebyshev": _chebyshev,
    "slice": _slice,
    "rivin": _rivin,
    "cross-engine": _cross_engine,
}


def run_suite(name: str) -> SuiteResult:
    try:
        checked, detail = SUITES[name]()
    except Exception as exc:  # a crash counts as a failure of that suite
        return SuiteResult(name, False, 0, f"{type(exc).__name__}: {exc}")
    return SuiteResult(name, not detail, checked, detail)


def run_all() -> list[SuiteResult]:
    return [run_suite(name) for name in SUITES]
