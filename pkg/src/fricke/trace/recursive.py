"""Fricke polynomials through the trace identity Tr(UV) + Tr(UV^-1) = Tr U Tr V.

For a cyclically reduced word with a repeated letter s, rotate to
w = s P s Q; then f_w = f_{sP} f_{sQ} - f_{P Q^-1}.  Words of cyclic length
at most two come from a fixed table, and the only repeat-free word of length
three or more is (up to symmetry) the commutator.

Results are memoised by :func:`~fricke.words.canonical_key`, which is sound
because f_w is invariant under conjugation and inversion.
"""

from __future__ import annotations

from ..errors import CapExceeded
from ..polyring import Poly3
from ..words import canonical_key, free_reduce, invert

DEFAULT_RECURSIVE_CAP = 60

# keys are canonical_key outputs, so one entry covers every rotation/inverse
BASE_TABLE: dict[str, Poly3] = {
    "": Poly3.const(2),
    "a": Poly3.monomial(1, 0, 0),
    "b": Poly3.monomial(0, 1, 0),
    "aa": Poly3({(2, 0, 0): 1, (0, 0, 0): -2}),
    "bb": Poly3({(0, 2, 0): 1, (0, 0, 0): -2}),
    "ab": Poly3.monomial(0, 0, 1),
    "aB": Poly3({(1, 1, 0): 1, (0, 0, 1): -1}),
}

COMMUTATOR = Poly3({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (1, 1, 1): -1, (0, 0, 0): -2})

SPLIT_ORDER = "aAbB"


def split_point(w: str) -> tuple[str, str, str] | None:
    """Choose the split ``w ~ s P s Q`` used by the recursion.

    Takes the first letter in the order a, A, b, B occurring at least twice,
    rotates its first occurrence to the front and cuts at the second one.
    Returns ``(s, P, Q)`` or ``None`` when no letter repeats.
    """
    for s in SPLIT_ORDER:
        first = w.find(s)
        if first < 0:
            continue
        second = w.find(s, first + 1)
        if second < 0:
            continue
        rotated = w[first:] + w[:first]
        cut = second - first
        return s, rotated[1:cut], rotated[cut + 1:]
    return None


def _f(w: str, memo: dict[str, Poly3]) -> Poly3:
    key = canonical_key(w)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if key in BASE_TABLE:
        result = BASE_TABLE[key]
    else:
        split = split_point(key)
        if split is None:
            # length 4, all letters distinct: conjugate to [a,b]^{+-1} or [a,b^-1]^{+-1}
            if len(key) != 4:
                raise AssertionError(f"no repeated letter in {key!r} of length {len(key)}")
            result = COMMUTATOR
        else:
            s, P, Q = split
            result = _f(s + P, memo) * _f(s + Q, memo) - _f(P + invert(Q), memo)
    memo[key] = result
    return result


def compute_recursive(
    w: str,
    memo: dict[str, Poly3] | None = None,
    cap: int | None = DEFAULT_RECURSIVE_CAP,
) -> Poly3:
    """f_w by the recursive trace-identity algorithm.

    ``memo`` may be shared between calls; entries are only inserted once
    fully computed.
    """
    n = len(free_reduce(w))
    if cap is not None and n > cap:
        raise CapExceeded(f"reduced word length {n} exceeds the recursive cap {cap}")
    return _f(w, {} if memo is None else memo)
