"""Words in the free group F(a, b).

A word is a plain ``str`` over the alphabet ``"aAbB"`` where ``A`` and ``B``
stand for the inverses of ``a`` and ``b``.  Strings are immutable, hashable
and cheap to slice, which is all the group-word machinery here needs.

The letter order used for every lexicographic comparison is ``a < A < b < B``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .errors import CapExceeded, WordSyntaxError

ALPHABET = "aAbB"
DEFAULT_MAX_LENGTH = 5000

_INVERSE = str.maketrans("aAbB", "AaBb")
# Map letters onto digits so that plain string comparison follows a < A < b < B.
_TO_RANK = str.maketrans("aAbB", "0123")
_FROM_RANK = str.maketrans("0123", "aAbB")

_TERM = re.compile(r"\s*([abAB])(?:\^(-?\d+))?")
_TRAILING = re.compile(r"\s*")


class Letter(str, Enum):
    a = "a"
    a_inv = "A"
    b = "b"
    b_inv = "B"

    @property
    def inverse(self) -> "Letter":
        return Letter(self.value.translate(_INVERSE))

    @property
    def generator(self) -> str:
        return self.value.lower()


def inverse_letter(c: str) -> str:
    return c.translate(_INVERSE)


def is_a_type(c: str) -> bool:
    return c in "aA"


def parse_word(text: str, max_length: int = DEFAULT_MAX_LENGTH) -> str:
    """Parse ``text`` into an (unreduced) word.

    Grammar: ``term*`` with ``term := letter ('^' '-'? digits)?`` and
    whitespace allowed between terms.  ``a^-2`` expands to ``AA`` and
    ``A^2`` to ``AA`` as well.

    >>> parse_word("a^3B^2")
    'aaaBB'
    >>> parse_word("A^-1 b")
    'ab'
    """
    pieces = []
    total = 0
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None:
            break
        letter, exponent = m.group(1), m.group(2)
        e = 1 if exponent is None else int(exponent)
        if e < 0:
            letter = letter.translate(_INVERSE)
            e = -e
        total += e
        if total > max_length:
            raise CapExceeded(
                f"word length exceeds the cap of {max_length} letters after expansion"
            )
        pieces.append(letter * e)
        pos = m.end()
    tail = _TRAILING.match(text, pos)
    if tail.end() != len(text):
        bad = tail.end()
        raise WordSyntaxError(f"unexpected character {text[bad]!r} at position {bad} in {text!r}")
    return "".join(pieces)


def free_reduce(w: str) -> str:
    stack: list[str] = []
    for c in w:
        if stack and stack[-1] == c.translate(_INVERSE):
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack)


def is_freely_reduced(w: str) -> bool:
    return all(w[i + 1] != w[i].translate(_INVERSE) for i in range(len(w) - 1))


def is_cyclically_reduced(w: str) -> bool:
    if not is_freely_reduced(w):
        return False
    return len(w) < 2 or w[-1] != w[0].translate(_INVERSE)


def cyclic_reduce(w: str) -> tuple[str, int]:
    """Split a freely reduced ``w`` as ``t * core * t^-1``.

    Returns ``(core, K)`` with ``K = |t|``, so ``len(core) == len(w) - 2*K``.
    The trivial word gives ``("", 0)``.
    """
    i, j = 0, len(w)
    while j - i >= 2 and w[j - 1] == w[i].translate(_INVERSE):
        i += 1
        j -= 1
    return w[i:j], i


def cyclic_core(w: str) -> str:
    """Free and cyclic reduction in one step."""
    return cyclic_reduce(free_reduce(w))[0]


def invert(w: str) -> str:
    return w[::-1].translate(_INVERSE)


def least_rotation(s: str) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(s)
    if n == 0:
        return 0
    ss = s + s
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = fail[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:  # here i == -1
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def _min_rotation_ranked(ranked: str) -> str:
    k = least_rotation(ranked)
    return ranked[k:] + ranked[:k]


def canonical_key(w: str) -> str:
    """Normal form of the conjugacy class of ``w`` up to inversion.

    Two words get the same key exactly when one is conjugate to the other
    or to its inverse, which is precisely the symmetry of f_w.

    >>> canonical_key("ba"), canonical_key("A")
    ('ab', 'a')
    """
    core = cyclic_core(w)
    if not core:
        return ""
    fwd = _min_rotation_ranked(core.translate(_TO_RANK))
    bwd = _min_rotation_ranked(invert(core).translate(_TO_RANK))
    return min(fwd, bwd).translate(_FROM_RANK)


@dataclass(frozen=True)
class SyllableForm:
    """Cyclic factorisation ``a^alpha_1 b^beta_1 ... a^alpha_s b^beta_s``.

    For a power of a single generator ``s`` is 0, ``alphas``/``betas`` are
    empty and ``pure_power`` holds ``(generator, exponent)``.
    """

    s: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    pure_power: tuple[str, int] | None = None

    @property
    def syllable_length(self) -> int:
        return 1 if self.pure_power is not None else 2 * self.s

    def expand(self) -> str:
        if self.pure_power is not None:
            g, e = self.pure_power
            return (g if e > 0 else g.upper()) * abs(e)
        parts = []
        for alpha, beta in zip(self.alphas, self.betas):
            parts.append(("a" if alpha > 0 else "A") * abs(alpha))
            parts.append(("b" if beta > 0 else "B") * abs(beta))
        return "".join(parts)


def _runs(w: str) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    for c in w:
        if runs and runs[-1][0] == c:
            runs[-1] = (c, runs[-1][1] + 1)
        else:
            runs.append((c, 1))
    return runs


def syllable_form(w: str) -> SyllableForm:
    """Standard syllable form of a nonempty cyclically reduced word.

    The word is rotated to start at the first letter that opens a maximal
    a-run, so the result is reproducible.
    """
    if not w:
        raise ValueError("syllable_form needs a nonempty word")
    if not is_cyclically_reduced(w):
        raise ValueError(f"{w!r} is not cyclically reduced")
    has_a = any(c in "aA" for c in w)
    has_b = any(c in "bB" for c in w)
    if not (has_a and has_b):
        g = w[0].lower()
        e = len(w) if w[0] == g else -len(w)
        return SyllableForm(0, (), (), (g, e))
    n = len(w)
    start = next(i for i in range(n) if w[i] in "aA" and w[i - 1] in "bB")
    rotated = w[start:] + w[:start]
    runs = _runs(rotated)
    alphas = tuple(k if c == "a" else -k for c, k in runs[0::2])
    betas = tuple(k if c == "b" else -k for c, k in runs[1::2])
    return SyllableForm(len(alphas), alphas, betas)


@dataclass(frozen=True)
class CyclicPairCounts:
    """Cyclic adjacency statistics of a cyclically reduced word.

    ``N[(r, s)]`` counts positions ``i`` (mod n) with ``w[i] == r`` and
    ``w[i+1] == s``.  ``R = N[a,b] + N[B,A]`` is the exact degree defect.
    """

    N: dict[tuple[str, str], int]
    m_a: int
    m_b: int
    R: int

    @property
    def n(self) -> int:
        return self.m_a + self.m_b

    def __getitem__(self, pair: tuple[str, str]) -> int:
        return self.N.get(pair, 0)


def pair_counts(w: str) -> CyclicPairCounts:
    if not w:
        raise ValueError("pair_counts needs a nonempty word")
    n = len(w)
    counts = Counter(zip(w, w[1:] + w[0]))
    N = {pair: counts[pair] for pair in counts}
    m_a = w.count("a") + w.count("A")
    R = N.get(("a", "b"), 0) + N.get(("B", "A"), 0)
    return CyclicPairCounts(N, m_a, n - m_a, R)
