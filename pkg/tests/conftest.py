import itertools

from fricke.randmodels import SplitMix64, gen_cyclic, gen_reduced
from fricke.words import free_reduce


def reduced_words(n: int):
    """All freely reduced words of length exactly n."""
    for letters in itertools.product("aAbB", repeat=n):
        w = "".join(letters)
        if free_reduce(w) == w:
            yield w


def _distinct(gen, count: int, max_len: int, seed: int) -> list[str]:
    rng = SplitMix64(seed)
    out: dict[str, None] = {}
    while len(out) < count:
        out[gen(1 + rng.below(max_len), rng.next())] = None
    return list(out)


def random_reduced_corpus(count: int, max_len: int, seed: int) -> list[str]:
    """``count`` distinct reduced words with lengths uniform in 1..max_len."""
    return _distinct(gen_reduced, count, max_len, seed)


def random_cyclic_corpus(count: int, max_len: int, seed: int) -> list[str]:
    """``count`` distinct cyclically reduced words with lengths uniform in 1..max_len."""
    return _distinct(gen_cyclic, count, max_len, seed)


# criterion number -> report line, filled in by test_acceptance
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[num])
