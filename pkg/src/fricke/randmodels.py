"""Random word models and the experiment harness.

Three models of random words of length n:

* ``positive``: i.i.d. letters, ``a`` with probability p and ``b`` otherwise;
* ``reduced``: the nonbacktracking walk -- a uniform first letter, then each
  letter uniform among the three that do not cancel the previous one;
* ``cyclic``: ``reduced`` conditioned (by rejection) on last != first^-1,
  which is uniform on cyclically reduced words.

Randomness comes from SplitMix64.  Trial ``t`` of an experiment with seed
``s`` uses the stream seeded by ``trial_seed(s, t) = mix64(s + (t + 1) * G)``
(mod 2**64) where ``G = 0x9E3779B97F4A7C15`` and ``mix64`` is the SplitMix64
output finaliser.  Integers below k are drawn as ``(next() * k) >> 64`` and
uniform reals as ``(next() >> 11) * 2**-53``.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import CapExceeded, InternalInvariantError, InvalidInput
from .polyring import norms
from .trace.matrix import DEFAULT_MATRIX_CAP, compute_matrix
from .words import cyclic_reduce, pair_counts

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MODELS = ("positive", "reduced", "cyclic")
MAX_ENUMERATION_LENGTH = 14

CSV_HEADER = ["trial", "seed", "n", "N", "deg", "deg_computed", "support", "l1", "linf", "bit1", "runtime_ms"]


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, k: int) -> int:
        return (self.next() * k) >> 64

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))


def trial_seed(seed: int, trial: int) -> int:
    return mix64((seed + (trial + 1) * GOLDEN_GAMMA) & MASK64)


# candidates after each letter: the three letters other than its inverse
_NEXT = {"a": "abB", "A": "AbB", "b": "aAb", "B": "aAB"}
_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}


def _positive(n: int, p: float, rng: SplitMix64) -> str:
    return "".join("a" if rng.random() < p else "b" for _ in range(n))


def _reduced(n: int, rng: SplitMix64) -> str:
    c = "aAbB"[rng.below(4)]
    out = [c]
    for _ in range(n - 1):
        c = _NEXT[c][rng.below(3)]
        out.append(c)
    return "".join(out)


def _cyclic(n: int, rng: SplitMix64) -> tuple[str, int]:
    attempts = 0
    while True:
        attempts += 1
        w = _reduced(n, rng)
        if w[-1] != _INV[w[0]] or n == 1:
            return w, attempts


def gen_positive(n: int, p: float, seed: int) -> str:
    if not 0 < p < 1:
        raise InvalidInput(f"p must lie strictly between 0 and 1, got {p}")
    if n < 1:
        raise InvalidInput("n must be at least 1")
    return _positive(n, p, SplitMix64(seed))


def gen_reduced(n: int, seed: int) -> str:
    if n < 1:
        raise InvalidInput("n must be at least 1")
    return _reduced(n, SplitMix64(seed))


def gen_cyclic(n: int, seed: int) -> str:
    return sample_cyclic(n, seed)[0]


def sample_cyclic(n: int, seed: int) -> tuple[str, int]:
    """Like :func:`gen_cyclic` but also returns the number of attempts."""
    if n < 1:
        raise InvalidInput("n must be at least 1")
    return _cyclic(n, SplitMix64(seed))


def count_cyclic_words(n: int) -> int:
    """Count cyclically reduced words of length n by walking every reduced word."""
    if not 1 <= n <= MAX_ENUMERATION_LENGTH:
        raise CapExceeded(f"enumeration is limited to 1 <= n <= {MAX_ENUMERATION_LENGTH}")
    count = 0
    for first in "aAbB":
        bad_last = _INV[first]
        stack = [(first, 1)]
        while stack:
            last, length = stack.pop()
            if length == n:
                if last != bad_last or n == 1:
                    count += 1
                continue
            for c in _NEXT[last]:
                stack.append((c, length + 1))
    return count


# -- experiments --------------------------------------------------------------

@dataclass(frozen=True)
class ModelConfig:
    model: str
    n: int
    p: float = 0.5
    trials: int = 100
    seed: int = 0
    compute_full: bool = False
    compute_cap: int = DEFAULT_MATRIX_CAP

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidInput(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.n < 1 or self.trials < 1:
            raise InvalidInput("n and trials must be positive")
        if self.model == "positive" and not 0 < self.p < 1:
            raise InvalidInput(f"p must lie strictly between 0 and 1, got {self.p}")
        if self.compute_full and self.n > self.compute_cap:
            raise CapExceeded(f"n = {self.n} exceeds the compute cap {self.compute_cap}")


@dataclass(frozen=True)
class TrialRow:
    trial: int
    seed: int
    n: int
    N: int
    deg: int
    deg_computed: int | None = None
    support: int | None = None
    l1: int | None = None
    linf: int | None = None
    bit1: int | None = None
    runtime_ms: float = field(default=0.0, compare=False)


def generate(cfg: ModelConfig, seed: int) -> str:
    rng = SplitMix64(seed)
    if cfg.model == "positive":
        return _positive(cfg.n, cfg.p, rng)
    if cfg.model == "reduced":
        return _reduced(cfg.n, rng)
    return _cyclic(cfg.n, rng)[0]


def run_trial(cfg: ModelConfig, t: int) -> TrialRow:
    start = time.perf_counter()
    seed = trial_seed(cfg.seed, t)
    w = generate(cfg, seed)
    core, _ = cyclic_reduce(w)
    deg = len(core) - pair_counts(core).R if core else 0
    extra = {}
    if cfg.compute_full:
        f = compute_matrix(core, cfg.compute_cap)
        rep = norms(f)
        if rep.degree != deg:
            raise InternalInvariantError(
                f"trial {t}: computed degree {rep.degree} != predicted {deg} for {core!r}"
            )
        extra = dict(deg_computed=rep.degree, support=rep.support, l1=rep.l1, linf=rep.linf, bit1=rep.bit1)
    runtime = (time.perf_counter() - start) * 1000.0
    return TrialRow(t, seed, cfg.n, len(core), deg, runtime_ms=runtime, **extra)


def _run_trial_args(args):
    return run_trial(*args)


def summarize(rows: list[TrialRow], n: int) -> dict:
    ratios = [r.deg / n for r in rows]
    out = {
        "trials": len(rows),
        "mean_deg_ratio": statistics.fmean(ratios),
        "std_deg_ratio": statistics.stdev(ratios) if len(ratios) > 1 else 0.0,
        "mean_support_ratio": None,
        "mean_bit1_ratio": None,
    }
    if rows and rows[0].support is not None:
        out["mean_support_ratio"] = statistics.fmean(r.support / n**2 for r in rows)
        out["mean_bit1_ratio"] = statistics.fmean(r.bit1 / n**3 for r in rows)
    return out


@dataclass(frozen=True)
class ExperimentReport:
    config: ModelConfig
    rows: tuple[TrialRow, ...]
    summary: dict

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                ["" if v is None else (f"{v:.3f}" if k == "runtime_ms" else v) for k, v in asdict(r).items()]
            )
        return buf.getvalue()

    def to_dict(self) -> dict:
        rows = []
        for r in self.rows:
            d = asdict(r)
            for k in ("l1", "linf"):
                if d[k] is not None:
                    d[k] = str(d[k])
            rows.append(d)
        return {"config": asdict(self.config), "rows": rows, "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary_line(self) -> str:
        s = self.summary
        parts = [
            f"model={self.config.model}",
            f"n={self.config.n}",
            f"trials={s['trials']}",
            f"mean_deg/n={s['mean_deg_ratio']:.4f}",
            f"sd_deg/n={s['std_deg_ratio']:.4f}",
        ]
        if s["mean_support_ratio"] is not None:
            parts.append(f"mean_support/n^2={s['mean_support_ratio']:.4f}")
            parts.append(f"mean_bit1/n^3={s['mean_bit1_ratio']:.4f}")
        return " ".join(parts)


def run_experiment(cfg: ModelConfig, threads: int = 1) -> ExperimentReport:
    """Run ``cfg.trials`` independent trials; rows come back in trial order."""
    jobs = [(cfg, t) for t in range(cfg.trials)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_run_trial_args, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        rows = [run_trial(cfg, t) for t in range(cfg.trials)]
    return ExperimentReport(cfg, tuple(rows), summarize(rows, cfg.n))


def load_rows_csv(text: str) -> list[TrialRow]:
    """Parse rows written by :meth:`ExperimentReport.to_csv`."""
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        vals = {}
        for k in CSV_HEADER:
            v = rec[k]
            if k == "runtime_ms":
                vals[k] = float(v)
            else:
                vals[k] = None if v == "" else int(v)
        out.append(TrialRow(**vals))
    return out
