import itertools
import json
import statistics
from collections import Counter

import pytest

import fricke.randmodels as rm
from fricke.errors import CapExceeded, InternalInvariantError, InvalidInput
from fricke.polyring import Poly3
from fricke.randmodels import (
    CSV_HEADER,
    ModelConfig,
    SplitMix64,
    count_cyclic_words,
    gen_cyclic,
    gen_positive,
    gen_reduced,
    load_rows_csv,
    run_experiment,
    sample_cyclic,
    summarize,
    trial_seed,
)
from fricke.words import cyclic_reduce, is_cyclically_reduced, is_freely_reduced, pair_counts

# 0.1% critical values of chi-square
CHI2_DF2 = 13.816
CHI2_DF3 = 16.266


def chi2(counts, expected):
    return sum((c - expected) ** 2 / expected for c in counts)


def test_splitmix_reference_stream():
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_trial_seeds_are_distinct():
    seeds = {trial_seed(42, t) for t in range(10_000)}
    assert len(seeds) == 10_000


class TestPositive:
    def test_alphabet_and_length(self):
        w = gen_positive(50, 0.5, 3)
        assert len(w) == 50 and set(w) <= {"a", "b"}

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5])
    def test_bad_p(self, p):
        with pytest.raises(InvalidInput):
            gen_positive(5, p, 0)

    def test_frequency(self):
        w = gen_positive(100_000, 0.3, 9)
        assert 0.29 <= w.count("a") / len(w) <= 0.31

    def test_deterministic(self):
        assert gen_positive(30, 0.4, 5) == gen_positive(30, 0.4, 5)


class TestReduced:
    def test_freely_reduced(self):
        for seed in range(500):
            w = gen_reduced(1 + seed % 40, seed)
            assert len(w) == 1 + seed % 40 and is_freely_reduced(w)

    def test_first_letter_uniform(self):
        counts = Counter(gen_reduced(1, s) for s in range(100_000))
        assert chi2([counts[c] for c in "aAbB"], 25_000) < CHI2_DF3

    def test_transitions_uniform(self):
        w = gen_reduced(200_000, 1)
        pairs = Counter(zip(w, w[1:]))
        for c, nxt in rm._NEXT.items():
            row = [pairs[(c, d)] for d in nxt]
            assert chi2(row, sum(row) / 3) < CHI2_DF2


class TestCyclic:
    def test_cyclically_reduced(self):
        for seed in range(500):
            assert is_cyclically_reduced(gen_cyclic(1 + seed % 40, seed))

    def test_length_one_uniform(self):
        counts = Counter(gen_cyclic(1, s) for s in range(40_000))
        assert chi2([counts[c] for c in "aAbB"], 10_000) < CHI2_DF3

    def test_acceptance_rate(self):
        attempts = sum(sample_cyclic(20, s)[1] for s in range(100_000))
        assert 0.73 <= 100_000 / attempts <= 0.77

    def test_uniform_over_cyclic_words(self):
        n = 4
        counts = Counter(gen_cyclic(n, s) for s in range(56_000))
        assert len(counts) == 3**n + 2 + (-1) ** n == 84
        exp = 56_000 / 84
        # 83 degrees of freedom, 0.1% critical value ~ 127.6
        assert chi2(counts.values(), exp) < 127.6

    def test_cancellation_tail(self):
        trials = 100_000
        ks = Counter(cyclic_reduce(gen_reduced(100, s))[1] for s in range(trials))
        for k in range(1, 8):
            emp = sum(v for kk, v in ks.items() if kk >= k) / trials
            bound = 3.0 ** (1 - k)
            sd = (bound * (1 - bound) / trials) ** 0.5
            assert emp <= bound + 4 * sd


class TestRivin:
    def test_examples(self):
        assert [count_cyclic_words(n) for n in (1, 2, 3)] == [4, 12, 28]

    def test_brute_force(self):
        for n in range(1, 7):
            brute = sum(
                1 for t in itertools.product("aAbB", repeat=n) if is_cyclically_reduced("".join(t))
            )
            assert count_cyclic_words(n) == brute

    def test_cap(self):
        with pytest.raises(CapExceeded):
            count_cyclic_words(15)
        with pytest.raises(CapExceeded):
            count_cyclic_words(0)


class TestExperiments:
    def test_config_validation(self):
        with pytest.raises(InvalidInput):
            ModelConfig("nope", 10)
        with pytest.raises(InvalidInput):
            ModelConfig("positive", 10, p=1.0)
        ModelConfig("cyclic", 10, p=7.0)  # p ignored outside the positive model
        with pytest.raises(CapExceeded):
            ModelConfig("cyclic", 2000, compute_full=True)

    def test_deterministic_and_parallel_invariant(self):
        cfg = ModelConfig("reduced", 30, trials=12, seed=5, compute_full=True)
        r1 = run_experiment(cfg)
        r2 = run_experiment(cfg)
        r3 = run_experiment(cfg, threads=2)
        assert r1 == r2 == r3
        assert json.loads(r1.to_json())["summary"] == r1.summary

    def test_full_rows(self):
        cfg = ModelConfig("cyclic", 40, trials=10, seed=3, compute_full=True)
        rep = run_experiment(cfg)
        for row in rep.rows:
            core, _ = cyclic_reduce(rm.generate(cfg, row.seed))
            assert row.N == len(core)
            assert row.deg_computed == row.deg == len(core) - pair_counts(core).R
            assert row.support > 0 and row.bit1 > 0 and row.l1 >= row.linf
        assert rep.summary == summarize(list(rep.rows), cfg.n)
        assert rep.summary["mean_support_ratio"] is not None

    def test_predictor_rows(self):
        rep = run_experiment(ModelConfig("reduced", 100, trials=20, seed=1))
        for row in rep.rows:
            assert row.support is None and (row.n - row.N) % 2 == 0
        assert rep.summary["mean_bit1_ratio"] is None

    def test_csv(self):
        rep = run_experiment(ModelConfig("positive", 20, p=0.3, trials=5, seed=2, compute_full=True))
        text = rep.to_csv()
        assert text.splitlines()[0] == ",".join(CSV_HEADER)
        assert load_rows_csv(text) == list(rep.rows)
        sparse = run_experiment(ModelConfig("positive", 20, trials=2)).to_csv()
        assert sparse.splitlines()[1].split(",")[5:10] == [""] * 5

    def test_fail_fast(self, monkeypatch):
        monkeypatch.setattr(rm, "compute_matrix", lambda w, cap=None: Poly3.const(2))
        with pytest.raises(InternalInvariantError):
            run_experiment(ModelConfig("cyclic", 10, trials=3, compute_full=True))

    def test_summary_statistics(self):
        rep = run_experiment(ModelConfig("cyclic", 60, trials=30, seed=4))
        ratios = [r.deg / 60 for r in rep.rows]
        assert rep.summary["mean_deg_ratio"] == pytest.approx(statistics.fmean(ratios))
        assert rep.summary["std_deg_ratio"] == pytest.approx(statistics.stdev(ratios))

    @pytest.mark.slow
    @pytest.mark.parametrize("model", ["positive", "reduced"])
    def test_support_superlinear(self, model):
        def median_ratio(n):
            rep = run_experiment(ModelConfig(model, n, trials=9, seed=17, compute_full=True))
            return statistics.median(r.support / n for r in rep.rows)

        assert median_ratio(120) > median_ratio(40)
