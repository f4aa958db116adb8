"""``fricke`` command-line interface.

Exit codes: 0 success, 1 distinct (equiv) or failed suite (selftest),
2 parse/usage error, 3 cap exceeded, 4 internal invariant failure,
5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .errors import CapExceeded, InternalInvariantError, InvalidInput, WordSyntaxError
from .polyring import Poly3, evaluate, norms, to_dict, to_text
from .randmodels import MODELS, ModelConfig, run_experiment
from .trace import (
    DEFAULT_MATRIX_CAP,
    DEFAULT_RECURSIVE_CAP,
    compute_matrix,
    compute_recursive,
    constant_term_oracle,
    modular_check,
    predict_leading,
    top_part,
)
from .words import cyclic_reduce, pair_counts, parse_word

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4
EXIT_IO = 5

CAP_ENV = "FRICKE_CAP"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def resolve_cap(flag: int | None, default: int) -> int:
    """--cap wins, then $FRICKE_CAP, then the engine default."""
    if flag is not None:
        return flag
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InvalidInput(f"{CAP_ENV}={env!r} is not an integer") from None
        if value < 1:
            raise InvalidInput(f"{CAP_ENV} must be at least 1")
        return value
    return default


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh if line.strip()]


def _words(args) -> list[str]:
    if args.words_file:
        return _read_lines(args.words_file)
    if args.word is None:
        raise InvalidInput("a word or --words-file is required")
    return [args.word]


def _compute(word: str, engine: str, cap_flag: int | None) -> Poly3:
    if engine == "recursive":
        return compute_recursive(word, cap=resolve_cap(cap_flag, DEFAULT_RECURSIVE_CAP))
    f = compute_matrix(word, resolve_cap(cap_flag, DEFAULT_MATRIX_CAP))
    if engine == "both":
        g = compute_recursive(word, cap=resolve_cap(cap_flag, DEFAULT_RECURSIVE_CAP))
        if f != g:
            raise InternalInvariantError(
                f"engines disagree on {word!r}:\n  matrix    {to_text(f)}\n  recursive {to_text(g)}"
            )
    return f


def _verify(word: str, f: Poly3) -> None:
    core, _ = cyclic_reduce(word)
    if not modular_check(core, f):
        raise InternalInvariantError(f"modular check failed for {word!r}")
    if evaluate(f, 0, 0, 0) != constant_term_oracle(core):
        raise InternalInvariantError(f"constant term disagrees with the Q8 oracle for {word!r}")


def _norm_lines(f: Poly3) -> list[str]:
    rep = norms(f)
    return [
        f"degree: {rep.degree}",
        f"support: {rep.support}",
        f"l1: {rep.l1}",
        f"linf: {rep.linf}",
        f"bit1: {rep.bit1}",
    ]


def cmd_compute(args) -> int:
    for text in _words(args):
        word = parse_word(text)
        f = _compute(word, args.engine, args.cap)
        if args.verify:
            _verify(word, f)
        if args.format == "json":
            print(json.dumps(to_dict(f)))
        else:
            print(to_text(f))
            if not args.words_file:
                print("\n".join(_norm_lines(f)))
        if args.verify:
            print(f"verified {text!r}: modular and constant-term checks passed", file=sys.stderr)
    return EXIT_OK


def cmd_degree(args) -> int:
    word = parse_word(args.word)
    core, _ = cyclic_reduce(word)
    if core:
        pc = pair_counts(core)
        lead = predict_leading(core)
        info = {
            "n": len(core),
            "R": pc.R,
            "m_a": pc.m_a,
            "m_b": pc.m_b,
            "degree": lead.degree,
            "top": to_text(lead.as_poly()),
        }
    else:
        lead = None
        info = {"n": 0, "R": 0, "m_a": 0, "m_b": 0, "degree": 0, "top": "2"}
    if args.check:
        f = compute_matrix(core, resolve_cap(args.cap, DEFAULT_MATRIX_CAP))
        expected = lead.as_poly() if lead else Poly3.const(2)
        if f.degree != info["degree"] or top_part(f) != expected:
            raise InternalInvariantError(
                f"predicted top term {info['top']} but f_w has top part {to_text(top_part(f))}"
            )
        info["checked"] = True
    if args.format == "json":
        print(json.dumps(info))
    else:
        for key, value in info.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _equiv_pairs(args) -> list[tuple[str, str]]:
    if args.words_file:
        pairs = []
        for line in _read_lines(args.words_file):
            parts = line.split(",")
            if len(parts) != 2:
                raise InvalidInput(f"expected 'v,w' per line, got {line!r}")
            pairs.append((parts[0], parts[1]))
        return pairs
    if args.v is None or args.w is None:
        raise InvalidInput("equiv needs two words or --words-file")
    return [(args.v, args.w)]


def cmd_equiv(args) -> int:
    cap = resolve_cap(args.cap, DEFAULT_MATRIX_CAP)
    all_equal = True
    for v_text, w_text in _equiv_pairs(args):
        v, w = parse_word(v_text), parse_word(w_text)
        same = compute_matrix(v, cap) == compute_matrix(w, cap)
        all_equal &= same
        label = "EQUIVALENT" if same else "DISTINCT"
        if args.format == "json":
            print(json.dumps({"v": v_text.strip(), "w": w_text.strip(), "equivalent": same}))
        elif args.words_file:
            print(f"{label} {v_text.strip()},{w_text.strip()}")
        else:
            print(label)
    return EXIT_OK if all_equal else EXIT_FALSE


def cmd_stats(args) -> int:
    cfg = ModelConfig(
        model=args.model,
        n=args.n,
        p=args.p,
        trials=args.trials,
        seed=args.seed,
        compute_full=args.full,
        compute_cap=resolve_cap(args.cap, DEFAULT_MATRIX_CAP),
    )
    report = run_experiment(cfg, threads=args.threads)
    if args.out:
        payload = report.to_json() if args.out.endswith(".json") else report.to_csv()
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    if args.format == "json":
        print(json.dumps(report.summary))
    else:
        print(report.summary_line())
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_all

    ok = True
    for res in run_all():
        ok &= res.passed
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {res.name} ({res.checked} checks)"
        if res.detail:
            line += f": {res.detail}"
        print(line)
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fricke", description="Fricke trace polynomials of words in F(a,b).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    fmt.add_argument("--cap", type=_positive_int, default=None, help=f"length cap (default: ${CAP_ENV} or engine default)")

    p = sub.add_parser("compute", parents=[fmt], help="print f_w")
    p.add_argument("word", nargs="?")
    p.add_argument("--engine", choices=("matrix", "recursive", "both"), default="matrix")
    p.add_argument("--verify", action="store_true", help="run the modular and constant-term oracles")
    p.add_argument("--words-file", metavar="PATH", help="one word per line")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("degree", parents=[fmt], help="predicted degree and top term")
    p.add_argument("word")
    p.add_argument("--check", action="store_true", help="compute f_w and confirm the prediction")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("equiv", parents=[fmt], help="decide character equivalence")
    p.add_argument("v", nargs="?")
    p.add_argument("w", nargs="?")
    p.add_argument("--words-file", metavar="PATH", help="one 'v,w' pair per line")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("stats", parents=[fmt], help="random word experiments")
    p.add_argument("--model", choices=MODELS, default="cyclic")
    p.add_argument("--n", type=_positive_int, default=100)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="compute f_w for every trial")
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--out", metavar="PATH", help="write rows as CSV, or JSON if PATH ends in .json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("selftest", help="run the embedded identity suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WordSyntaxError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
