"""Command line front end.

    effbound bound kobayashi --n 2
    effbound witness debarre --N 2 --c 1 --d 117
    effbound verify lemma31 --N 3 --delta 3 --format json

Exit codes: 0 pass, 1 witness absent or a check failed, 2 usage error,
3 a desk-scale cap was hit.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from . import bounds, grassmann, intersect, wronskian
from .errors import ScaleGuardExceeded
from .report import SuiteReport, build_report, exact, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    format: str = "text"
    cap_subsets: int = wronskian.DEFAULT_SUBSET_CAP
    cap_groebner_vars: int = intersect.MAX_VARS
    cap_groebner_degree: int = intersect.MAX_DEGREE
    verbosity: int = 0

    def to_dict(self):
        return {
            "seed": self.seed,
            "format": self.format,
            "cap_subsets": self.cap_subsets,
            "cap_groebner_vars": self.cap_groebner_vars,
            "cap_groebner_degree": self.cap_groebner_degree,
            "verbosity": self.verbosity,
        }


def _seed(text: str) -> int:
    value = int(text)
    if not -(2**63) <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--cap-subsets", type=int, default=wronskian.DEFAULT_SUBSET_CAP)
    p.add_argument("--cap-groebner-vars", type=int, default=intersect.MAX_VARS)
    p.add_argument("--cap-groebner-degree", type=int, default=intersect.MAX_DEGREE)
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="effbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="closed-form degree bounds")
    p.add_argument("kind", choices=("kobayashi", "debarre", "prior"))
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)

    p = sub.add_parser("witness", parents=[common], help="integer decomposition witnesses")
    p.add_argument("kind", choices=("kobayashi", "debarre"))
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--d", type=int, nargs="+", required=True)
    p.add_argument("--search-delta", action="store_true", help="also try delta_p above 2N-1")
    p.add_argument("--delta-max", type=int)

    p = sub.add_parser("verify", parents=[common], help="exact verification suites")
    p.add_argument("suite", choices=("wronskian", "lemma31", "lemma-product", "pluecker", "stabilization"))
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--delta", type=int, nargs="+")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--grid", type=int, default=10)
    return parser


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for {args.command} {getattr(args, 'kind', '') or args.suite}")


# ----------------------------------------------------------------- subcommands

def cmd_bound(args, cfg: RunConfig):
    rep = SuiteReport("bound")
    if args.kind == "kobayashi":
        _require(args, "n")
        if args.n < 2:
            raise UsageError("--n must be >= 2")
        br = bounds.kobayashi_report(args.n)
        rep.add("witness_at_bound", {"n": args.n, "d": br.bound}, True, br.witness is not None)
        return rep, {"kind": "kobayashi", "n": args.n, "bound": br.bound,
                     "verdicts": br.verdicts, "witness": br.witness}
    if args.kind == "debarre":
        _require(args, "N")
        if args.N < 2:
            raise UsageError("--N must be >= 2")
        br = bounds.debarre_report(args.N)
        rep.add("witness_at_bound", {"N": args.N, "d": br.bound, "c": bounds.debarre_c0(args.N)},
                True, br.witness is not None)
        return rep, {"kind": "debarre", "N": args.N, "c0": bounds.debarre_c0(args.N), "bound": br.bound,
                     "verdicts": br.verdicts, "witness": br.witness}
    _require(args, "n")
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    prior = bounds.prior_bounds(args.n)
    return rep, {"kind": "prior", "n": args.n, **prior}


def cmd_witness(args, cfg: RunConfig):
    rep = SuiteReport("witness")
    if args.kind == "kobayashi":
        _require(args, "n")
        if args.n < 2 or len(args.d) != 1 or args.d[0] < 1:
            raise UsageError("need --n >= 2 and a single --d >= 1")
        d = args.d[0]
        w = bounds.kobayashi_witness(args.n, d)
        inputs = {"n": args.n, "d": d}
    else:
        _require(args, "N")
        c = args.c if args.c is not None else (len(args.d) if len(args.d) > 1 else 1)
        if args.N < 2 or c < 1 or len(args.d) not in (1, c):
            raise UsageError("need --N >= 2, --c >= 1 and one or c degrees")
        d = args.d if len(args.d) == c else args.d * c
        w = bounds.debarre_witness(args.N, c, d, search_delta=args.search_delta, delta_max=args.delta_max)
        inputs = {"N": args.N, "c": c, "d": d}
    if w is None:
        rep.add("witness_found", inputs, True, False)
        return rep, {"kind": args.kind, "found": False, "witness": None}
    rep.add("witness_found", inputs, True, True)
    for name, ok in w.conditions().items():
        rep.add(f"condition.{name}", inputs, True, ok)
    return rep, {"kind": args.kind, "found": True, "witness": w}


def _verify_wronskian(args, cfg):
    n = args.n if args.n is not None else 2
    k = args.k if args.k is not None else 3
    delta = args.delta[0] if args.delta else k + 1
    if n < 1 or k < 1 or args.trials < 1:
        raise UsageError("need --n >= 1, --k >= 1, --trials >= 1")
    rep = SuiteReport("wronskian")
    rep.extend(wronskian.theorem21_suite(n, k, args.trials, cfg.seed))
    rep.extend(wronskian.check_alternating_multilinear(n, k, delta, args.trials, cfg.seed))
    rep.extend(wronskian.common_factor_suite(n, k, delta, args.trials, cfg.seed))
    rep.extend(wronskian.reparameterization_suite(n, k, delta, args.trials, cfg.seed))
    return rep, {"suite": "wronskian", "n": n, "k": k, "delta": delta, "trials": args.trials,
                 "summary": {name: f"{p}/{t}" for name, (p, t) in rep.summary().items()}}


def _lemma_check(rep, lemma: intersect.LemmaReport, name):
    rep.add(name + ".multiplicity", lemma.params, lemma.expected, lemma.multiplicity)
    rep.add(name + ".unique_point", lemma.params, True, lemma.unique)


def _verify_lemma31(args, cfg):
    _require(args, "N", "delta")
    rep = SuiteReport("lemma31")
    results = []
    for delta in args.delta:
        for chart in ("t0", "t1"):
            lemma = intersect.verify_lemma31(args.N, delta, chart=chart, max_vars=cfg.cap_groebner_vars,
                                             max_degree=cfg.cap_groebner_degree)
            _lemma_check(rep, lemma, "lemma31")
            results.append(lemma)
    return rep, {"suite": "lemma31", "systems": results}


def _verify_lemma_product(args, cfg):
    _require(args, "c", "delta")
    k = args.k if args.k is not None else 1
    if len(args.delta) != args.c:
        raise UsageError(f"--delta needs {args.c} values")
    rep = SuiteReport("lemma_product")
    indices = [args.i] if args.i is not None else range(1, args.c + 1)
    results = []
    for i in indices:
        if not 1 <= i <= args.c:
            raise UsageError(f"--i must lie in 1..{args.c}")
        lemma = intersect.verify_lemma_product(args.c, k, args.delta, i, max_vars=cfg.cap_groebner_vars,
                                               max_degree=cfg.cap_groebner_degree)
        _lemma_check(rep, lemma, "lemma_product")
        results.append(lemma)
    return rep, {"suite": "lemma-product", "systems": results}


def _verify_pluecker(args, cfg):
    _require(args, "N", "delta")
    rep = SuiteReport("pluecker")
    result = {"suite": "pluecker", "curves": []}
    for delta in args.delta:
        spec = grassmann.line_curve_spec(args.N, delta)
        v = grassmann.pluecker_of_curve(spec)
        inputs = {"N": args.N, "delta": delta}
        rep.add("pluecker.nonzero_coordinates", inputs, 2, len(v.nonzero()))
        rep.add("pluecker.degree_one", inputs, True, grassmann.verify_degree_one(v))
        result["curves"].append({"N": args.N, "delta": delta, "coords": v.to_dict()})
    if args.c is not None:
        k = args.k if args.k is not None else 1
        deltas = args.delta if len(args.delta) == args.c else args.delta[:1] * args.c
        for i in range(1, args.c + 1):
            degs = grassmann.product_curve_degrees(args.c, k, deltas, i)
            expected = [1 if j == i else 0 for j in range(1, args.c + 1)]
            rep.add("pluecker.product_degrees", {"c": args.c, "k": k, "delta": deltas, "i": i}, expected, degs)
    return rep, result


def _verify_stabilization(args, cfg):
    deltas = args.delta or [2, 3, 4]
    rep = wronskian.stabilization_suite(deltas, args.grid, cap=cfg.cap_subsets)
    return rep, {"suite": "stabilization", "n": 1, "k": 2, "delta": deltas, "grid": args.grid,
                 "summary": {name: f"{p}/{t}" for name, (p, t) in rep.summary().items()}}


VERIFY = {
    "wronskian": _verify_wronskian,
    "lemma31": _verify_lemma31,
    "lemma-product": _verify_lemma_product,
    "pluecker": _verify_pluecker,
    "stabilization": _verify_stabilization,
}


def cmd_verify(args, cfg: RunConfig):
    return VERIFY[args.suite](args, cfg)


COMMANDS = {"bound": cmd_bound, "witness": cmd_witness, "verify": cmd_verify}


def run(argv=None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(args.seed, args.format, args.cap_subsets, args.cap_groebner_vars,
                    args.cap_groebner_degree, args.verbose)
    start = time.perf_counter()
    try:
        rep, result = COMMANDS[args.command](args, cfg)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"effbound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScaleGuardExceeded as exc:
        print(f"effbound: scale guard: {exc}", file=sys.stderr)
        return EXIT_SCALE
    elapsed = round((time.perf_counter() - start) * 1000)
    report = build_report(["effbound"] + argv, cfg.to_dict(), rep.checks, elapsed, exact(result))
    text = render(report, cfg.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
