"""Command line interface.

Exit codes: 0 success, 1 invalid input (or a failed ``verify``), 2 infeasible
or no perfect matching, 3 search budget exhausted or internal failure.
``-h`` is the uniformity, so help is ``--help`` only.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from itertools import combinations
from math import comb

from . import hypergraph as hg
from .cycle_model import classify
from .decompose import (LengthSpec, Decomposition, check_thm5_condition,
                        corank_condition, decompose_almost_regular, decompose_corank,
                        decompose_fixed_length)
from .errors import (BudgetExhausted, ConstructionError, Infeasible, MatchingDeficient,
                     TooLarge, Unsupported)
from .graph_cycles import decompose_2kn
from .hypergraph import HEdge, Hypergraph
from .shadows import (SetFamily, kk_bound_i, kk_bound_ii, kk_bound_iii, kk_bound_plus,
                      lower_shadow, pq_decompose, solve_s, upper_shadow)
from .verify import FLAGS, verify_decomposition

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_BUDGET = 10**7
MODE_FLAGS = {"almost-regular": ("spanning", "almost-regular", "regular-if-integral")}


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("HYPERCYCLES_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"HYPERCYCLES_BUDGET is not an integer: {env!r}") from None
    return DEFAULT_BUDGET


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from None


def _load_decomposition(path: str, target: Hypergraph | None) -> Decomposition:
    d = _read_json(path)
    if target is None and isinstance(d.get("target"), str):
        base = os.path.dirname(path)
        target = Hypergraph.from_dict(_read_json(os.path.join(base, d["target"])))
    return Decomposition.from_dict(d, target)


def _load_leave(path: str) -> list[HEdge]:
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("edges", [])
    return [HEdge.from_dict(e) for e in data]


# --- commands -----------------------------------------------------------------

def cmd_gen(args) -> int:
    H = hg.complete_uniform(args.n, args.h, args.lam)
    _write(hg.dumps(H) + "\n", args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    H = hg.load(args.input)
    try:
        cl = classify(H, args.h, circle_cap=args.circle_cap, budget=_budget(args))
    except TooLarge as exc:
        raise ValueError(str(exc)) from None
    _write(json.dumps(cl.to_dict(), indent=2) + "\n", args.output)
    return EXIT_OK


def _auto_mode(args, lengths) -> str:
    if lengths is None:
        return "fixed-length"
    if corank_condition(args.n, args.h, max(lengths.lengths)):
        return "corank"
    if all(c == 1 or (c >= 2 and check_thm5_condition(args.n, args.h, c)) for c in lengths.lengths):
        return "almost-regular"
    if args.lam == 1 and len(set(lengths.lengths)) == 1:
        return "fixed-length"
    raise ValueError("no pipeline applies to these lengths; choose --mode explicitly")


def cmd_decompose(args) -> int:
    budget = _budget(args)
    flags = dict(allow_singletons=args.allow_singletons)
    lengths = LengthSpec.parse(args.lengths, **flags) if args.lengths else None
    target = hg.load(args.input) if args.input else None
    if target is not None:
        args.n = target.n
        args.h = target.corank if args.h is None else args.h
        args.lam = target.lam
    if args.n is None or args.h is None:
        raise ValueError("need -n and -h (or --input)")
    mode = args.mode if args.mode != "auto" else _auto_mode(args, lengths)

    if mode == "corank":
        if lengths is None:
            raise ValueError("corank mode needs --lengths")
        H = target if target is not None else hg.complete_uniform(args.n, args.h, args.lam)
        d = decompose_corank(H, lengths, args.seed, budget)
    elif mode == "almost-regular":
        if lengths is None:
            raise ValueError("almost-regular mode needs --lengths")
        if target is not None and target != hg.complete_uniform(args.n, args.h, args.lam):
            raise ValueError("almost-regular mode only decomposes complete uniform hypergraphs")
        d = decompose_almost_regular(args.n, args.h, args.lam, lengths, args.seed, budget)
    else:
        c = args.c
        if c is None and lengths is not None and len(set(lengths.lengths)) == 1:
            c = lengths.lengths[0]
        if c is None:
            raise ValueError("fixed-length mode needs -c (or uniform --lengths)")
        if args.lam != 1:
            raise ValueError("fixed-length mode is for lambda = 1")
        leave = _load_leave(args.leave) if args.leave else None
        try:
            d = decompose_fixed_length(args.n, args.h, c, leave, args.seed,
                                       best_effort=args.best_effort, budget=budget)
        except MatchingDeficient as exc:
            if args.emit_certificate and exc.certificate is not None:
                cert = exc.certificate
                _write(json.dumps({"S": [e.to_dict() for e in cert.S],
                                   "N(S)": [{"v": list(p), "capacity": k}
                                            for p, k in zip(cert.neighborhood, cert.capacities)]})
                       + "\n",
                       args.emit_certificate)
            raise
        if lengths is not None and sorted(d.lengths) != list(lengths.lengths):
            raise ValueError(f"requested lengths do not match the {len(d.parts)} cycles of length {c}")
        lengths = LengthSpec(tuple(d.lengths))

    report = verify_decomposition(d.target, d, lengths, MODE_FLAGS.get(mode, ()))
    if not report.overall_pass:
        print("internal verification failed:", json.dumps(report.to_dict())[:2000], file=sys.stderr)
        return EXIT_INTERNAL
    _write(_json(d.to_dict()), args.output)
    print(f"{mode}: {len(d.parts)} parts verified", file=sys.stderr)
    return EXIT_OK


def cmd_two_kn(args) -> int:
    cycles = decompose_2kn(args.n, args.c, args.seed, _budget(args))
    _write(_json({"n": args.n, "c": args.c, "cycles": [list(cy) for cy in cycles]}), args.output)
    return EXIT_OK


def _random_family(rng, n, h, size):
    pool = list(combinations(range(1, n + 1), h))
    return SetFamily(n, h, frozenset(rng.sample(pool, size)))


def cmd_shadow_bounds(args) -> int:
    n, h = args.n, args.h
    if not 2 <= h < n:
        raise ValueError(f"need 2 <= h < n, got h={h}, n={n}")
    rng = random.Random(args.seed)
    total = comb(n, h)
    rows = []
    bad = 0
    for _ in range(args.samples):
        size = rng.randint(1, total if h > 2 else total - 1)
        T = _random_family(rng, n, h, size)
        if h >= 3:
            got = len(lower_shadow(T, h - 2))
            bound = float(kk_bound_i(solve_s(size, h, n)))
            ok = got >= bound - 1e-9
            rows.append(("i", size, got, f"{bound:.6f}", ok))
        else:
            if size <= n - 1 and n >= 4:
                got = len(upper_shadow(T, 2))
                bound = kk_bound_ii(size, n)
                rows.append(("ii", size, got, bound, got >= bound))
            p, q = pq_decompose(size, n)
            got = len(upper_shadow(T, 1))
            bound = kk_bound_iii(p, q, n)
            rows.append(("iii", size, got, bound, got >= bound))
            if n >= 85 and p <= 8:
                bound = kk_bound_plus(p, q, n)
                rows.append(("plus", size, got, str(bound), got >= bound))
    out = ["bound\tsize\tshadow\tlower_bound\tok"]
    for r in rows:
        bad += not r[4]
        out.append("\t".join(str(x) for x in r))
    _write("\n".join(out) + "\n", args.output)
    return EXIT_OK if not bad else EXIT_INTERNAL


def cmd_verify(args) -> int:
    target = hg.load(args.target)
    d = _load_decomposition(args.decomposition, target)
    spec = LengthSpec.parse(args.lengths, allow_singletons=args.allow_singletons) \
        if args.lengths else None
    flags = []
    for item in args.require or []:
        flags += [f for f in item.split(",") if f]
    bad = [f for f in flags if f not in FLAGS]
    if bad:
        raise ValueError(f"unknown --require flag(s) {bad}; choose from {list(FLAGS)}")
    report = verify_decomposition(target, d, spec, flags)
    _write(json.dumps(report.to_dict(), indent=2) + "\n", args.output)
    return EXIT_OK if report.overall_pass else EXIT_INVALID


# --- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _sub(subs, name, helptext):
    p = subs.add_parser(name, help=helptext, add_help=False)
    p.add_argument("--help", action="help", help="show this help message and exit")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypercycles", add_help=False,
                                     description="Berge cycle decompositions of complete uniform hypergraphs.")
    parser.add_argument("--help", action="help", help="show this help message and exit")
    subs = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=None,
                       help="search node budget (default 10^7 or $HYPERCYCLES_BUDGET)")
        if output:
            p.add_argument("-o", "--output", default=None)

    p = _sub(subs, "gen", "emit lambda*K_n^h")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-h", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = _sub(subs, "classify", "classify a hypergraph against the cycle notions")
    p.add_argument("input")
    p.add_argument("-h", type=int, default=None, help="uniformity for the h-factor check")
    p.add_argument("--circle-cap", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = _sub(subs, "decompose", "decompose into Berge cycles")
    p.add_argument("--mode", choices=["corank", "almost-regular", "fixed-length", "auto"],
                   default="auto")
    p.add_argument("-n", type=int)
    p.add_argument("-h", type=int)
    p.add_argument("-c", type=int)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("--lengths", help="comma-separated cycle lengths")
    p.add_argument("--input", help="target hypergraph file (corank mode)")
    p.add_argument("--leave", help="leave edges file (fixed-length mode)")
    p.add_argument("--allow-singletons", action="store_true")
    p.add_argument("--best-effort", action="store_true")
    p.add_argument("--emit-certificate", metavar="PATH")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = _sub(subs, "two-kn", "decompose 2K_n into c-cycles")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_two_kn)

    p = _sub(subs, "shadow-bounds", "compare brute-force shadows with the lower bounds")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-h", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_shadow_bounds)

    p = _sub(subs, "verify", "check a decomposition file")
    p.add_argument("target")
    p.add_argument("decomposition")
    p.add_argument("--lengths")
    p.add_argument("--require", action="append", help=f"comma-separated from {', '.join(FLAGS)}")
    p.add_argument("--allow-singletons", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("seed", "budget", "samples"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            print(f"error: --{name} must be non-negative", file=sys.stderr)
            return EXIT_INVALID
    try:
        return args.func(args)
    except MatchingDeficient as exc:
        print(f"no perfect matching: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (Infeasible, Unsupported) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INFEASIBLE
    except (BudgetExhausted, ConstructionError) as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
