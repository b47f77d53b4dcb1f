"""Command-line front end: eval, series, bracket, verify, corpus.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 node
budget exceeded.  All output is deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
import zlib

from . import corpus as corpus_mod
from .diagram import ParseError, parse_diagram
from .oracle import bracket_statesum, specialization_check
from .perturb import random_perturbation
from .ring import laurent_to_json, series_to_json
from .singular import finite_type_vanishing
from .skein import (
    DEFAULT_NODE_BUDGET,
    AuditError,
    BudgetExceededError,
    convention_audit,
    default_params,
    evaluate,
    evaluate_laurent,
    evaluate_series,
    laurent_to_series,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

SUITES = ("invariance", "oracle", "finite-type", "conventions", "cross-ring")


def _node_budget(args) -> int:
    env = os.environ.get("SKEIN_NODE_BUDGET")
    if args.node_budget is not None:
        return args.node_budget
    if env is not None:
        return int(env)
    return DEFAULT_NODE_BUDGET


def _read_input(args):
    if args.text is not None:
        return parse_diagram(args.text, args.format)
    with open(getattr(args, "in")) as f:
        return parse_diagram(f.read(), args.format)


def cmd_eval(args) -> int:
    d = _read_input(args)
    budget = _node_budget(args)
    if args.ring == "series":
        params = default_params("series", n=args.n, order=args.order,
                                normalization=args.normalization)
        val = evaluate(d, params, budget=budget)
        out = series_to_json(val) if args.json else str(val)
    else:
        params = default_params("laurent", normalization=args.normalization)
        val = evaluate(d, params, budget=budget)
        out = laurent_to_json(val) if args.json else str(val)
    print(json.dumps(out) if args.json else out)
    return EXIT_OK


def cmd_series(args) -> int:
    d = _read_input(args)
    val = evaluate_series(d, args.n, args.order, budget=_node_budget(args))
    if args.json:
        print(json.dumps(series_to_json(val)))
    else:
        for m, c in enumerate(val.coeffs):
            print(f"v_{args.n}^{m} = {c}")
    return EXIT_OK


def cmd_bracket(args) -> int:
    d = _read_input(args)
    b = bracket_statesum(d)
    if args.json:
        print(json.dumps({str(k): v for k, v in sorted(b.terms.items())}))
    else:
        print(b)
    return EXIT_OK


def _corpus_entries(args):
    if args.corpus is not None:
        return corpus_mod.load_corpus(args.corpus)
    return corpus_mod.default_corpus(args.seed)


def _suite_cases(args):
    entries = _corpus_entries(args)
    budget = _node_budget(args)
    suite = args.suite

    if suite == "conventions":
        presets = [("laurent", args.normalization)]
        if args.normalization != "prop42":
            presets.append(("series", args.normalization))
        for ring, norm in presets:
            def run(ring=ring, norm=norm):
                params = default_params(ring, n=args.n, order=args.order,
                                        normalization=norm)
                report = convention_audit(params)
                return report.ok, "; ".join(report.failures) or "audit clean"
            yield f"audit-{ring}-{norm}", run
        return

    if suite == "invariance":
        rng = random.Random(args.seed)
        for e in entries:
            if e.n_flat:
                continue
            def run(e=e, moves=rng.randint(1, 3)):
                d = e.diagram()
                case_seed = args.seed ^ zlib.crc32(e.id.encode())
                p = random_perturbation(d, random.Random(case_seed),
                                        steps=moves, max_crossings=11)
                ok = evaluate_laurent(d, budget) == evaluate_laurent(p, budget)
                ok = ok and (evaluate_series(d, args.n, 6, budget=budget)
                             == evaluate_series(p, args.n, 6, budget=budget))
                return ok, f"{d.n_crossings}->{p.n_crossings} crossings"
            yield e.id, run
        return

    if suite == "oracle":
        for e in entries:
            if e.n_flat:
                continue
            yield e.id, (lambda e=e: (specialization_check(e.diagram()),
                                      f"{e.n_crossings} crossings"))
        return

    if suite == "finite-type":
        for e in entries:
            k = e.n_flat
            if not 1 <= k <= 4:
                continue
            for n in (0, 1):
                for m in range(min(k, args.order + 1)):
                    def run(e=e, n=n, m=m):
                        ok = finite_type_vanishing(n, m, e.diagram(),
                                                   budget=budget)
                        return ok, f"k={e.n_flat} n={n} m={m}"
                    yield f"{e.id}-n{n}-m{m}", run
        return

    if suite == "cross-ring":
        for e in entries:
            if e.n_flat:
                continue
            def run(e=e):
                d = e.diagram()
                p = evaluate_laurent(d, budget)
                for n in (0, 1, 2):
                    if laurent_to_series(p, n, args.order) != \
                            evaluate_series(d, n, args.order, budget=budget):
                        return False, f"mismatch at n={n}"
                return True, "n=0,1,2"
            yield e.id, run
        return

    raise ValueError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    cases = []
    all_ok = True
    for case_id, run in _suite_cases(args):
        t0 = time.monotonic()
        try:
            ok, detail = run()
        except Exception as e:
            ok, detail = False, f"error: {e}"
        ms = int((time.monotonic() - t0) * 1000)
        all_ok = all_ok and ok
        cases.append({"id": case_id, "pass": ok, "detail": detail, "ms": ms})
    report = {"suite": args.suite, "cases": cases, "pass": all_ok}
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for c in cases:
            mark = "ok  " if c["pass"] else "FAIL"
            print(f"{mark} {c['id']}: {c['detail']} ({c['ms']} ms)")
        print(f"suite {args.suite}: {'pass' if all_ok else 'FAIL'} "
              f"({len(cases)} cases)")
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_corpus(args) -> int:
    entries = corpus_mod.generate_corpus(args.seed)
    path = corpus_mod.write_corpus(entries, args.out)
    print(f"wrote {len(entries)} diagrams, manifest at {path}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="framedskein")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--in", help="diagram file")
            g.add_argument("--text", help="inline diagram text")
            p.add_argument("--format", choices=("pd", "gauss", "braid"),
                           default="pd")
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--order", type=int, default=8)
        p.add_argument("--normalization",
                       choices=("unit", "delta", "prop42"), default="unit")
        p.add_argument("--seed", type=int, default=corpus_mod.DEFAULT_SEED)
        p.add_argument("--node-budget", type=int, default=None)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("eval", help="evaluate the invariant")
    p.add_argument("--ring", choices=("laurent", "series"), default="laurent")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="print the finite-type coefficients")
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bracket", help="exhaustive state-sum oracle")
    common(p)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--corpus", help="corpus directory (default: generated)")
    common(p, with_input=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="generate the diagram corpus")
    p.add_argument("--out", required=True)
    common(p, with_input=False)
    p.set_defaults(func=cmd_corpus)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        pos = f" at position {e.pos}" if getattr(e, "pos", None) is not None else ""
        print(f"parse error{pos}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as e:
        print(f"budget error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except AuditError as e:
        print(f"convention audit failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
