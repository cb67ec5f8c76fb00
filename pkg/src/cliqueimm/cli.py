"""Command-line entry point.

Exit codes: 0 success, 2 bad input, 3 verification failure (or, for
``extract``, a shortfall flag).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import generators
from .aalpha import MAX_AUDIT_ALPHA, MAX_EXHAUSTIVE_ALPHA, audit_aalpha
from .basecase import PROVIDERS
from .beta import beta, format_table, guarantee
from .bench import MAX_BENCH_ALPHA, MAX_BENCH_N, run_bench
from .certificate import ImmersionCertificate, verify
from .extractor import InvariantViolation, extract
from .graph import independence_number
from .graphio import GraphParseError, format_edge_list, read_graph, write_graph

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3


class InputError(Exception):
    pass


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except GraphParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_extract(args) -> int:
    g = _load(args.input)
    if g.n == 0:
        raise InputError("empty input")
    alpha = independence_number(g)
    if args.alpha_cap is not None and alpha > args.alpha_cap:
        raise InputError(f"independence number {alpha} exceeds --alpha-cap {args.alpha_cap}")
    t0 = time.perf_counter()
    cert, trace = extract(g, base=PROVIDERS[args.base], debug=args.debug_reverify)
    elapsed = time.perf_counter() - t0
    max_len = max(1, 2 * alpha - 1)
    claims = {"strong": True, "odd": True, "max_length": max_len}

    out = Path(args.output) if args.output else Path(args.input).with_suffix(".cert.json")
    out.write_text(cert.to_json(g.n, claims) + "\n")

    rep = verify(g, cert, strong=True, odd=True, max_len=max_len)
    b = beta(alpha)
    summary = {
        "n": g.n,
        "alpha": alpha,
        "beta": str(b),
        "beta_decimal": round(float(b), 6),
        "guarantee": guarantee(g.n, alpha),
        "order": cert.clique_order(),
        "shortfall": trace.shortfall,
        "verified": rep.passed,
        "levels": len(trace.levels),
        "seconds": round(elapsed, 4),
        "certificate": str(out),
    }
    if args.format == "json":
        print(json.dumps(summary, indent=1))
    else:
        print(f"n={g.n} alpha={alpha} beta={b} ({float(b):.6f})")
        print(f"guarantee={summary['guarantee']} order={summary['order']} "
              f"shortfall={trace.shortfall} time={elapsed:.3f}s")
        print(f"certificate: {out}")
        if args.check or not rep.passed:
            print(f"verify: {rep.summary()}")
    if not rep.passed:
        for p in rep.problems:
            print(f"  {p}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_VERIFY if trace.shortfall else EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.graph)
    try:
        cert, n, _ = ImmersionCertificate.from_json(Path(args.cert).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.cert}: {exc.strerror}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{args.cert}: malformed certificate ({exc})") from exc
    if n != g.n:
        raise InputError(f"certificate is for n={n} but graph has n={g.n}")
    rep = verify(g, cert, strong=args.strong, odd=args.odd, max_len=args.max_len)
    print(rep.summary())
    for p in rep.problems:
        print(f"  {p}")
    if rep.passed:
        print(f"order={len(cert.branch_vertices)} max_length={cert.max_path_length()}")
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_gen(args) -> int:
    try:
        if args.model == "disjoint-cliques":
            g = generators.disjoint_cliques(args.k, args.s)
        elif args.model == "gnp":
            g = generators.gnp(args.n, args.p, args.seed)
        elif args.model == "complement-trianglefree":
            g = generators.complement_triangle_free(args.n, args.seed)
        else:
            g = generators.noisy_cliques(args.k, args.n, args.p, args.seed)
    except (TypeError, ValueError) as exc:
        raise InputError(f"invalid parameters for {args.model}: {exc}") from exc
    if args.output:
        write_graph(g, args.output)
    else:
        sys.stdout.write(format_edge_list(g))
    print(f"{args.model}: n={g.n} m={g.m}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    if not 1 <= args.n_max <= MAX_BENCH_N or not 3 <= args.alpha_max <= MAX_BENCH_ALPHA:
        raise InputError(f"bench caps: n-max in 1..{MAX_BENCH_N}, "
                         f"alpha-max in 3..{MAX_BENCH_ALPHA}")
    summary = run_bench(args.trials, args.n_max, args.alpha_max, args.seed,
                        workers=args.workers, exact_alpha=args.exact_alpha)
    print(summary.table(timings=args.timings))
    return EXIT_OK if summary.verification_failures == 0 and not summary.invariant_errors \
        else EXIT_VERIFY


def cmd_audit_aalpha(args) -> int:
    exhaustive = args.samples is None
    if exhaustive and args.alpha > MAX_EXHAUSTIVE_ALPHA or args.alpha > MAX_AUDIT_ALPHA:
        raise InputError("audit scale exceeded")
    if args.alpha < 2:
        raise InputError("alpha must be at least 2")
    t0 = time.perf_counter()
    rep = audit_aalpha(args.alpha, exhaustive=exhaustive,
                       samples=args.samples or 0, seed=args.seed)
    print(f"alpha={rep.alpha} mode={rep.mode} minimal_cuts={rep.cuts} audited={rep.audited} "
          f"containment={'ok' if rep.containment_ok else 'FAIL'} "
          f"failures={len(rep.failures)} time={time.perf_counter() - t0:.2f}s")
    for cut, reasons in rep.failures[:20]:
        print(f"  cut {{{', '.join(cut)}}}: {'; '.join(reasons)}")
    print("PASS" if rep.passed else "FAIL")
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_beta(args) -> int:
    if args.max < 1:
        raise InputError("--max must be positive")
    print(format_table(args.max))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliqueimm",
                                description="Clique immersions in graphs of small independence number.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("extract", help="extract a strong odd clique immersion")
    e.add_argument("--input", required=True)
    e.add_argument("--output", help="certificate path (default: <input>.cert.json)")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("--check", action="store_true", help="print the verifier report")
    e.add_argument("--debug-reverify", action="store_true",
                   help="re-verify the certificate at every recursion level")
    e.add_argument("--alpha-cap", type=int, help="refuse inputs with larger independence number")
    e.add_argument("--base", choices=sorted(PROVIDERS), default="default")
    e.set_defaults(func=cmd_extract)

    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--cert", required=True)
    v.add_argument("--strong", action="store_true")
    v.add_argument("--odd", action="store_true")
    v.add_argument("--max-len", type=int)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a seeded random graph")
    g.add_argument("--model", required=True,
                   choices=["disjoint-cliques", "gnp", "complement-trianglefree", "noisy-cliques"])
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--k", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="seeded benchmark against the guarantee")
    b.add_argument("--trials", type=int, default=50)
    b.add_argument("--n-max", type=int, default=100)
    b.add_argument("--alpha-max", type=int, default=6)
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--exact-alpha", action="store_true",
                   help="redraw instances whose independence number falls outside 3..alpha-max")
    b.add_argument("--timings", action="store_true",
                   help="add a wall-time column (makes the table non-reproducible)")
    b.set_defaults(func=cmd_bench)

    a = sub.add_parser("audit-aalpha", help="audit the minimal cuts of A_alpha")
    a.add_argument("--alpha", type=int, required=True)
    mode = a.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_audit_aalpha)

    t = sub.add_parser("beta", help="print the beta table")
    t.add_argument("--max", type=int, default=12)
    t.set_defaults(func=cmd_beta)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
