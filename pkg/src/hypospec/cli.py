"""Command line front end.

Subcommands: gen (construct a family member), spectrum (principal eigenpair
of a stored hypergraph), compare (certify the radius separation at a given
n), deck (vertex-deleted canonical forms), hypomorphic (deck equality of two
files), verify (the full claim suite).

Exit codes: 0 success, 1 failed claim or failed comparison, 2 usage error.
Stdout is deterministic for fixed flags and seed; timings and progress go to
stderr.  HYPOSPEC_THREADS sets the worker count for deck computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

from .families import FAMILY_TAGS, FamilySpec, family_hypergraph
from .hypergraph import Hypergraph
from .iso import Deck, canonical_form, deck, delete_vertex, hypomorphic
from .spectral import (SolverConfig, exact_bracket, oracle_radius,
                       principal_eigenpair, report_record)
from .verify import run_suite, verify_main_theorem, write_verdict


def _thread_count() -> int:
    raw = os.environ.get("HYPOSPEC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        print(f"warning: ignoring non-integer HYPOSPEC_THREADS={raw!r}", file=sys.stderr)
        return 1


def _solver_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=1e-12, help="bracket and residual tolerance")
    sub.add_argument("--max-iter", type=int, default=1_000_000, dest="max_iter")
    sub.add_argument("--shift", type=float, default=1.0, help="diagonal shift of the iteration")
    sub.add_argument("--seed", type=int, default=0, help="0 starts from all-ones")


def _config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(tolerance=args.tol, max_iterations=args.max_iter,
                        shift=args.shift, seed=args.seed)


def _header(args: argparse.Namespace) -> str:
    return (f"# tol {args.tol:g} max-iter {args.max_iter} shift {args.shift:g} "
            f"seed {args.seed}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypospec",
        description="exact and numeric verification for the doubled-cycle "
                    "hypergraph pairs")
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="construct a family member and write it out")
    gen.add_argument("--family", required=True, choices=FAMILY_TAGS)
    gen.add_argument("--n", required=True, type=int)
    gen.add_argument("--k", type=int, default=None, help="layer index, G family only")
    gen.add_argument("--out", default=None, help="output path; stdout when omitted")
    gen.add_argument("--format", choices=("text", "json"), default=None,
                     help="defaults from the --out extension, else text")

    spectrum = sub.add_parser("spectrum", help="principal eigenpair of a stored hypergraph")
    spectrum.add_argument("file")
    _solver_flags(spectrum)
    spectrum.add_argument("--restarts", type=int, default=0,
                          help="also run the gradient oracle with this many restarts")
    spectrum.add_argument("--format", choices=("text", "json"), default="text")

    compare = sub.add_parser("compare", help="certify the radius separation of the pair at n")
    compare.add_argument("--n", required=True, type=int)
    _solver_flags(compare)

    deck_cmd = sub.add_parser("deck", help="vertex-deleted canonical forms of a stored hypergraph")
    deck_cmd.add_argument("file")
    deck_cmd.add_argument("--out", default=None,
                          help="deck JSON path; defaults to <file>.deck.json")

    hypo = sub.add_parser("hypomorphic", help="deck equality of two stored hypergraphs")
    hypo.add_argument("first")
    hypo.add_argument("second")

    verify = sub.add_parser("verify", help="run the claim suite")
    verify.add_argument("--n", required=True,
                        help="single value or inclusive range, e.g. 4 or 3..5")
    verify.add_argument("--out", default="verdict.json", help="verdict JSON path")
    verify.add_argument("--exact-only", action="store_true", dest="exact_only",
                        help="skip the numeric claims")
    _solver_flags(verify)
    return parser


def _parse_n_range(text: str) -> list[int]:
    if ".." in text:
        first, _, last = text.partition("..")
        lo, hi = int(first), int(last)
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _load(path: str) -> Hypergraph:
    raw = Path(path).read_text(encoding="ascii")
    if path.endswith(".json"):
        return Hypergraph.from_json(raw)
    return Hypergraph.from_text(raw)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii")


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, args.n, args.k)
    hg = family_hypergraph(spec)
    fmt = args.format
    if fmt is None:
        fmt = "json" if (args.out or "").endswith(".json") else "text"
    payload = hg.to_json() + "\n" if fmt == "json" else hg.to_text()
    _emit(payload, args.out)
    where = args.out or "stdout"
    print(f"{args.family} n={args.n}: {hg.num_vertices} vertices, "
          f"{hg.num_edges} edges -> {where}", file=sys.stderr)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    hg = _load(args.file)
    cfg = _config(args)
    started = time.perf_counter()
    pair = principal_eigenpair(hg, cfg)
    lo, hi = exact_bracket(hg, pair.vector)
    print(f"solved in {time.perf_counter() - started:.2f}s", file=sys.stderr)
    record = report_record(pair, Path(args.file).stem, None)
    record["lambda_lo"] = float(lo)
    record["lambda_hi"] = float(hi)
    if args.restarts > 0:
        record["oracle"] = oracle_radius(hg, restarts=args.restarts, seed=args.seed)
    if args.format == "json":
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        print(_header(args))
        print(f"file {args.file}")
        print(f"rank {hg.rank} vertices {hg.num_vertices} edges {hg.num_edges}")
        for key in sorted(record):
            if key == "family" or record[key] is None:
                continue
            value = record[key]
            print(f"{key} {value:.17g}" if isinstance(value, float) else f"{key} {value}")
    if not pair.converged:
        print(f"error: solver did not converge: {pair.message}", file=sys.stderr)
        return 1
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    cfg = _config(args)
    claim = verify_main_theorem(args.n, cfg)
    print(f"claim finished in {claim.elapsed:.2f}s", file=sys.stderr)
    p = claim.params
    print(_header(args))
    print(f"lambda(X^{args.n}) in [{p['lambda_lo']:.17g}, {p['lambda_hi']:.17g}]")
    print(f"mu(Y^{args.n}) in [{p['mu_lo']:.17g}, {p['mu_hi']:.17g}]")
    print(f"predicted gap {p.get('predicted_gap', float('nan')):.17g}")
    if claim.passed:
        print("mu > lambda: certified")
        return 0
    print("mu > lambda: NOT certified")
    print(f"error: main-theorem n={args.n}: {claim.detail}", file=sys.stderr)
    return 1


def _deck_parallel(hg: Hypergraph, workers: int) -> Deck:
    if workers <= 1:
        return deck(hg)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        forms = list(pool.map(lambda v: canonical_form(delete_vertex(hg, v)), hg.vertices))
    return Deck(tuple(zip(hg.vertices, forms)))


def _cmd_deck(args: argparse.Namespace) -> int:
    hg = _load(args.file)
    started = time.perf_counter()
    d = _deck_parallel(hg, _thread_count())
    print(f"deck of {hg.num_vertices} computed in {time.perf_counter() - started:.2f}s",
          file=sys.stderr)
    for v, cf in d:
        print(f"deleted {v}: {cf.size} vertices, {len(cf.edges)} edges, "
              f"automorphisms {cf.automorphism_count}")
    out = args.out or str(Path(args.file).with_suffix(".deck.json"))
    Path(out).write_text(json.dumps(d.to_json_list(), sort_keys=True, indent=2) + "\n",
                         encoding="ascii")
    print(f"deck JSON -> {out}", file=sys.stderr)
    return 0


def _cmd_hypomorphic(args: argparse.Namespace) -> int:
    first = _load(args.first)
    second = _load(args.second)
    ok, eta = hypomorphic(first, second)
    if not ok:
        print("hypomorphic: no")
        return 1
    print("hypomorphic: yes")
    for v in sorted(eta):
        print(f"eta {v} -> {eta[v]}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    ns = _parse_n_range(args.n)
    for n in ns:
        if n < 3:
            raise ValueError(f"--n values must be >= 3, got {n}")
    cfg = _config(args)
    claims = run_suite(ns, include_numeric=not args.exact_only, config=cfg)
    failed = 0
    for claim in claims:
        tag = "PASS" if claim.passed else "FAIL"
        failed += 0 if claim.passed else 1
        params = json.dumps(claim.params, sort_keys=True)
        print(f"[{tag}] {claim.id} {params}")
        if not claim.passed:
            print(f"error: {claim.id} {params}: {claim.detail}", file=sys.stderr)
        print(f"{claim.id} {params} took {claim.elapsed:.2f}s", file=sys.stderr)
    print(f"passed {len(claims) - failed}/{len(claims)} claims")
    if args.out:
        write_verdict(args.out, claims)
        print(f"verdict JSON -> {args.out}", file=sys.stderr)
    return 1 if failed else 0


_DISPATCH = {
    "gen": _cmd_gen,
    "spectrum": _cmd_spectrum,
    "compare": _cmd_compare,
    "deck": _cmd_deck,
    "hypomorphic": _cmd_hypomorphic,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.verb](args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
