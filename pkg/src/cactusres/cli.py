"""Command-line front end.

Exit status: 0 when every check passes, 1 for a mathematical violation
(r > d or an identity mismatch), 2 for input and usage errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .checks import run_checks
from .digraph import Digraph, format_edge_list, laplacian, parse_edge_list, require_balanced
from .errors import CactusResError, IdentityMismatchError
from .generators import (
    GenSpec,
    derive_seeds,
    directed_cycle,
    random_balanced_digraph,
    random_directed_cactus,
)
from .linalg import MAX_DIM, complement_minor, determinant, format_decimal, format_rational
from .resistance import analyze, two_forest_count

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read_graph(path: str) -> Digraph:
    try:
        with open(path, encoding="ascii", newline="") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse_edge_list(text)


def _render_matrix(M, fmt) -> str:
    cells = [[fmt(x) for x in row] for row in M]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  " + " ".join(c.rjust(width) for c in row) for row in cells)


def cmd_analyze(args, out) -> int:
    G = _read_graph(args.file)
    limit = None if args.force else MAX_DIM
    rep = analyze(G, limit=limit)
    if args.json:
        print(rep.to_json(), file=out)
        return EXIT_OK if rep.r_le_d else EXIT_VIOLATION
    if args.decimal is not None:
        fmt = lambda x: format_decimal(x, args.decimal)  # noqa: E731
        note = f" (approximate, {args.decimal} digits)"
    else:
        fmt, note = format_rational, ""
    print(f"n = {rep.n}", file=out)
    print(f"kappa = {rep.kappa}", file=out)
    print(f"cactus = {str(rep.is_cactus).lower()}", file=out)
    print(f"L+{note} =", file=out)
    print(_render_matrix(rep.L_pinv, fmt), file=out)
    print(f"R{note} =", file=out)
    print(_render_matrix(rep.R, fmt), file=out)
    print("D =", file=out)
    print(_render_matrix(rep.D, str), file=out)
    print(f"r_le_d = {str(rep.r_le_d).lower()}", file=out)
    for i, j, r, d in rep.violations:
        print(f"violation: r_{i},{j} = {format_rational(r)} > d = {d}", file=out)
    return EXIT_OK if rep.r_le_d else EXIT_VIOLATION


def cmd_verify(args, out) -> int:
    G = _read_graph(args.file)
    checks = run_checks(G, analyze(G, limit=None if args.force else MAX_DIM))
    for c in checks:
        print(c.line(), file=out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VIOLATION


def search_graph(family: str, seed: int, max_n: int) -> Digraph:
    """The graph a search run uses for one derived seed."""
    pick = random.Random(seed ^ 0x5EED)
    if family == "cactus":
        spec = GenSpec(
            seed=seed,
            n_target=max_n,
            cycle_count=pick.randint(1, max_n - 1),
            max_cycle_len=pick.randint(2, max_n),
        )
        return random_directed_cactus(spec)
    spec = GenSpec(seed=seed, n_target=pick.randint(2, max_n), overlays=pick.randint(0, 3))
    return random_balanced_digraph(spec)


def _search_one(job):
    family, seed, max_n = job
    G = search_graph(family, seed, max_n)
    rep = analyze(G)
    return G, rep.is_cactus, [(i, j, format_rational(r), d) for i, j, r, d in rep.violations]


def run_search(graphs: int, max_n: int, seed: int, family: str, workers: int = 1):
    """Analyze ``graphs`` seeded graphs; results come back in seed order."""
    jobs = [(family, s, max_n) for s in derive_seeds(seed, graphs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_search_one, jobs, chunksize=8))
    return [_search_one(job) for job in jobs]


def cmd_search(args, out) -> int:
    if args.graphs < 1:
        raise UsageError("--graphs must be at least 1")
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    results = run_search(args.graphs, args.max_n, args.seed, args.family, args.workers)
    bad = [(G, v) for G, _, v in results if v]
    pairs = sum(len(v) for _, v in bad)
    kind = "theorem check" if args.family == "cactus" else "conjecture check"
    print(f"family = {args.family} ({kind})", file=out)
    print(f"graphs = {len(results)}", file=out)
    print(f"cacti = {sum(1 for _, c, _ in results if c)}", file=out)
    print(f"violating graphs = {len(bad)}", file=out)
    print(f"violating pairs = {pairs}", file=out)
    if bad:
        G, v = bad[0]
        print("first violating graph:", file=out)
        out.write(format_edge_list(G))
        for i, j, r, d in v:
            print(f"violation: r_{i},{j} = {r} > d = {d}", file=out)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.kind == "cycle":
        G = directed_cycle(args.n)
    elif args.kind == "cactus":
        G = random_directed_cactus(
            GenSpec(seed=args.seed, cycle_count=args.cycles, max_cycle_len=args.max_len,
                    n_target=args.max_n)
        )
    else:
        G = random_balanced_digraph(GenSpec(seed=args.seed, n_target=args.n, overlays=args.overlays))
    out.write(format_edge_list(G))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    G = _read_graph(args.file)
    oracle.check_guard(G)
    require_balanced(G)
    rows = []
    if args.root is not None:
        G.check_vertex(args.root)
        det = int(determinant(complement_minor(laplacian(G), {args.root}, {args.root})))
        count, _ = oracle.enumerate_rooted_spanning_trees(G, args.root)
        rows.append((f"trees rooted at {args.root}", det, count))
    if args.pair is not None:
        i, j = args.pair
        det = two_forest_count(G, i, j)
        rows.append((f"two-tree forests rooted at {i},{j}", det, oracle.two_tree_count(G, i, j)))
    if not rows:
        raise UsageError("give --root i and/or --pair i j")
    ok = True
    for label, det, count in rows:
        match = det == count
        ok &= match
        print(f"{label}: det = {det}, enumeration = {count}, {'match' if match else 'MISMATCH'}",
              file=out)
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cactusres", description="Exact resistance distances on balanced digraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="print L+, R, D, kappa and the cactus flag")
    a.add_argument("file")
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--decimal", type=int, metavar="DIGITS")
    a.add_argument("--force", action="store_true", help=f"lift the n <= {MAX_DIM} guard")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("file")
    v.add_argument("--force", action="store_true", help=f"lift the n <= {MAX_DIM} guard")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="look for r > d on seeded random graphs")
    s.add_argument("--graphs", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--family", choices=["cactus", "general"], default="general")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)

    g = sub.add_parser("gen", help="write a generated graph in edge-list format")
    gsub = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gc = gsub.add_parser("cycle")
    gc.add_argument("--n", type=int, required=True)
    gk = gsub.add_parser("cactus")
    gk.add_argument("--cycles", type=int, required=True)
    gk.add_argument("--max-len", type=int, required=True)
    gk.add_argument("--seed", type=int, default=0)
    gk.add_argument("--max-n", type=int, default=None)
    gb = gsub.add_parser("balanced")
    gb.add_argument("--n", type=int, required=True)
    gb.add_argument("--overlays", type=int, default=0)
    gb.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    o = sub.add_parser("oracle", help="compare determinants with brute-force counts")
    o.add_argument("file")
    o.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"))
    o.add_argument("--root", type=int)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IdentityMismatchError as exc:
        print(f"identity mismatch: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except CactusResError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
