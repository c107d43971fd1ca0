"""Command-line front end: ``arbor <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import io
from .certificates import ColoringCertificate, CoverCertificate, verify_certificate, verify_coloring
from .classes import ForestClass
from .constructive import (
    StarDecomposition, acyclic_matching_cover, acyclic_pairs_cover, degeneracy_star_cover,
    leaf_color_split, shallow_minor_coloring, split_layers,
)
from .generators import FAMILIES
from .graph import Graph
from .solver import (
    EXHAUSTED_S, FEASIBLE_S, PARAMETERS, Budget, SolveRequest, SolveResult,
    acyclic_chromatic_number, chromatic_number, compute_parameters, edge_chromatic_number, solve,
)
from .solver.engine import DEFAULT_TIME_LIMIT, default_node_limit

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 64, 65

CLASS_TAGS = [c.tag for c in ForestClass]
COLORING_PARAMS = {
    "chromatic": chromatic_number,
    "acyclic": acyclic_chromatic_number,
    "edge": edge_chromatic_number,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_bound(text: str) -> tuple[int, int]:
    try:
        v, t = text.split(":")
        return int(v), int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected VERTEX:COUNT, got {text!r}")


def _forest_class(text: str) -> ForestClass:
    try:
        return ForestClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(text: str, path: Optional[str]) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        io.write_text(path, text)


def _budget(args) -> Budget:
    return Budget(args.budget_nodes, args.budget_seconds)


def _report(res: SolveResult) -> None:
    lo, hi = res.bounds
    print(f"# status={res.status} nodes={res.nodes} seconds={res.seconds:.3f} bounds=[{lo},{hi}]",
          file=sys.stderr)


def _solve_args(p: argparse.ArgumentParser, need_k: bool) -> None:
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", type=_forest_class, required=need_k,
                   help="one of " + ", ".join(CLASS_TAGS) + " (long names accepted)")
    p.add_argument("--mode", choices=("cover", "partition"), default="cover")
    if need_k:
        p.add_argument("-k", type=int, required=True)
    p.add_argument("--load-cap", type=_load_bound, action="append", default=[], metavar="V:T")
    p.add_argument("--load-floor", type=_load_bound, action="append", default=[], metavar="V:T")
    p.add_argument("--no-symmetry", action="store_true", help="disable part symmetry breaking")
    p.add_argument("-o", "--output", help="certificate file")


def _request(args, G: Graph, k: Optional[int]) -> SolveRequest:
    try:
        return SolveRequest(G, args.cls, args.mode, k=k,
                            load_caps=dict(args.load_cap), load_floors=dict(args.load_floor),
                            budget=_budget(args), symmetry=not args.no_symmetry, kernel=args.kernel)
    except ValueError as exc:
        raise UsageError(str(exc))


def _write_cert(res: SolveResult, path: Optional[str]) -> None:
    if path and res.certificate is not None:
        if isinstance(res.certificate, CoverCertificate):
            io.write_text(path, io.format_certificate(res.certificate))
        else:
            io.write_text(path, io.format_coloring(res.certificate))


# -- subcommands ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    fam = FAMILIES[args.family]
    if len(args.params) != fam.nargs:
        raise UsageError(f"{args.family} takes {fam.nargs} integer parameter(s)")
    extra = (args.seed,) if fam.seeded else ()
    try:
        G, roles = fam.build(*args.params, *extra)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(io.format_graph(G), args.output)
    if args.roles:
        if roles is None:
            raise UsageError(f"{args.family} has no vertex roles")
        io.write_text(args.roles, io.format_roles(roles))
    return EXIT_OK


def cmd_param(args) -> int:
    G = io.read_graph(args.graph)
    if (args.cls is None) == (args.coloring is None):
        raise UsageError("give exactly one of --class or --coloring")
    if args.coloring:
        res = COLORING_PARAMS[args.coloring](G, _budget(args))
    else:
        res = solve(_request(args, G, None))
    _report(res)
    if res.status == FEASIBLE_S:
        print(res.k)
        _write_cert(res, args.output)
    else:
        print(res.status)
    return res.exit_code


def cmd_decide(args) -> int:
    G = io.read_graph(args.graph)
    res = solve(_request(args, G, args.k))
    _report(res)
    print(res.status)
    _write_cert(res, args.output)
    return res.exit_code


def _coloring_or_exact(G: Graph, path: Optional[str], kind: str) -> ColoringCertificate:
    if path:
        return io.parse_coloring(io.read_text(path))
    fn = acyclic_chromatic_number if kind == "acyclic-vertex" else chromatic_number
    res = fn(G)
    if res.status != FEASIBLE_S:
        raise UsageError(f"could not compute a {kind} colouring within budget; pass --coloring")
    return res.certificate


def cmd_build(args) -> int:
    G = io.read_graph(args.graph)
    if args.op in ("layers", "leaf-split", "minor-coloring") and not args.cert:
        raise UsageError(f"build {args.op} needs --cert")
    try:
        if args.op == "layers":
            out = split_layers(G, io.parse_certificate(io.read_text(args.cert)), args.modulus)
        elif args.op == "degen":
            _, out = degeneracy_star_cover(G)
        elif args.op == "acyclic-pairs":
            out = acyclic_pairs_cover(G, _coloring_or_exact(G, args.coloring, "acyclic-vertex"))
        elif args.op == "acyclic-matchings":
            out = acyclic_matching_cover(G, _coloring_or_exact(G, args.coloring, "acyclic-vertex"))
        elif args.op == "leaf-split":
            stars = io.parse_certificate(io.read_text(args.cert))
            out = leaf_color_split(G, stars, _coloring_or_exact(G, args.coloring, "proper-vertex"))
        else:
            if not (args.stars and args.minor):
                raise UsageError("build minor-coloring needs --stars and --minor")
            H = io.read_graph(args.minor)
            dec = StarDecomposition(tuple(io.parse_stars(io.read_text(args.stars))), H.edges)
            phi = _coloring_or_exact(G, args.coloring, "proper-vertex")
            isa = io.parse_certificate(io.read_text(args.cert))
            out = shallow_minor_coloring(G, dec, phi, isa)
    except io.FormatError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if isinstance(out, CoverCertificate):
        _emit(io.format_certificate(out), args.output)
        print(f"# {out.k} parts, {out.cls.long_name}, {verify_certificate(G, out).summary()}",
              file=sys.stderr)
    else:
        _emit(io.format_coloring(out), args.output)
        print(f"# {out.colors_used} colours used, codes up to {out.c}", file=sys.stderr)
    return EXIT_OK


def cmd_certify(args) -> int:
    G = io.read_graph(args.graph)
    text = io.read_text(args.certificate)
    head = text.split(None, 1)[0] if text.strip() else ""
    if head == "col":
        col = io.parse_coloring(text)
        try:
            ok = verify_coloring(G, col)
        except ValueError as exc:
            print(f"invalid: {exc}")
            return EXIT_FAIL
        print("valid" if ok else f"invalid: not a {col.kind} colouring")
        return EXIT_OK if ok else EXIT_FAIL
    cert = io.parse_certificate(text)
    rep = verify_certificate(G, cert)
    print(f"{cert.mode} by {cert.k} {cert.cls.long_name} parts: {rep.summary()}")
    for i, good in enumerate(rep.part_valid, 1):
        if not good:
            print(f"  part {i}: invalid")
    for u, v in rep.missing:
        print(f"  missing {u}-{v}")
    if args.loads:
        for v in G.vertices:
            print(f"  load {v} {rep.loads.get(v, 0)}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_chain(args) -> int:
    G = io.read_graph(args.graph)
    rep = compute_parameters(G, _budget(args))
    for p in PARAMETERS:
        res = rep.results.get(p)
        print(f"{p} {rep.values[p] if p in rep.values else (res.status if res else '-')}")
    for v in rep.violations:
        print(f"violated: {v}")
    if rep.violations:
        return EXIT_FAIL
    if any(r.status == EXHAUSTED_S for r in rep.results.values()):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .reproduce import reproduce

    failed = False
    for row in reproduce(args.extended, args.seed, args.only):
        print(row.line(), flush=True)
        failed |= row.gating and not row.passed
    return EXIT_FAIL if failed else EXIT_OK


_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan",
            "gold", "gray40", "navy", "olive")


def to_dot(G: Graph, cert: Optional[CoverCertificate] = None) -> str:
    owners: dict = {}
    if cert is not None:
        for i, part in enumerate(cert.parts, 1):
            for e in part:
                owners.setdefault(e, []).append(i)
    lines = ["graph G {"]
    lines += [f"  {v};" for v in G.vertices]
    for u, v in G.edges:
        parts = owners.get((u, v))
        if parts:
            colour = _PALETTE[(parts[0] - 1) % len(_PALETTE)]
            label = ",".join(map(str, parts))
            lines.append(f'  {u} -- {v} [color={colour}, label="{label}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_dot(args) -> int:
    G = io.read_graph(args.graph)
    cert = io.parse_certificate(io.read_text(args.cert)) if args.cert else None
    _emit(to_dot(G, cert), args.output)
    return EXIT_OK


# -- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arbor", description="Exact and constructive induced arboricity tools.")
    p.add_argument("--budget-nodes", type=int, default=default_node_limit(),
                   help="search node limit per decision (env ARBOR_BUDGET_NODES)")
    p.add_argument("--budget-seconds", type=float, default=DEFAULT_TIME_LIMIT)
    p.add_argument("--kernel", choices=("auto", "python", "cython"), default="auto")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a generated graph")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("params", type=int, nargs="*")
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--roles", help="also write a role sidecar file")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    q = sub.add_parser("param", help="compute an optimum cover or colouring number")
    _solve_args(q, need_k=False)
    q.add_argument("--coloring", choices=sorted(COLORING_PARAMS),
                   help="compute a colouring number instead of a cover")
    q.set_defaults(func=cmd_param)

    d = sub.add_parser("decide", help="decide whether k parts suffice")
    _solve_args(d, need_k=True)
    d.set_defaults(func=cmd_decide)

    b = sub.add_parser("build", help="run a constructive upper-bound builder")
    b.add_argument("op", choices=("layers", "degen", "acyclic-pairs", "acyclic-matchings",
                                  "leaf-split", "minor-coloring"))
    b.add_argument("graph")
    b.add_argument("--cert", help="input cover certificate")
    b.add_argument("--coloring", help="input colouring (computed exactly when omitted)")
    b.add_argument("--modulus", type=int, choices=(2, 3), default=2)
    b.add_argument("--stars", help="star decomposition file")
    b.add_argument("--minor", help="graph file of the minor")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("certify", help="verify a cover certificate or colouring")
    c.add_argument("graph")
    c.add_argument("certificate")
    c.add_argument("--loads", action="store_true", help="print per-vertex loads")
    c.set_defaults(func=cmd_certify)

    ch = sub.add_parser("chain", help="compute all parameters and check their inequalities")
    ch.add_argument("graph")
    ch.set_defaults(func=cmd_chain)

    r = sub.add_parser("reproduce", help="run the acceptance table")
    r.add_argument("--extended", action="store_true", help="include long-running rows")
    r.add_argument("--seed", type=int, default=1)
    r.add_argument("--only", nargs="+", metavar="KEY")
    r.set_defaults(func=cmd_reproduce)

    dt = sub.add_parser("dot", help="render a graph (and optional certificate) as DOT")
    dt.add_argument("graph")
    dt.add_argument("--cert")
    dt.add_argument("-o", "--output")
    dt.set_defaults(func=cmd_dot)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors 64
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    if args.kernel == "auto":
        args.kernel = None
    try:
        return args.func(args)
    except io.FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (UsageError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))
