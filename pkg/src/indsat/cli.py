"""Command-line interface.

Exit codes: 0 success, 1 the checked property fails, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional

from . import graph6
from .gf2k import BinaryField
from .graph import Graph, cayley_graph, find_path_around, pair
from .saturation import SaturationCertificate, check_certificate, verify_induced_saturated
from .search import Family, SearchSpace, run_search
from .symmetry import affine_group, identity, is_automorphism, pair_orbits

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 20161


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _path_length(text: str) -> int:
    n = _int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("path length must be >= 2")
    return n


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_graph(path: str) -> Graph:
    lines = [ln.strip() for ln in _read_text(path).splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"no graph6 data in {path}")
    try:
        return graph6.decode(lines[0])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _write(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _field(args) -> BinaryField:
    try:
        return BinaryField(args.field_bits, args.modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _element_set(field: BinaryField, spec: str, *, name: str) -> list[int]:
    if spec == "cubes":
        return sorted(field.nonzero_cubes())
    try:
        values = [int(tok, 0) for tok in spec.replace(",", " ").split()]
        return sorted({field.check(v) for v in values})
    except ValueError as exc:
        raise UsageError(f"bad {name} {spec!r}: {exc}") from exc


def _generators(args, g: Graph):
    """Affine generators from the field flags, or the identity."""
    if not args.affine:
        return [identity(g.n)]
    field = _field(args)
    if field.order != g.n:
        raise UsageError(f"graph has {g.n} vertices but the field has {field.order} elements")
    mults = _element_set(field, args.multipliers, name="multipliers")
    if 0 in mults:
        raise UsageError("multipliers must be non-zero")
    return affine_group(field, mults)


def cmd_construct(args) -> int:
    field = _field(args)
    conn = _element_set(field, args.connection, name="connection")
    if 0 in conn:
        raise UsageError("connection set must not contain 0")
    g = cayley_graph(field, conn)
    _write(args, graph6.to_json(g) if args.format == "json" else graph6.encode(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.input)
    args.affine = args.affine or args.orbits
    gens = _generators(args, g) if args.orbits else None
    if gens is not None:
        bad = [i for i, p in enumerate(gens) if not is_automorphism(g, p)]
        if bad:
            print(f"error: generator {bad[0]} is not an automorphism of the graph", file=sys.stderr)
            return EXIT_FAIL
    verdict, cert = verify_induced_saturated(g, args.path_length, gens)
    if cert is None:
        _write(args, _dump({"verdict": verdict.to_dict(), "graph": graph6.encode(g),
                            "n": args.path_length}))
        return EXIT_FAIL
    for warning in cert.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    _write(args, cert.to_json())
    return EXIT_OK


def cmd_witness(args) -> int:
    g = _read_graph(args.input)
    try:
        u, v = (int(t, 0) for t in args.pair.split(","))
        u, v = pair(g.check_vertex(u), g.check_vertex(v))
    except ValueError as exc:
        raise UsageError(f"bad pair {args.pair!r}: {exc}") from exc
    was_edge = g.has_edge(u, v)
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    if was_edge:
        path = find_path_around(rows, (u,), args.path_length, must=1 << v)
    else:
        path = find_path_around(rows, (u, v), args.path_length)
    out = {"pair": [u, v], "was_edge": was_edge, "n": args.path_length,
           "path": None if path is None else list(path),
           "witness": None if path is None else [x for x in path if x not in (u, v)]}
    _write(args, _dump(out))
    return EXIT_OK if path is not None else EXIT_FAIL


def cmd_orbits(args) -> int:
    g = _read_graph(args.input)
    gens = _generators(args, g)
    for i, perm in enumerate(gens):
        if not is_automorphism(g, perm):
            print(f"error: generator {i} is not an automorphism of the graph", file=sys.stderr)
            return EXIT_FAIL
    out = {
        "graph": graph6.encode(g),
        "group_generators": len(gens),
        "edge_orbits": [o.to_dict() for o in pair_orbits(g, gens, g.edges(), check=False)],
        "non_edge_orbits": [o.to_dict() for o in pair_orbits(g, gens, g.non_edges(), check=False)],
    }
    _write(args, _dump(out))
    return EXIT_OK


def cmd_search(args) -> int:
    family = {"cayley": Family.CAYLEY_Z2K, "circulant": Family.CIRCULANT,
              "all": Family.ALL_GRAPHS}[args.family]
    try:
        space = SearchSpace(family, n=args.path_length,
                            k=args.field_bits if family is Family.CAYLEY_Z2K else None,
                            modulus=args.modulus if family is Family.CAYLEY_Z2K else None,
                            m=args.vertices, max_candidates=args.max_candidates,
                            time_budget=args.time_budget, sample=args.sample,
                            seed=args.seed, allow_large=args.allow_large)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_search(space, jobs=args.jobs)
    _write(args, report.to_json())
    if args.hits_file:
        with open(args.hits_file, "w") as fh:
            fh.writelines(g6 + "\n" for g6 in report.hit_graphs())
    print(f"{report.candidates_examined} candidates, {len(report.hits)} hits, "
          f"exhausted={report.exhausted}", file=sys.stderr)
    return EXIT_OK


def cmd_check_cert(args) -> int:
    try:
        cert = SaturationCertificate.from_json(_read_text(args.certificate))
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse certificate: {exc}") from exc
    try:
        g = _read_graph(args.graph) if args.graph else graph6.decode(cert.graph)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        ok = check_certificate(cert, g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--seed", type=_int, default=DEFAULT_SEED,
                        help="seed for any random sampling")
    common.add_argument("--verbose", "-v", action="store_true")

    field_flags = argparse.ArgumentParser(add_help=False)
    field_flags.add_argument("--field-bits", type=_int, default=4, metavar="K")
    field_flags.add_argument("--modulus", type=_int, default=0x13, metavar="HEX",
                             help="field polynomial as a bitmask, e.g. 0x13 for x^4+x+1")

    group_flags = argparse.ArgumentParser(add_help=False)
    group_flags.add_argument("--affine", action="store_true",
                             help="use the maps x -> a*x + b of the field as automorphisms")
    group_flags.add_argument("--multipliers", default="cubes",
                             help="'cubes' or a list of element masks")

    parser = argparse.ArgumentParser(prog="indsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, field_flags],
                       help="build a Cayley graph of GF(2^k)")
    p.add_argument("--connection", default="cubes",
                   help="'cubes' or a comma-separated list of element masks")
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common, field_flags, group_flags],
                       help="decide P_n-induced-saturation and emit a certificate")
    p.add_argument("input", help="graph6 file, or - for stdin")
    p.add_argument("--path-length", "-n", type=_path_length, required=True)
    p.add_argument("--orbits", action=argparse.BooleanOptionalAction, default=False,
                   help="check one pair per orbit of the affine group")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", parents=[common],
                       help="induced path created by flipping one pair")
    p.add_argument("input", help="graph6 file, or - for stdin")
    p.add_argument("--path-length", "-n", type=_path_length, required=True)
    p.add_argument("--pair", required=True, metavar="U,V")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("orbits", parents=[common, field_flags, group_flags],
                       help="orbits of an automorphism group on edges and non-edges")
    p.add_argument("input", help="graph6 file, or - for stdin")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("search", parents=[common, field_flags],
                       help="search a graph family for saturated graphs")
    p.add_argument("--family", choices=("cayley", "circulant", "all"), required=True)
    p.add_argument("--path-length", "-n", type=_path_length, required=True)
    p.add_argument("--vertices", "-m", type=_int, help="vertex count for circulant/all")
    p.add_argument("--jobs", "-j", type=_int, default=1)
    p.add_argument("--max-candidates", type=_int)
    p.add_argument("--time-budget", type=float, metavar="SECONDS")
    p.add_argument("--sample", type=_int, help="examine this many random candidates")
    p.add_argument("--allow-large", action="store_true", help="permit all graphs on 8 vertices")
    p.add_argument("--hits-file", help="write hit graphs here, one graph6 per line")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check-cert", parents=[common], help="re-validate a certificate")
    p.add_argument("certificate", help="certificate JSON file, or - for stdin")
    p.add_argument("--graph", help="graph6 file the certificate must match")
    p.set_defaults(func=cmd_check_cert)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
