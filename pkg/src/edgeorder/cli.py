"""Command-line interface.

Every command that reads a complex accepts a file path, ``-`` for standard
input, or the name of a built-in complex (``boundary4simplex``, ``rp2-6``,
``torus-7``, ``ovs-rp2-7``) when no file of that name exists.

Exit status: 0 on success, 1 when a check or construction fails, 2 on
parse or usage errors.
"""
from __future__ import annotations

import argparse
import os
import random
import sys

from . import constructions as C
from .complex import FVector, SimplicialComplex
from .errors import (
    BadDimension,
    BadParam,
    ComplexError,
    DegenerateFacet,
    EmptyComplex,
    InvalidLabel,
    MixedDimension,
    NotAFace,
    ParseError,
    UnknownName,
)
from .invariants import analyze, km_formula, km_sweep, stats_from_fvector
from .io import (
    decimal_string,
    dump_facets,
    parse_facet_file,
    render_km,
    render_normality,
    render_report,
    render_stats,
)
from .isomorphism import are_isomorphic
from .normality import is_normal_pseudomanifold

USAGE_ERRORS = (ParseError, MixedDimension, DegenerateFacet, InvalidLabel, EmptyComplex, UnknownName, BadParam)


class UsageError(Exception):
    pass


def read_complex(source: str) -> SimplicialComplex:
    if source == "-":
        return parse_facet_file(sys.stdin.read())
    if not os.path.exists(source) and source in C.GENERATORS and source != "stacked":
        return C.generate(source)
    try:
        with open(source, encoding="utf-8") as fh:
            return parse_facet_file(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def write_complex(K: SimplicialComplex, out: str | None) -> None:
    text = dump_facets(K)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _labels(text: str) -> list[str]:
    return [x for x in text.split(",") if x]


def _face(K: SimplicialComplex, text: str):
    return K.face(_labels(text))


def _pairs(text: str) -> list[tuple[str, str]]:
    out = []
    for item in _labels(text):
        if item.count("=") != 1:
            raise UsageError(f"bad map entry {item!r}; expected a=b")
        a, b = item.split("=")
        out.append((a, b))
    return out


def cmd_check(args) -> int:
    K = read_complex(args.file)
    report = is_normal_pseudomanifold(K)
    sys.stdout.write(render_normality(K, report, "json" if args.json else "text"))
    return 0 if report.ok else 1


def cmd_analyze(args) -> int:
    status = 0
    for source in args.files:
        K = read_complex(source)
        report = is_normal_pseudomanifold(K)
        if not report.ok:
            sys.stdout.write(render_normality(K, report, "json" if args.json else "text"))
            status = 1
            continue
        sys.stdout.write(render_report(analyze(K), "json" if args.json else "text"))
    return status


def cmd_gen(args) -> int:
    rng = random.Random(args.seed) if args.seed is not None else None
    write_complex(C.generate(args.name, args.n, rng), args.output)
    return 0


def cmd_construct(args) -> int:
    if args.kind == "suspension":
        K = C.suspension(read_complex(args.files[0]))
    elif args.kind == "ovs":
        L = read_complex(args.files[0])
        if args.apex is None:
            raise UsageError("ovs needs --apex")
        K = C.one_vertex_suspension(L, L.vid(args.apex))
    else:
        if len(args.files) != 2 or not (args.facet1 and args.facet2 and args.map):
            raise UsageError("csum needs two files, --facet1, --facet2 and --map")
        K1, K2 = (read_complex(f) for f in args.files)
        pairing = {K1.vid(a): K2.vid(b) for a, b in _pairs(args.map)}
        K = C.connected_sum(K1, _face(K1, args.facet1), K2, _face(K2, args.facet2), pairing)
    write_complex(K, args.output)
    return 0


def cmd_move(args) -> int:
    K = read_complex(args.file)
    if args.kind == "23":
        if not args.triangle:
            raise UsageError("move 23 needs --triangle")
        out = C.bistellar_1_move(K, _face(K, args.triangle))
    else:
        if not args.facet:
            raise UsageError("move 14 needs --facet")
        out = C.bistellar_0_move(K, _face(K, args.facet))
    write_complex(out, args.output)
    return 0


def cmd_contract(args) -> int:
    K = read_complex(args.file)
    u, v = _labels(args.edge)
    write_complex(C.edge_contraction(K, (K.vid(u), K.vid(v))), args.output)
    return 0


def cmd_expand(args) -> int:
    K = read_complex(args.file)
    out = C.edge_expansion(K, K.vid(args.vertex), [K.vid(x) for x in _labels(args.cycle)])
    write_complex(out, args.output)
    return 0


def cmd_fold(args) -> int:
    K = read_complex(args.file)
    apex = _labels(args.apex if args.kind == "vertex" else args.edge or "")
    if not apex:
        raise UsageError("fold vertex needs --apex, fold edge needs --edge")
    fa, fb = (_face(K, x) for x in args.facets)
    pairing = {K.vid(a): K.vid(b) for a, b in _pairs(args.map)}
    spec = C.FoldSpec(K.face(apex), fa, fb, pairing)
    out = C.vertex_folding(K, spec) if args.kind == "vertex" else C.edge_folding(K, spec)
    write_complex(out, args.output)
    return 0


def cmd_km(args) -> int:
    if args.genus is None and args.sweep is None:
        raise UsageError("km needs --genus, --sweep or both")
    if args.genus is not None:
        sys.stdout.write(render_km(km_formula(args.genus)))
    if args.sweep is not None:
        start = 3 if args.genus is None else args.genus
        count, last = km_sweep(args.sweep, start=start)
        sys.stdout.write(
            f"sweep: mu0 < 8 for all {count} genera {start}..{args.sweep}; "
            f"mu0(K_{args.sweep}) = {last.numerator}/{last.denominator} (≈{decimal_string(last)})\n"
        )
    return 0


def cmd_iso(args) -> int:
    K1, K2 = read_complex(args.file1), read_complex(args.file2)
    witness = are_isomorphic(K1, K2)
    if witness is None:
        print("not isomorphic")
        return 1
    print("isomorphic")
    for a, b in witness.items():
        print(f"  {K1.labels[a]} -> {K2.labels[b]}")
    return 0


def cmd_stats(args) -> int:
    try:
        values = [int(x) for x in args.fvector.split(",")]
    except ValueError:
        raise UsageError("--fvector takes four integers V,E,F,T") from None
    if len(values) != 4:
        raise UsageError("--fvector takes four integers V,E,F,T")
    stats = stats_from_fvector(FVector(*values), args.neighborly)
    sys.stdout.write(render_stats(stats, "json" if args.json else "text"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgeorder", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="normality report")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("analyze", help="full invariant report")
    s.add_argument("files", nargs="+")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("gen", help="write a built-in complex")
    s.add_argument("name", choices=C.GENERATORS)
    s.add_argument("--n", type=int, help="vertex count for stacked")
    s.add_argument("--seed", type=int, help="random facet choice for stacked")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("construct", help="suspension, one-vertex suspension, connected sum")
    s.add_argument("kind", choices=("suspension", "ovs", "csum"))
    s.add_argument("files", nargs="+")
    s.add_argument("--apex")
    s.add_argument("--facet1")
    s.add_argument("--facet2")
    s.add_argument("--map")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("move", help="bistellar 2-3 or 1-4 move")
    s.add_argument("kind", choices=("23", "14"))
    s.add_argument("file")
    s.add_argument("--triangle")
    s.add_argument("--facet")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("contract", help="edge contraction")
    s.add_argument("file")
    s.add_argument("--edge", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("expand", help="edge expansion")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.add_argument("--cycle", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("fold", help="vertex or edge folding")
    s.add_argument("kind", choices=("vertex", "edge"))
    s.add_argument("file")
    s.add_argument("--apex")
    s.add_argument("--edge")
    s.add_argument("--facets", nargs=2, required=True, metavar=("A", "B"))
    s.add_argument("--map", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fold)

    s = sub.add_parser("km", help="minimal genus-m surface suspension counts")
    s.add_argument("--genus", type=int)
    s.add_argument("--sweep", type=int, metavar="MAX")
    s.set_defaults(func=cmd_km)

    s = sub.add_parser("iso", help="isomorphism test with witness")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("stats", help="invariants from an f-vector alone")
    s.add_argument("--fvector", required=True)
    s.add_argument("--neighborly", type=int, choices=(2, 3))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, *USAGE_ERRORS, NotAFace, BadDimension) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComplexError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
