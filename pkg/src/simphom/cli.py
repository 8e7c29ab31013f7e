"""Command-line interface.

Exit codes: 0 success, 1 computation-domain error (foreign simplex,
dimension mismatch, malformed permutation), 2 usage error (bad arguments,
unreadable input, unknown builtin, unparsable chain or complex file).

Chains starting with ``-`` must follow ``--`` so argparse does not read
them as options, e.g. ``simphom check-cycle --builtin torus -- -[v0,v1]``.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io as sio
from .chains import Chain
from .core import complex_from_maximal, inversions, parity
from .errors import HomologyError, ParseError, UnknownBuiltin
from .homology import bounding_chain, boundary_chain, carried_by, homologous, is_cycle

USAGE_ERROR = 2
DOMAIN_ERROR = 1


class _UsageError(Exception):
    pass


def _add_input(sp, required=True):
    group = sp.add_mutually_exclusive_group(required=required)
    group.add_argument("--file", metavar="PATH", help="complex file (maximal simplices, one per line)")
    group.add_argument("--builtin", metavar="NAME", help="builtin fixture, see list-builtins")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simphom", description="Integral simplicial homology.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("homology", help="homology groups H_p with betti numbers and torsion")
    _add_input(sp)
    sp.add_argument("--dim", type=int, help="only report this dimension")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("betti", help="betti numbers")
    _add_input(sp)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("boundary-matrix", help="matrix of the boundary map out of dimension --dim")
    _add_input(sp)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--canonical", action="store_true", help="ignore a builtin's declared basis order")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("parity", help="sign of a permutation of 0..p by inversion count")
    sp.add_argument("perm", nargs="+", type=int)
    sp.add_argument("--json", action="store_true")

    for name, helptext in (("check-cycle", "is the chain a cycle?"), ("check-boundary", "is the chain a boundary?")):
        sp = sub.add_parser(name, help=helptext)
        _add_input(sp)
        sp.add_argument("chain")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("homologous", help="do two chains differ by a boundary?")
    _add_input(sp)
    sp.add_argument("chain1")
    sp.add_argument("chain2")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("carried-by", help="is the chain supported in a subcomplex?")
    _add_input(sp)
    sp.add_argument("chain")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--sub", metavar="TEXT", help="subcomplex maximal simplices, ';'-separated")
    grp.add_argument("--sub-file", metavar="PATH")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("list-builtins", help="names of builtin fixtures")
    sp.add_argument("--json", action="store_true")
    return parser


def _load(args) -> sio.ComplexDocument:
    if args.builtin is not None:
        return sio.builtin(args.builtin)
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _UsageError(f"cannot read {args.file}: {exc}") from exc
    return sio.parse_complex(text, name=args.file)


def _chain(doc, text, dim=None) -> Chain:
    return sio.parse_chain(text, sio.document_resolver(doc), dim=dim)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_homology(args):
    doc = _load(args)
    dims = None if args.dim is None else [args.dim]
    report = sio.homology_report(doc, dims)
    _emit(args, report.to_dict(), report.format_text())


def _cmd_betti(args):
    doc = _load(args)
    report = sio.homology_report(doc, None if args.dim is None else [args.dim])
    betti = [e["betti"] for e in report.entries]
    _emit(args, {"complex": doc.name, "betti": betti}, " ".join(map(str, betti)))


def _cmd_boundary_matrix(args):
    doc = _load(args)
    bm = doc.boundary_matrix(args.dim, canonical=args.canonical)
    names = doc.vertex_names
    payload = {
        "complex": doc.name,
        "p": bm.p,
        "shape": list(bm.shape),
        "rows": [[names[v] for v in s.ordering()] for s in bm.rows],
        "cols": [[names[v] for v in s.ordering()] for s in bm.cols],
        "entries": [list(t) for t in bm.triplets()],
    }
    _emit(args, payload, bm.format_grid(names))


def _cmd_parity(args):
    sign = parity(args.perm)
    n = inversions(args.perm)
    kind = "even" if sign > 0 else "odd"
    payload = {"permutation": args.perm, "sign": sign, "parity": kind, "inversions": n}
    _emit(args, payload, f"{sign:+d} ({kind}, {n} inversions)")


def _cmd_check_cycle(args):
    doc = _load(args)
    K = doc.to_complex()
    c = _chain(doc, args.chain)
    ok = is_cycle(K, c)
    bd = boundary_chain(c).format(doc.vertex_names)
    payload = {"chain": c.format(doc.vertex_names), "is_cycle": ok, "boundary": bd}
    _emit(args, payload, f"{'true' if ok else 'false'} (boundary: {bd})")


def _cmd_check_boundary(args):
    doc = _load(args)
    K = doc.to_complex()
    c = _chain(doc, args.chain)
    w = bounding_chain(K, c)
    payload = {
        "chain": c.format(doc.vertex_names),
        "is_boundary": w is not None,
        "witness": None if w is None else w.format(doc.vertex_names),
    }
    text = "false" if w is None else f"true (boundary of {w.format(doc.vertex_names)})"
    _emit(args, payload, text)


def _cmd_homologous(args):
    doc = _load(args)
    K = doc.to_complex()
    t1, t2 = args.chain1.strip(), args.chain2.strip()
    if t1 == "0" and t2 == "0":
        raise _UsageError("at least one chain must be nonzero")
    c1 = None if t1 == "0" else _chain(doc, t1)
    c2 = Chain(c1.dim) if t2 == "0" else _chain(doc, t2)
    if c1 is None:
        c1 = Chain(c2.dim)
    ok = homologous(K, c1, c2)
    w = bounding_chain(K, c1 - c2) if ok else None
    payload = {
        "chain1": c1.format(doc.vertex_names),
        "chain2": c2.format(doc.vertex_names),
        "homologous": ok,
        "witness": None if w is None else w.format(doc.vertex_names),
    }
    text = "false" if not ok else f"true (difference bounds {w.format(doc.vertex_names)})"
    _emit(args, payload, text)


def _cmd_carried_by(args):
    doc = _load(args)
    c = _chain(doc, args.chain)
    if args.sub is not None:
        sub_text = args.sub.replace(";", "\n")
    else:
        try:
            with open(args.sub_file, encoding="utf-8") as fh:
                sub_text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise _UsageError(f"cannot read {args.sub_file}: {exc}") from exc
    sub_doc = sio.parse_complex(sub_text, name="subcomplex")
    L = complex_from_maximal([[doc.vertex_id(v) for v in s] for s in sub_doc.maximal_simplices])
    ok = carried_by(c, L)
    _emit(args, {"chain": c.format(doc.vertex_names), "carried_by": ok}, "true" if ok else "false")


def _cmd_list_builtins(args):
    _emit(args, {"builtins": list(sio.BUILTIN_NAMES)}, "\n".join(sio.BUILTIN_NAMES))


_COMMANDS = {
    "homology": _cmd_homology,
    "betti": _cmd_betti,
    "boundary-matrix": _cmd_boundary_matrix,
    "parity": _cmd_parity,
    "check-cycle": _cmd_check_cycle,
    "check-boundary": _cmd_check_boundary,
    "homologous": _cmd_homologous,
    "carried-by": _cmd_carried_by,
    "list-builtins": _cmd_list_builtins,
}


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        _COMMANDS[args.command](args)
    except (_UsageError, UnknownBuiltin, ParseError) as exc:
        print(f"simphom: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except HomologyError as exc:
        print(f"simphom: error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
