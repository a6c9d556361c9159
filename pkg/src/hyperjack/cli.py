"""Command line entry point: ``hyperjack verify|jack|hyperdet|vandermonde``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import load_grid
from .exact import as_rational, rational_str
from .hyperdet import STRATEGIES, HyperTensor, det
from .identities import REGISTRY, CapExceeded, run_grid, schur_expand_vandermonde, vanishing_schur_coefficients
from .jack import jack_J, jack_P, jack_Q
from .laurent import vandermonde
from .partitions import Partition
from .symfunc import BASES, SymFunc, convert


def _partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    return Partition(int(x) for x in text.split(","))


def _dump(obj, out=None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _cmd_verify(args) -> int:
    ids = args.id or list(REGISTRY)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        print(f"unknown identity id(s): {', '.join(unknown)}", file=sys.stderr)
        return 2
    cfg = load_grid(args.grid)
    report = run_grid(ids, cfg, threads=args.threads)
    for id_, s in report["summary"].items():
        mark = "ok  " if s["ok"] else "FAIL"
        extra = f" c={s['constant']}" if s["status"] == "constant" else ""
        print(f"{mark} {id_:<14} {s['status']}{extra}  equal {s['equal']}/{s['attempted']}"
              f"  nondegenerate {s['nondegenerate']}  skipped {s['skipped']}")
    if args.out:
        _dump(report, args.out)
    return 0 if report["ok"] else 1


def _cmd_jack(args) -> int:
    lam = _partition(args.partition)
    alpha = as_rational(args.alpha)
    f = {"P": jack_P, "Q": jack_Q, "J": jack_J}[args.norm](lam, alpha)
    _dump(convert(f, args.basis).to_json())
    return 0


def _cmd_hyperdet(args) -> int:
    data = json.loads(Path(args.tensor).read_text())
    value = det(HyperTensor.from_json(data), args.strategy, workers=args.workers)
    if isinstance(value, SymFunc):
        _dump(convert(value, "m").to_json())
    else:
        print(rational_str(value))
    return 0


def _cmd_vandermonde(args) -> int:
    if not args.schur:
        _dump((vandermonde(args.n) ** (2 * args.k)).to_json())
        return 0
    try:
        coeffs = schur_expand_vandermonde(args.n, args.k, args.method, max_n=args.max_n, max_k=args.max_k)
        vanishing = vanishing_schur_coefficients(args.n, args.k) if args.vanishing else None
    except CapExceeded as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return 1
    out = {"n": args.n, "k": args.k, "coefficients": [
        {"partition": list(lam), "coeff": rational_str(c)} for lam, c in coeffs.items()]}
    if vanishing is not None:
        out["vanishing"] = [list(lam) for lam in vanishing]
    _dump(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperjack")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity suite over a parameter grid")
    v.add_argument("--id", action="append", help="identity id (repeatable); default: all")
    v.add_argument("--grid", default="default", help="default, small, or a JSON file of grid fields")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--out", help="write the JSON report here")
    v.set_defaults(func=_cmd_verify)

    j = sub.add_parser("jack", help="print a Jack polynomial")
    j.add_argument("--alpha", required=True, help="rational, e.g. 2 or 1/2")
    j.add_argument("--partition", required=True, help="comma separated parts, e.g. 2,1")
    j.add_argument("--norm", choices=("P", "Q", "J"), default="P")
    j.add_argument("--basis", choices=BASES, default="m")
    j.set_defaults(func=_cmd_jack)

    h = sub.add_parser("hyperdet", help="hyperdeterminant of a tensor given as JSON")
    h.add_argument("--tensor", required=True)
    h.add_argument("--strategy", choices=STRATEGIES, default="collect")
    h.add_argument("--workers", type=int, default=1)
    h.set_defaults(func=_cmd_hyperdet)

    d = sub.add_parser("vandermonde", help="expand Delta^(2k), optionally on Schur functions")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--schur", action="store_true")
    d.add_argument("--method", choices=("alternant", "scalar", "both"), default="alternant")
    d.add_argument("--vanishing", action="store_true", help="also list shapes with zero coefficient")
    d.add_argument("--max-n", type=int, default=4)
    d.add_argument("--max-k", type=int, default=2)
    d.set_defaults(func=_cmd_vandermonde)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    return args.func(args)
