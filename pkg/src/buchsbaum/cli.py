"""Command-line interface.

Exit codes: 0 success, 1 a semantic failure (not realizable, a check or a
certificate failed), 2 bad input. JSON goes to stdout by default; with
``--format text`` the human-readable lines go there instead. In JSON mode
the one-line summary of each command is echoed on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from buchsbaum import oracle
from buchsbaum.complex import ComplexError, SimplicialComplex
from buchsbaum.fileio import atomic_write, format_json, format_text, read_complex
from buchsbaum.homology import FIELDS, Field, parse_field
from buchsbaum.hvec import NonPositiveInput, macaulay_rep
from buchsbaum.properties import property_report
from buchsbaum.realizer import (
    ConstructionInvariantViolated,
    NotRealizable,
    realize,
    sweep,
)

OK, FAIL, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _fields(choice: str) -> tuple[Field, ...]:
    if choice.lower() == "both":
        return FIELDS
    try:
        return (parse_field(choice),)
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.format == "text":
        for line in lines:
            print(line)
        return
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if lines:
        print(lines[0], file=sys.stderr)


def _yn(v: object) -> str:
    if v is None:
        return "n/a"
    return "true" if v else "false"


def _parse_h(text: str) -> tuple[int, ...]:
    try:
        h = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"h-vector {text!r} must be a comma-separated list of integers") from None
    if len(h) != 4:
        raise InputError(f"expected four entries h0,h1,h2,h3, got {len(h)}")
    if h[0] != 1:
        raise InputError(f"h0 must be 1, got {h[0]}")
    return h


# ---------------------------------------------------------------- commands


def cmd_check(args: argparse.Namespace) -> int:
    fields = _fields(args.field)
    try:
        c = read_complex(args.path)
    except OSError as e:
        raise InputError(f"cannot read {args.path}: {e.strerror}") from None
    rep = property_report(c, fields)
    lines = [
        f"f = {list(rep.f)}",
        f"h = {list(rep.h)}",
        f"pure: {_yn(rep.pure)}",
        f"connected: {_yn(rep.connected)}",
    ]
    for fld in fields:
        lines += [
            f"betti[{fld.value}] = {list(rep.betti[fld].entries)}",
            f"cohen_macaulay[{fld.value}]: {_yn(rep.cm[fld])}",
            f"buchsbaum[{fld.value}]: {_yn(rep.buchsbaum[fld])}",
        ]
    lines.append(f"link_acyclic: {_yn(rep.link_acyclic)}")
    if rep.criterion is not None:
        crit = ", ".join(f"{k}={_yn(v)}" for k, v in rep.criterion.items())
        lines.append(f"connected criterion: {crit}")
        lines.append(f"decomposition k: {rep.decomposition_k if rep.decomposition_k is not None else 'none'}")
    for fld, ok in rep.ns_ok.items():
        lines.append(f"novik_swartz[{fld.value}]: {_yn(ok)}")
    lines.append(f"terai_yoshida threshold met: {_yn(rep.ty_threshold_met)}")
    _emit(args, rep.to_json(), lines)
    return OK


def _write_complex(c: SimplicialComplex, path: str) -> None:
    atomic_write(path, format_json(c) if path.endswith(".json") else format_text(c))


def cmd_realize(args: argparse.Namespace) -> int:
    h = _parse_h(args.h)
    if args.k is not None and args.k < 0:
        raise InputError("--k must be nonnegative")
    try:
        cert = realize(h, connected_required=args.connected, k=args.k, fields=_fields(args.field))
    except NotRealizable as e:
        print(f"not realizable: {e}", file=sys.stderr)
        return FAIL
    except ConstructionInvariantViolated as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return FAIL
    c = cert.complex
    if args.output:
        _write_complex(c, args.output)
    if args.certificate:
        atomic_write(args.certificate, json.dumps(cert.to_json(), indent=2) + "\n")
    checks = " ".join(f"{k}={_yn(v)}" for k, v in cert.checks.items())
    lines = [
        f"h = {list(h)}: {len(c.vertices)} vertices, {len(c.facets)} facets, k = {cert.k}",
        f"checks: {checks}",
    ]
    lines += [f"trace: {json.dumps(step)}" for step in cert.construction_trace]
    lines += [" ".join(map(str, f)) for f in c.facets]
    _emit(args, cert.to_json(), lines)
    return OK if cert.ok else FAIL


def cmd_macaulay(args: argparse.Namespace) -> int:
    if args.a == 0 and args.d >= 1:
        line = f"0 = 0; 0^<{args.d}> = 0"
        _emit(args, {"a": 0, "d": args.d, "terms": [], "power": 0}, [line])
        return OK
    try:
        rep = macaulay_rep(args.a, args.d)
    except NonPositiveInput as e:
        raise InputError(str(e)) from None
    line = f"{args.a} = {rep}; {args.a}^<{args.d}> = {rep.power()}"
    payload = {
        "a": args.a,
        "d": args.d,
        "terms": [[top + i, i] for top, i in rep.terms],
        "power": rep.power(),
    }
    _emit(args, payload, [line])
    return OK


def cmd_census(args: argparse.Namespace) -> int:
    fields = _fields(args.field)
    ns = [args.n] if args.only else list(range(3, args.n + 1))
    limit = oracle.MAX_N_OVERRIDE if args.allow_large else oracle.MAX_N
    if not 3 <= args.n <= limit:
        raise InputError(f"n must lie in 3..{limit}, got {args.n}")
    if args.workers is not None and args.workers < 1:
        raise InputError("--workers must be positive")
    results = [oracle.census(n, allow_large=args.allow_large, workers=args.workers) for n in ns]
    records = [r for res in results for r in res.records]
    if args.out:
        if args.out.endswith(".json"):
            text = json.dumps([oracle.record_json(r) for r in records], indent=1) + "\n"
        else:
            text = "\n".join([oracle.CSV_HEADER] + [oracle.record_csv_row(r) for r in records]) + "\n"
        atomic_write(args.out, text)
    rep = oracle.necessity_check(results, fields)
    nviol = sum(len(v) for v in rep.violations.values())
    complexes = sum(res.complexes for res in results)
    bb = sum(r.count for r in records if r.buchsbaum)
    lines = [f"n in {ns}: {complexes} complexes, {bb} Buchsbaum, {len(records)} records; violations: {nviol}"]
    lines += [f"{k}: {rep.checked[k]} checked, {len(v)} violations" for k, v in rep.violations.items()]
    payload = {
        "n": ns,
        "complexes": complexes,
        "buchsbaum": bb,
        "records": len(records),
        "checked": rep.checked,
        "violations": {k: len(v) for k, v in rep.violations.items()},
    }
    if args.out is None:
        payload["census"] = [oracle.record_json(r) for r in records]
    _emit(args, payload, lines)
    return OK if rep.ok else FAIL


def cmd_betti_search(args: argparse.Namespace) -> int:
    res = oracle.thirteen_triangle_search()
    wit = ", ".join(f"{res.witnesses[f]} ({f.value})" for f in FIELDS)
    lines = [f"witnesses: {wit}", f"examined {res.examined} sets, {res.candidates} connected Buchsbaum with h=(1,3,6,3)"]
    for f in FIELDS:
        prof = ", ".join(f"(b1,b2)={k}: {v}" for k, v in sorted(res.profiles[f].items()))
        lines.append(f"profiles[{f.value}]: {prof}")
    payload = {
        "examined": res.examined,
        "candidates": res.candidates,
        "witnesses": {f.value: res.witnesses[f] for f in FIELDS},
        "profiles": {f.value: [[*k, v] for k, v in sorted(res.profiles[f].items())] for f in FIELDS},
    }
    beta1_zero = all(k[0] == 0 for f in FIELDS for k in res.profiles[f])
    _emit(args, payload, lines)
    return OK if res.witness_count == 0 and beta1_zero else FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.h1_max < 0:
        raise InputError("--h1-max must be nonnegative")
    res = sweep(args.h1_max, connected_required=not args.disconnected, fields=_fields(args.field))
    if res.ok:
        lines = [f"all {res.total} certificates verified"]
    else:
        lines = [f"{len(res.failures)} of {res.total} certificates failed"]
        lines += [f"{list(h)}: {why}" for h, why in res.failures]
    payload = {
        "total": res.total,
        "failures": [{"h": list(h), "reason": why} for h, why in res.failures],
    }
    _emit(args, payload, lines)
    return OK if res.ok else FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--field", default="both", help="Q, GF2 or both (default both)")

    ap = argparse.ArgumentParser(prog="buchsbaum", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="report properties of a complex file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", parents=[common], help="build a complex with a given h-vector")
    p.add_argument("h", help="h0,h1,h2,h3")
    p.add_argument("--connected", action="store_true", help="require a connected witness")
    p.add_argument("--k", type=int, help="force this many disjoint extra triangles")
    p.add_argument("-o", "--output", help="write the complex here (.json or text)")
    p.add_argument("--certificate", help="write the certificate JSON here")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("macaulay", parents=[common], help="Macaulay representation and a^<d>")
    p.add_argument("a", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_macaulay)

    p = sub.add_parser("census", parents=[common], help="enumerate pure 2-complexes on up to n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--only", action="store_true", help="only n itself, not 3..n")
    p.add_argument("--out", help="write records as CSV (or JSON if the name ends in .json)")
    p.add_argument("--allow-large", action="store_true", help=f"permit n = {oracle.MAX_N_OVERRIDE}")
    p.add_argument("--workers", type=int, help=f"worker processes (default ${oracle.WORKERS_ENV} or 1)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("betti-search", parents=[common], help="search 13-triangle sets on 6 vertices")
    p.set_defaults(func=cmd_betti_search)

    p = sub.add_parser("sweep", parents=[common], help="realize and certify all admissible h")
    p.add_argument("--h1-max", type=int, default=8)
    p.add_argument("--disconnected", action="store_true",
                   help="sweep h-vectors of possibly disconnected complexes")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    try:
        return args.func(args)
    except (InputError, ComplexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
