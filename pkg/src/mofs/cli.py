"""Command-line front end.

Exit codes: 0 = success / claim verified, 1 = claim refuted (invalid
set, inconclusive certification, no extension found), 2 = usage or I/O
error.  Input files default to stdin ("-"); every command takes --json
for machine-readable output.
"""

import argparse
import json
import sys

from . import constructions, formats, maximality
from .core import FrequencyType, validate_mofs
from .designs import regularity
from .errors import FormatError, MofsError


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(data: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        for line in lines:
            print(line)


def _squares_out(squares, fmt: str) -> str:
    if fmt == "superimposed":
        return formats.squares_to_superimposed(squares)
    if fmt == "json":
        return json.dumps(
            {"squares": [formats.square_to_dict(sq) for sq in squares]}, indent=2
        ) + "\n"
    return formats.squares_to_grid(squares)


def _cert_lines(cert) -> list:
    lines = [f"kind: {cert.kind}", f"conclusion: {cert.conclusion}"]
    for key, value in cert.parameters:
        lines.append(f"  {key} = {value}")
    if cert.witness is not None:
        lines.append("witness:")
        lines.extend(
            "  " + " ".join(str(v) for v in row) for row in cert.witness.entries
        )
    return lines


def cmd_verify_mofs(args) -> int:
    squares = formats.parse_squares(_read(args.input), args.format)
    try:
        s = validate_mofs(squares)
    except MofsError as exc:
        _emit(
            {"valid": False, "reason": str(exc)},
            args.json,
            [f"not a valid MOFS set: {exc}"],
        )
        return 1
    types = sorted({str(sq.ftype) for sq in s.squares})
    _emit(
        {"valid": True, "count": s.size, "order": s.order, "types": types},
        args.json,
        [f"{s.size} squares of order {s.order}, types {', '.join(types)}: "
         "all pairs orthogonal"],
    )
    return 0


def cmd_verify_design(args) -> int:
    d = formats.design_from_text(_read(args.input))
    rep = regularity(d)
    data = {
        "num_points": rep.num_points,
        "num_blocks": rep.num_blocks,
        "replication": rep.replication,
        "pair_index": rep.pair_index,
        "block_sizes": sorted(set(rep.block_size_set)),
        "is_dk": rep.is_dk,
    }
    regular = rep.replication is not None and rep.pair_index is not None
    lines = [
        f"V={rep.num_points} B={rep.num_blocks} "
        f"R={rep.replication} pair-index={rep.pair_index} "
        f"sizes={sorted(set(rep.block_size_set))} dk={rep.is_dk}"
    ]
    if not regular:
        lines.append("not an (R,L)-design: replication or pair index varies")
    _emit(data, args.json, lines)
    return 0 if regular else 1


def cmd_derive_dk(args) -> int:
    from .bridge import derive_blocks

    squares = formats.parse_squares(_read(args.input), args.format)
    s = validate_mofs(squares)
    arr = derive_blocks(s)
    if args.json:
        rep = regularity(arr.flatten())
        print(json.dumps({
            "order": arr.order,
            "num_points": arr.num_points,
            "replication": rep.replication,
            "pair_index": rep.pair_index,
            "is_dk": rep.is_dk,
            "cells": [[list(c) for c in row] for row in arr.cells],
        }, indent=2))
    else:
        sys.stdout.write(formats.block_array_to_text(arr))
    return 0


def cmd_derive_mofs(args) -> int:
    arr = formats.block_array_from_text(_read(args.input))
    from .bridge import derive_mofs

    s = derive_mofs(arr.flatten(), arr.rows_partition(), arr.cols_partition())
    sys.stdout.write(_squares_out(s.squares, args.format))
    return 0


def cmd_dilate(args) -> int:
    squares = formats.parse_squares(_read(args.input), "auto")
    s = validate_mofs(squares)
    out = constructions.dilate(s, args.q)
    sys.stdout.write(_squares_out(out.squares, args.format))
    return 0


def cmd_construct(args) -> int:
    what = args.what
    if what == "cycle-power":
        if args.n is None or args.d is None:
            raise FormatError("cycle-power needs --n and --d")
        s = constructions.cycle_power_mofs(args.n, args.d)
        sys.stdout.write(_squares_out(s.squares, args.format))
    elif what == "dk52":
        design, _, _, arr = constructions.dk_52_16()
        if args.array:
            sys.stdout.write(formats.block_array_to_text(arr))
        else:
            sys.stdout.write(formats.design_to_text(design))
    elif what == "cyclic-pbd27":
        sys.stdout.write(formats.design_to_text(constructions.cyclic_pbd_27()))
    elif what == "cyclic-mofs":
        d = formats.design_from_text(_read(args.input))
        s = constructions.cyclic_mofs_from_design(d)
        sys.stdout.write(_squares_out(s.squares, args.format))
    elif what == "pad-ones":
        squares = formats.parse_squares(_read(args.input), "auto")
        s = validate_mofs(squares)
        sys.stdout.write(_squares_out(constructions.pad_with_ones(s).squares,
                                      args.format))
    else:
        raise FormatError(f"unknown construction {what!r}")
    return 0


def cmd_pipeline(args) -> int:
    if args.route == "dk":
        design, p1, p2, _ = constructions.dk_52_16()
        result = constructions.typemax_pipeline_dk(design, p1, p2, args.w)
    else:
        design = constructions.cyclic_pbd_27()
        result = constructions.typemax_pipeline_cyclic(design, args.w)
    cert = result.certificate
    data = {
        "provenance": result.provenance,
        "certificate": formats.certificate_to_dict(cert),
    }
    lines = [f"{key}: {value}" for key, value in result.provenance.items()]
    lines += _cert_lines(cert)
    if args.with_squares:
        data["squares"] = [formats.square_to_dict(sq) for sq in result.mofs.squares]
        if not args.json:
            lines.append(formats.squares_to_superimposed(result.mofs.squares).rstrip())
    _emit(data, args.json, lines)
    return 0 if cert.conclusion == "type-maximal" else 1


def cmd_certify(args) -> int:
    squares = formats.parse_squares(_read(args.input), "auto")
    s = validate_mofs(squares)
    cert = maximality.certify_corollary(s, args.w)
    _emit(formats.certificate_to_dict(cert), args.json, _cert_lines(cert))
    return 0 if cert.conclusion in ("type-maximal", "maximal") else 1


def cmd_extend(args) -> int:
    squares = formats.parse_squares(_read(args.input), "auto")
    s = validate_mofs(squares)
    try:
        target = FrequencyType.parse(args.type)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    result = maximality.extension_search(s, target, mode=args.mode)
    data = {
        "target": str(result.target),
        "mode": result.mode,
        "found": result.witness is not None,
        "count": result.count,
        "nodes": result.nodes,
        "exhausted": result.exhausted,
        "witness": formats.square_to_dict(result.witness) if result.witness else None,
    }
    lines = [
        f"target {result.target} mode {result.mode}: "
        f"count={result.count} nodes={result.nodes} exhausted={result.exhausted}"
    ]
    if result.witness is not None:
        lines.append("witness:")
        lines.extend(
            "  " + " ".join(str(v) for v in row) for row in result.witness.entries
        )
    _emit(data, args.json, lines)
    return 0 if result.witness is not None else 1


def cmd_check_cert(args) -> int:
    cert = formats.certificate_from_json(_read(args.cert))
    squares = formats.parse_squares(_read(args.input), "auto")
    s = validate_mofs(squares)
    ok, detail = maximality.check_certificate(cert, s)
    _emit(
        {"ok": ok, "detail": detail, "kind": cert.kind,
         "conclusion": cert.conclusion},
        args.json,
        [f"{'verified' if ok else 'REFUTED'}: {detail}"],
    )
    return 0 if ok else 1


def _add_input(p, help_text="input file (default: stdin)"):
    p.add_argument("input", nargs="?", default="-", help=help_text)


def _add_json(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _add_square_format(p):
    p.add_argument(
        "--format",
        default="grid",
        choices=("grid", "superimposed", "json"),
        help="square output format (default: grid)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mofs",
        description="Construct, verify, and certify mutually orthogonal "
        "frequency squares and the designs they correspond to.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-mofs", help="check pairwise orthogonality of squares")
    _add_input(p)
    p.add_argument("--format", default="auto",
                   choices=("auto", "grid", "superimposed", "json"))
    _add_json(p)
    p.set_defaults(func=cmd_verify_mofs)

    p = sub.add_parser("verify-design", help="report design regularity and DK status")
    _add_input(p)
    _add_json(p)
    p.set_defaults(func=cmd_verify_design)

    p = sub.add_parser("derive-dk", help="block array derived from a binary MOFS set")
    _add_input(p)
    p.add_argument("--format", default="auto",
                   choices=("auto", "grid", "superimposed", "json"),
                   help="input square format")
    _add_json(p)
    p.set_defaults(func=cmd_derive_dk)

    p = sub.add_parser("derive-mofs", help="MOFS set derived from a block array")
    _add_input(p)
    _add_square_format(p)
    p.set_defaults(func=cmd_derive_mofs)

    p = sub.add_parser("dilate", help="expand each cell to a q x q constant block")
    _add_input(p)
    p.add_argument("--q", type=int, required=True, help="dilation factor")
    _add_square_format(p)
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("construct", help="build one of the canned objects")
    p.add_argument("what", choices=("cycle-power", "dk52", "cyclic-pbd27",
                                    "cyclic-mofs", "pad-ones"))
    p.add_argument("input", nargs="?", default="-",
                   help="input file for cyclic-mofs / pad-ones")
    p.add_argument("--n", type=int, help="order (cycle-power)")
    p.add_argument("--d", type=int, help="cycle length dividing n (cycle-power)")
    p.add_argument("--array", action="store_true",
                   help="dk52: emit the block array instead of the design")
    _add_square_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("pipeline", help="run a certified construction end to end")
    p.add_argument("route", choices=("dk", "cyclic"))
    p.add_argument("--w", type=int, required=True, help="certification modulus")
    p.add_argument("--with-squares", action="store_true",
                   help="include the constructed squares in the output")
    _add_json(p)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("certify", help="modular type-maximality certificate")
    _add_input(p)
    p.add_argument("--w", type=int, default=None,
                   help="modulus (default: try 2..k*lambda1+n)")
    _add_json(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("extend", help="search for an orthogonal extension square")
    _add_input(p)
    p.add_argument("--type", required=True,
                   help="target frequency type, e.g. '6;3,3'")
    p.add_argument("--mode", default="first", choices=("first", "all"))
    _add_json(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("check-cert", help="re-verify a certificate against a set")
    p.add_argument("cert", help="certificate JSON file")
    _add_input(p, "MOFS set file (default: stdin)")
    _add_json(p)
    p.set_defaults(func=cmd_check_cert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MofsError as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
