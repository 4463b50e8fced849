"""Command-line interface.

Exit codes: 0 success, 1 mathematical rejection (incompatible data, not
h-monogenic), 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .ck import IncompatibleDataError, extend_full, extend_scheme, monogenic_defects
from .dims import SpaceDescriptor, dim_formula, dim_m_alt, fischer_project
from .linalg import monogenic_basis

OK, REJECTED, MALFORMED = 0, 1, 2

_OP_NAMES = {"dz": "∂z", "dzdag": "∂z†"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _read(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return io.loads(text)


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_extend(args) -> int:
    data = io.ckdata_from_doc(_read(args.input))
    fn = extend_scheme if args.method == "scheme" else extend_full
    try:
        M = fn(data)
    except IncompatibleDataError as exc:
        for v in exc.violations:
            print(f"incompatible: {v}", file=sys.stderr)
        return REJECTED
    _write(io.dumps(io.poly_to_doc(M)), args.output)
    return OK


def _cmd_verify(args) -> int:
    p = io.poly_from_doc(_read(args.input))
    bad = monogenic_defects(p)
    if bad:
        for op in bad:
            print(f"not h-monogenic: {_OP_NAMES[op]} ({op}) does not annihilate the polynomial")
        return REJECTED
    print("h-monogenic")
    return OK


def _cmd_dim(args) -> int:
    n, r, a, b = args.n, args.r, args.a, args.b
    try:
        formula = dim_formula(SpaceDescriptor("HM", n, r, a, b))
        alt = dim_m_alt(n, r, a, b)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    lines = [f"dim_formula {formula}", f"dim_m_alt {alt}"]
    agree = formula == alt
    if args.oracle:
        oracle = len(monogenic_basis(n, r, a, b))
        lines.append(f"oracle {oracle}")
        agree = agree and oracle == formula
    _write("\n".join(lines) + "\n", args.output)
    return OK if agree else REJECTED


def _cmd_fischer(args) -> int:
    p = io.poly_from_doc(_read(args.input))
    kernel, image = fischer_project(p, args.side, args.a, args.b, args.r)
    doc = {
        "schema_version": io.SCHEMA_VERSION,
        "kind": "fischer",
        "side": args.side,
        "kernel_part": io.poly_to_doc(kernel),
        "image_part": io.poly_to_doc(image),
    }
    _write(io.dumps(doc), args.output)
    return OK


def _cmd_basis(args) -> int:
    if not 0 < args.r < args.n or min(args.a, args.b) < 0:
        print("error: need 0 < r < n and a, b >= 0", file=sys.stderr)
        return MALFORMED
    basis = monogenic_basis(args.n, args.r, args.a, args.b)
    docs = [io.poly_to_doc(p) for p in basis]
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        width = max(3, len(str(len(docs))))
        for k, doc in enumerate(docs):
            (out / f"basis_{k:0{width}d}.json").write_text(io.dumps(doc), encoding="utf-8")
        print(f"wrote {len(docs)} documents to {out}")
    else:
        _write(io.dumps(docs), args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hermck", description="Hermitean CK extensions and dimension checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extend", help="CK-extend a ck_data document")
    p.add_argument("input", help="ck_data document ('-' for stdin)")
    p.add_argument("--method", choices=("scheme", "closed"), default="scheme")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("verify", help="check h-monogenicity of a polynomial document")
    p.add_argument("input")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dim", help="dimension of the h-monogenic space")
    for flag in ("--n", "--r", "--a", "--b"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also count the kernel by elimination")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("fischer", help="Fischer split of a polynomial document")
    p.add_argument("input")
    p.add_argument("--side", choices=("dz", "dzdag"), required=True)
    for flag in ("--a", "--b", "--r"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_fischer)

    p = sub.add_parser("basis", help="exact basis of the h-monogenic space")
    for flag in ("--n", "--r", "--a", "--b"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--output", "-o", help="write all documents as one JSON array")
    p.add_argument("--output-dir", help="write one document per file")
    p.set_defaults(func=_cmd_basis)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except (io.DocumentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
