"""Command-line interface.

Exit status: 0 on success, 1 on validation errors, 2 on I/O errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analysis import distance_matrix
from .bench import BenchReport, bench
from .entropy import compute_features, normalize_log_base
from .errors import RLEntropyError
from .fixtures import generate_fixture
from .image_io import load_pbm, save_pbm
from .rle import RLEDocument, decode_image, dumps_rld, encode_image, loads_rld
from .transitions import trace_virtual_decompression

GLOBAL_DEFAULTS = {"log_base": "e", "quantifier": "ceq", "direction": "h", "format": None}


def load_document(path: str | Path) -> RLEDocument:
    """Read a ``.rld`` file, or a PBM file which is encoded on the fly."""
    path = Path(path)
    data = path.read_bytes()
    if path.suffix.lower() == ".rld":
        return loads_rld(data)
    return encode_image(load_pbm(data))


def _write(out: str | None, payload: str | bytes) -> None:
    if out is None or out == "-":
        if isinstance(payload, bytes):
            sys.stdout.buffer.write(payload)
            sys.stdout.buffer.flush()
        else:
            sys.stdout.write(payload)
        return
    mode = "wb" if isinstance(payload, bytes) else "w"
    with open(out, mode) as fh:
        fh.write(payload)


def format_runs_table(doc: RLEDocument) -> str:
    """Zero-padded rectangular run table, one line per row."""
    cols = max(r.k for r in doc.rows)
    header = "Line\t" + "\t".join(str(c) for c in range(1, cols + 1))
    lines = [header]
    for i, row in enumerate(doc.rows, start=1):
        lines.append(f"{i}:\t" + "\t".join(map(str, row.padded(cols))))
    return "\n".join(lines) + "\n"


def format_trace(doc: RLEDocument, passes: int | None) -> str:
    cols = max(r.k for r in doc.rows)
    lines = ["Pass\tLine\tPopped\t" + "\t".join(str(c) for c in range(1, cols + 1)) + "\tStatus"]
    for i, row in enumerate(doc.rows, start=1):
        lines.append(("Start" if i == 1 else "") + f"\t{i}:\t\t" + "\t".join(map(str, row.runs)))
    for step in trace_virtual_decompression(doc, passes):
        first = str(step.pass_no) if step.line == 1 else ""
        lines.append(f"{first}\t{step.line}:\t{step.bit}\t"
                     + "\t".join(map(str, step.runs)) + f"\t{step.status}")
    return "\n".join(lines) + "\n"


# --- subcommands -----------------------------------------------------------------

def cmd_encode(args) -> None:
    doc = encode_image(load_pbm(Path(args.input).read_bytes()))
    _write(args.output, format_runs_table(doc) if args.table else dumps_rld(doc))


def cmd_decode(args) -> None:
    doc = loads_rld(Path(args.input).read_bytes())
    _write(args.output, save_pbm(decode_image(doc), args.variant))


def cmd_entropy(args) -> None:
    doc = load_document(args.input)
    feats = compute_features(doc, args.quantifier, args.direction, args.log_base)
    if args.format == "csv":
        out = "F1,F2,F3\n" + f"{feats.f1!r},{feats.f2!r},{feats.f3!r}\n"
    else:
        out = json.dumps(feats.to_dict(per_row=args.per_row), indent=2) + "\n"
    _write(args.output, out)


def cmd_distmat(args) -> None:
    samples = [(Path(p).stem, load_document(p)) for p in args.inputs]
    dm = distance_matrix(samples, args.quantifier, args.direction, args.log_base)
    if args.format == "csv":
        out = dm.to_csv(args.precision)
    else:
        out = json.dumps(dm.to_dict(), indent=2) + "\n"
    _write(args.output, out)


def cmd_trace(args) -> None:
    doc = load_document(args.input)
    if args.format in ("json", "csv"):
        steps = [
            {"pass": s.pass_no, "line": s.line, "popped": s.bit,
             "runs": list(s.runs), "status": s.status}
            for s in trace_virtual_decompression(doc, args.passes)
        ]
        _write(args.output, json.dumps(steps, indent=1) + "\n")
    else:
        _write(args.output, format_trace(doc, args.passes))


def cmd_bench(args) -> None:
    if args.input:
        doc = load_document(args.input)
        label = args.label or Path(args.input).stem
    else:
        img = generate_fixture(args.fixture, args.width, args.height, args.density, args.seed)
        doc = encode_image(img)
        label = args.label or args.fixture
    report = BenchReport()
    for q in args.quantifier.split(","):
        for d in args.direction.split(","):
            report.results += bench(doc, q, d, args.repetitions, label,
                                    args.include_decode, args.log_base).results
    _write(args.output, report.to_csv() if args.format == "csv" else report.to_json() + "\n")


def cmd_gen(args) -> None:
    img = generate_fixture(args.kind, args.width, args.height, args.density, args.seed)
    if args.output and args.output.endswith(".rld"):
        _write(args.output, dumps_rld(encode_image(img)))
    else:
        _write(args.output, save_pbm(img, args.variant))


# --- parser ----------------------------------------------------------------------

def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = (lambda k: {"default": GLOBAL_DEFAULTS[k]}) if defaults else (lambda k: {"default": argparse.SUPPRESS})
    p.add_argument("--log-base", choices=["e", "2", "10"], **kw("log_base"))
    p.add_argument("--quantifier", **kw("quantifier"),
                   help="ceq or seq (bench also accepts a comma list)")
    p.add_argument("--direction", **kw("direction"),
                   help="h or v (bench also accepts a comma list)")
    p.add_argument("--format", choices=["json", "csv"], **kw("format"))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlentropy", parents=[_global_flags(True)],
        description="Entropy quantifiers of bilevel document images in the run-length domain.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = _global_flags(False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="PBM -> .rld")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--table", action="store_true", help="print zero-padded run table instead")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help=".rld -> PBM")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--variant", choices=["P1", "P4"], default="P4")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("entropy", parents=[common], help="F1/F2/F3 of one document")
    p.add_argument("input", help=".rld or .pbm file")
    p.add_argument("-o", "--output")
    p.add_argument("--per-row", action="store_true")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("distmat", parents=[common], help="|dF3| distance matrix")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output")
    p.add_argument("--precision", type=int, default=None, help="decimals in CSV output")
    p.set_defaults(func=cmd_distmat)

    p = sub.add_parser("trace", parents=[common], help="virtual decompression trace")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--passes", type=int, default=10)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("bench", parents=[common], help="compressed vs uncompressed timing")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.add_argument("--fixture", choices=["blank", "checkerboard", "text-like"], default="text-like")
    p.add_argument("--width", type=int, default=1000)
    p.add_argument("--height", type=int, default=1000)
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--label", default="")
    p.add_argument("--include-decode", action="store_true",
                   help="charge decoding time to the uncompressed path")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", parents=[common], help="write a synthetic fixture")
    p.add_argument("kind", choices=["blank", "checkerboard", "text-like"])
    p.add_argument("width", type=int)
    p.add_argument("height", type=int)
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--variant", choices=["P1", "P4"], default="P4")
    p.add_argument("-o", "--output", help=".pbm or .rld path (default: PBM on stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        # trace prints a table unless a format is requested
        args.format = "table" if args.command == "trace" else "json"
    try:
        args.log_base = normalize_log_base(args.log_base)
        for q in args.quantifier.split(","):
            if q not in ("ceq", "seq"):
                raise RLEntropyError(f"unknown quantifier {q!r}")
        for d in args.direction.split(","):
            if d not in ("h", "v"):
                raise RLEntropyError(f"unknown direction {d!r}")
        if args.command != "bench" and ("," in args.quantifier or "," in args.direction):
            raise RLEntropyError("comma lists are only accepted by bench")
        args.func(args)
    except RLEntropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
