"""Command-line front end.

Exit status: 0 on success / no violations, 1 when an audit or fuzz run finds
violations, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io
from .engine import DEFAULT_MAX_PASSES, thin
from .templates import Variant, build_template_set, format_template
from .verify import audit_p1p2, fixture, fuzz_connectivity, label_components

EXIT_OK, EXIT_VIOLATIONS, EXIT_ERROR = 0, 1, 2


class CLIError(Exception):
    pass


def _variant(value: str) -> Variant:
    try:
        return Variant.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path):
    try:
        return io.read_volume(path)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror or exc}") from None
    except io.FormatError as exc:
        raise CLIError(f"cannot parse {path}: {exc}") from None


def _write(path, vol, fmt):
    try:
        io.write_volume(path, vol, fmt)
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc.strerror or exc}") from None


def _write_text(path, text: str):
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_thin(args) -> int:
    vol, fmt = _read(args.input)
    ext = ".bv3d" if fmt == "binary" else ".txt"
    dump_dir = Path(args.dump_iterations) if args.dump_iterations else None
    if dump_dir is not None:
        try:
            dump_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise CLIError(f"cannot create {dump_dir}: {exc.strerror or exc}") from None
    step = 0

    def dump(pass_index, round_index, before, deleted):
        nonlocal step
        if deleted.any():
            step += 1
            after = io.BinaryVolume.from_array(before & ~deleted)
            _write(dump_dir / f"round_{step:04d}_p{pass_index}_r{round_index}{ext}", after, fmt)

    out, report = thin(vol, args.variant, max_passes=args.max_passes,
                       marked_only=not args.all_points, workers=args.workers,
                       observer=dump if dump_dir is not None else None)
    _write(args.output, out, fmt)
    if args.stats:
        _write_text(args.stats, report.to_text())
    if not report.fixpoint_reached:
        print(f"error: no fixpoint after {args.max_passes} passes", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_components(args) -> int:
    vol, _ = _read(args.input)
    lab = label_components(vol, args.adjacency)
    print(f"components={lab.count}")
    print("sizes=" + ",".join(map(str, lab.sizes())))
    return EXIT_OK


def cmd_audit(args) -> int:
    report = audit_p1p2(build_template_set(args.variant))
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def cmd_gen(args) -> int:
    shape = args.shape
    if shape == "line":
        vol = fixture("line", args.n, args.axis)
    elif shape == "box":
        vol = fixture("box", *args.size)
    elif shape == "random":
        vol = fixture("random", args.seed, tuple(args.dims), args.density)
    else:
        vol = fixture(shape)
    fmt = args.format or ("binary" if str(args.output).endswith(".bv3d") else "text")
    _write(args.output, vol, fmt)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if not 0.0 < args.density < 1.0:
        raise CLIError("density must lie strictly between 0 and 1")
    if args.trials < 1:
        raise CLIError("trials must be >= 1")
    report = fuzz_connectivity(args.variant, args.trials, tuple(args.dims), args.density, args.seed)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def cmd_dump_templates(args) -> int:
    tset = build_template_set(args.variant)
    print(f"# variant={tset.variant.value} templates={len(tset)}\n")
    print("\n\n".join(format_template(t) for t in tset))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thin3d", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    variant_kw = dict(type=_variant, default=Variant.CORRECTED_ERRATA,
                      help="original | corrected | corrected-errata (default)")

    p = sub.add_parser("thin", help="thin a volume file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--variant", **variant_kw)
    p.add_argument("--stats", metavar="PATH", help="write the thinning report ('-' for stdout)")
    p.add_argument("--dump-iterations", metavar="DIR", help="write the volume after every round")
    p.add_argument("--max-passes", type=int, default=DEFAULT_MAX_PASSES)
    p.add_argument("--all-points", action="store_true",
                   help="let every object point be a candidate, not only marked border points")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_thin)

    p = sub.add_parser("components", help="count connected components")
    p.add_argument("input")
    p.add_argument("--adjacency", type=int, choices=(6, 18, 26), default=26)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("audit", help="check class D templates for a realisable (p1, p2) = (1, 1)")
    p.add_argument("--variant", **variant_kw)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="write a fixture volume")
    p.add_argument("shape", choices=("fig7", "fig12", "single", "line", "box", "random"))
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=("text", "binary"))
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--axis", choices=("x", "y", "z"), default="x")
    p.add_argument("--size", type=int, nargs=3, default=(3, 3, 3), metavar=("A", "B", "C"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dims", type=int, nargs=3, default=(8, 8, 8))
    p.add_argument("--density", type=float, default=0.4)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="randomised connectivity check")
    p.add_argument("--variant", **variant_kw)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dims", type=int, nargs=3, default=(8, 8, 8))
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("dump-templates", help="print every template of a variant")
    p.add_argument("--variant", **variant_kw)
    p.set_defaults(func=cmd_dump_templates)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
