import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from algebra import (
    ParseError,
    classify,
    format_paraquaternion,
    mul,
    norm,
    normsq,
    parse_paraquaternion,
)
from config import DEFAULTS
from formats import (
    FormatError,
    dumps_pmap,
    dumps_report,
    dumps_structure,
    load_pmap,
    load_structure,
    write_text,
)
from geometry import (
    Box,
    Chirality,
    DegeneratePoint,
    NonzeroRealPart,
    NotRegular,
    SignChange,
    SingularMetric,
    build_example,
    build_structure,
    example_chirality,
    verify_structure,
)
from poly import FueterTerm, MixedSides, Side, check_regular, fueter_sum

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

DOMAIN_ERRORS = (SignChange, DegeneratePoint, NotRegular, NonzeroRealPart, SingularMetric)
INPUT_ERRORS = (ParseError, FormatError, MixedSides, OSError)

EXAMPLE_BOX = "2:3,0:1/10,0:1/10,0:1/10"


class UsageError(ValueError):
    """A flag value that argparse accepted but the command cannot use."""


def emit(text: str, out: Optional[str]) -> None:
    if out:
        write_text(out, text)
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def parse_term(spec: str, side: Side) -> FueterTerm:
    """``INDICES:COEFFICIENT``, e.g. ``12:-i2+i3`` for z1 z2 (-i2 + i3)."""
    indices, sep, coef = spec.partition(":")
    if not sep or not indices or not indices.isdigit():
        raise UsageError(f"term must look like INDICES:COEFFICIENT, got {spec!r}")
    try:
        return FueterTerm(tuple(int(c) for c in indices), parse_paraquaternion(coef), side)
    except ParseError:
        raise
    except ValueError as exc:
        raise UsageError(f"term {spec!r}: {exc}") from None


def parse_point(text: str) -> List[Fraction]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError(f"point needs 4 comma-separated coordinates, got {text!r}")
    try:
        return [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad coordinate in {text!r}") from None


def parse_box(text: str) -> Box:
    try:
        return Box.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_mul(args) -> int:
    x = parse_paraquaternion(args.x)
    y = parse_paraquaternion(args.y)
    print(format_paraquaternion(mul(x, y)))
    return EXIT_OK


def cmd_classify(args) -> int:
    x = parse_paraquaternion(args.x)
    labels = classify(x).labels()
    value = norm(x)
    print(f"element: {format_paraquaternion(x)}")
    print(f"normsq: {normsq(x)}")
    print(f"norm: {value} ({value.kind.value})")
    print(f"class: {', '.join(labels)}")
    return EXIT_OK


def cmd_check(args) -> int:
    f = load_pmap(args.file)
    verdict = check_regular(f, Side(args.side))
    if verdict.is_regular:
        print("Regular")
        return EXIT_OK
    for label in verdict.failing_equations():
        print(f"failing: {label}", file=sys.stderr)
    print(f"Not {args.side}-regular; residual:", file=sys.stderr)
    sys.stdout.write(dumps_pmap(verdict.residual))
    return EXIT_FAIL


def cmd_fueter(args) -> int:
    side = Side(args.side)
    terms = [parse_term(spec, side) for spec in args.term]
    center = parse_point(args.center) if args.center else None
    f = fueter_sum(terms, center=center)
    emit(dumps_pmap(f), args.out)
    return EXIT_OK


def cmd_build(args) -> int:
    if (args.example is None) == (args.file is None):
        raise UsageError("build needs exactly one of --example or --file")
    if args.example is not None:
        f = build_example(args.example)
        chirality = example_chirality(args.example)
        box_text = args.box or EXAMPLE_BOX
    else:
        f = load_pmap(args.file)
        chirality = None
        box_text = args.box
        if box_text is None:
            raise UsageError("--box is required with --file")
    if args.chirality is not None:
        chirality = Chirality.parse(args.chirality)
    if chirality is None:
        raise UsageError("--chirality is required with --file")
    samples = DEFAULTS.epsilon_samples if args.samples is None else args.samples
    if samples < 1:
        raise UsageError(f"--samples must be >= 1, got {samples}")
    structure = build_structure(f, chirality, parse_box(box_text), samples=samples, seed=args.seed)
    emit(dumps_structure(structure), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    # Unvalidated: broken identities belong in the report, not in an exception.
    structure = load_structure(args.file, validate=False)
    if args.samples is not None and args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    for flag, value in (("--tol", args.tol), ("--weyl-step", args.weyl_step)):
        if value is not None and not value > 0:
            raise UsageError(f"{flag} must be positive, got {value}")
    report = verify_structure(
        structure,
        samples=args.samples,
        tol=args.tol,
        weyl_step=args.weyl_step,
        seed=args.seed,
    )
    emit(dumps_report(report), args.out)
    for line in report.failures():
        print(f"FAIL {line}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


OPERAND_COMMANDS = ("mul", "classify")


def protect_operands(argv: Sequence[str]) -> List[str]:
    """Insert ``--`` after mul/classify so operands like ``-i1`` are not read as flags."""
    argv = list(argv)
    for n, token in enumerate(argv):
        if token in OPERAND_COMMANDS:
            rest = argv[n + 1:]
            if "--" not in rest and not {"-h", "--help"} & set(rest):
                argv.insert(n + 1, "--")
            break
        if not token.startswith("-"):
            break
    return argv


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cli.py",
        description="Paraquaternion calculus and almost epsilon-Kaehler structures",
    )
    ap.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    sub = ap.add_subparsers(dest="command")

    ap_mul = sub.add_parser("mul", help="Multiply two paraquaternions")
    ap_mul.add_argument("x", help="e.g. '1+i2' or '-3/2*i1'")
    ap_mul.add_argument("y")
    ap_mul.set_defaults(func=cmd_mul)

    ap_cls = sub.add_parser("classify", help="Norm and element class of a paraquaternion")
    ap_cls.add_argument("x")
    ap_cls.set_defaults(func=cmd_classify)

    ap_check = sub.add_parser("check", help="Decide regularity of a polynomial map file")
    ap_check.add_argument("--side", choices=["left", "right"], required=True)
    ap_check.add_argument("file")
    ap_check.set_defaults(func=cmd_check)

    ap_fue = sub.add_parser("fueter", help="Write a finite Fueter sum as a polynomial map")
    ap_fue.add_argument("--side", choices=["left", "right"], required=True)
    ap_fue.add_argument("--term", action="append", required=True,
                        help="INDICES:COEFFICIENT, e.g. '12:-i2+i3' (can repeat)")
    ap_fue.add_argument("--center", default=None, help="Expansion point 'x0,x1,x2,x3'")
    ap_fue.add_argument("--out", default=None)
    ap_fue.set_defaults(func=cmd_fueter)

    ap_build = sub.add_parser("build", help="Build an almost epsilon-Kaehler structure")
    ap_build.add_argument("--example", choices=["a", "b"], default=None)
    ap_build.add_argument("--file", default=None, help="Polynomial map JSON file")
    ap_build.add_argument("--chirality", choices=["left", "right"], default=None)
    ap_build.add_argument("--box", default=None, help="'lo:hi,lo:hi,lo:hi,lo:hi'")
    ap_build.add_argument("--samples", type=int, default=None,
                          help="Points used to fix the sign of epsilon")
    ap_build.add_argument("--seed", type=int, default=DEFAULTS.seed)
    ap_build.add_argument("--out", default=None)
    ap_build.set_defaults(func=cmd_build)

    ap_ver = sub.add_parser("verify", help="Verify a structure file and print a report")
    ap_ver.add_argument("file")
    ap_ver.add_argument("--samples", type=int, default=None)
    ap_ver.add_argument("--tol", type=float, default=None)
    ap_ver.add_argument("--weyl-step", type=float, default=None)
    ap_ver.add_argument("--seed", type=int, default=DEFAULTS.seed)
    ap_ver.add_argument("--out", default=None)
    ap_ver.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(protect_operands(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if not hasattr(args, "func"):
        ap.print_help(sys.stderr)
        return EXIT_USAGE
    if getattr(args, "seed", 0) < 0:
        print("error: --seed must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError,) + INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # never a traceback for user input
        logger.debug("unexpected failure", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
