"""Command line entry point: classify, synthesize, equiv, embed, project, quaternionify, selfcheck.

Exit codes: 0 success, 1 negative outcome (not equivalent, selfcheck failure),
2 malformed input or usage, 3 unsupported input, 4 invalid label or failed membership.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import affine as aff
from . import selfcheck
from .distinguished import (
    DistinguishedError,
    FamilyMismatch,
    NoDistinguishedHeight,
    NoCoreRow,
    classify,
    synthesize_distinguished,
    triples_equivalent,
)
from .labels import InvalidLabel, LabelSyntaxError, format_types, parse_any
from .linalg import DimensionMismatch, LinalgError
from .scalars import ScalarParseError
from .serialize import DocumentError, parse, render
from .structures import StructureError
from .typedecomp import DecompositionError, decompose_nilpotent_pair, synthesize_types

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_MALFORMED = 2
EXIT_UNSUPPORTED = 3
EXIT_INVALID = 4
DEFAULT_SEED = 0


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_MALFORMED, f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path: str | None, expect=None):
    try:
        return parse(_read(path), expect)
    except (DocumentError, ScalarParseError, LinalgError, StructureError, DecompositionError, DistinguishedError, ValueError) as exc:
        raise CliError(EXIT_MALFORMED, f"{path or '<stdin>'}: {exc}") from exc


# verbs ---------------------------------------------------------------------------------------

def cmd_classify(args) -> int:
    kind, obj = _load(args.input)
    if kind == "pair":
        try:
            d = decompose_nilpotent_pair(obj)
        except (DecompositionError, LinalgError) as exc:
            raise CliError(EXIT_UNSUPPORTED, f"cannot decompose pair: {exc}") from exc
        _write(args.output, render("label", format_types(d.labels)))
        return EXIT_OK
    if kind != "triple":
        raise CliError(EXIT_MALFORMED, f"expected a triple or pair document, got {kind}")
    try:
        res = classify(obj)
    except (NoCoreRow, NoDistinguishedHeight) as exc:
        raise CliError(EXIT_UNSUPPORTED, str(exc)) from exc
    except (DistinguishedError, DecompositionError, LinalgError) as exc:
        raise CliError(EXIT_MALFORMED, f"invalid triple: {exc}") from exc
    _write(args.output, render("result", res))
    if res.unclassified_residual is not None and args.strict:
        print(f"unclassified residual of dimension {res.unclassified_residual.dim}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_synthesize(args) -> int:
    try:
        kind, value = parse_any(args.label)
    except LabelSyntaxError as exc:
        raise CliError(EXIT_MALFORMED, f"label syntax: {exc}") from exc
    except InvalidLabel as exc:
        raise CliError(EXIT_INVALID, f"invalid label: {exc}") from exc
    try:
        if kind == "types":
            _write(args.output, render("pair", synthesize_types(value)))
        else:
            core, residual = value
            _write(args.output, render("triple", synthesize_distinguished(core, residual)))
    except InvalidLabel as exc:
        raise CliError(EXIT_INVALID, f"invalid label: {exc}") from exc
    return EXIT_OK


def cmd_equiv(args) -> int:
    _, a = _load(args.a, "triple")
    _, b = _load(args.b, "triple")
    try:
        eq = triples_equivalent(a, b)
    except (FamilyMismatch, DimensionMismatch) as exc:
        raise CliError(EXIT_MALFORMED, str(exc)) from exc
    except (DistinguishedError, DecompositionError, LinalgError) as exc:
        raise CliError(EXIT_MALFORMED, f"invalid triple: {exc}") from exc
    print(("equivalent" if eq else "not equivalent") + (f": {eq.reason}" if eq.reason else ""), file=sys.stderr)
    if eq and args.witness:
        if eq.witness is None:
            print("no witness matrix available", file=sys.stderr)
        else:
            _write(args.witness, render("matrix", eq.witness))
    return EXIT_OK if eq else EXIT_NEGATIVE


def _context(args):
    if not args.family or args.n is None:
        raise CliError(EXIT_MALFORMED, "--family and --n are required")
    try:
        return aff.build_context(args.family, args.n, args.p)
    except (aff.AffineError, StructureError, LinalgError, KeyError, ValueError) as exc:
        raise CliError(EXIT_MALFORMED, f"bad context: {exc}") from exc


def _membership(fn, *a):
    try:
        return fn(*a)
    except (aff.NotInGroup, aff.NotInIsotropyGroup, DimensionMismatch, StructureError) as exc:
        raise CliError(EXIT_INVALID, f"membership failure: {exc}") from exc


def cmd_embed(args) -> int:
    ctx = _context(args)
    _, a = _load(args.input, "affine_element")
    g = _membership(aff.embed, ctx, a)
    _write(args.output, render("matrix", g))
    return EXIT_OK


def cmd_project(args) -> int:
    ctx = _context(args)
    _, g = _load(args.input, "matrix")
    a = _membership(aff.project, ctx, g)
    _write(args.output, render("affine_element", a, family=ctx.family, n=ctx.n, p=args.p))
    return EXIT_OK


def cmd_quaternionify(args) -> int:
    ctx = _context(args)
    kind, obj = _load(args.input)
    if kind == "affine_element":
        obj = _membership(aff.embed, ctx, obj)
    elif kind != "matrix":
        raise CliError(EXIT_MALFORMED, f"expected a matrix or affine_element document, got {kind}")
    rep = aff.isotropy_report(ctx, obj) if obj.shape == (ctx.dim, ctx.dim) else None
    if rep is None or not rep:
        why = "matrix shape" if rep is None else "; ".join(rep.failures)
        raise CliError(EXIT_INVALID, f"membership failure: {why}")
    Q = _membership(aff.quaternionic_model, ctx, obj)
    _write(args.output, render("quaternion_matrix", Q))
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    try:
        rep = selfcheck.run(args.scope, args.seed)
    except ValueError as exc:
        raise CliError(EXIT_MALFORMED, str(exc)) from exc
    for line in rep.lines:
        print(line)
    if rep.ok:
        print(f"selfcheck {args.scope}: {len(rep.lines)} passed")
        return EXIT_OK
    path = Path(args.output or "orbitforge-repro.json")
    selfcheck.dump_repro(rep, path, args.scope, args.seed)
    print(f"selfcheck {args.scope}: {len(rep.failures)} of {len(rep.lines)} failed; reproduction written to {path}", file=sys.stderr)
    return EXIT_NEGATIVE


# parser -------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orbitforge", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="classify a triple document (or decompose a pair document)")
    p.add_argument("--input", help="document path (default stdin)")
    p.add_argument("--output", help="result path (default stdout)")
    p.add_argument("--strict", action="store_true", help="exit 3 when an unclassified residual is present")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("synthesize", help="build the model triple or pair of a label")
    p.add_argument("label")
    p.add_argument("--output")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("equiv", help="decide equivalence of two triple documents")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", metavar="PATH", help="write the conjugating matrix here when equivalent")
    p.set_defaults(func=cmd_equiv)

    for name, func, what in (
        ("embed", cmd_embed, "affine element -> isotropy group element"),
        ("project", cmd_project, "isotropy group element -> affine element"),
        ("quaternionify", cmd_quaternionify, "isotropy group element -> quaternion matrix"),
    ):
        p = sub.add_parser(name, help=what)
        p.add_argument("--family", required=True, help="affine case, e.g. aff_o or aff_sp_sigma_minus")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--p", type=int, default=0)
        p.add_argument("--input")
        p.add_argument("--output")
        p.set_defaults(func=func)

    p = sub.add_parser("selfcheck", help="run the seeded invariant suites")
    p.add_argument("--scope", default="all", choices=("all",) + selfcheck.SCOPES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", help="reproduction document path on failure (default orbitforge-repro.json)")
    p.set_defaults(func=cmd_selfcheck)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"orbitforge {args.verb}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
