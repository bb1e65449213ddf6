"""Command-line surface: one subcommand per pipeline stage.

Structured inputs (matrices, weight lists) are JSON, given inline or as a
file path; polynomials use the canonical text grammar.  Results go to
stdout, diagnostics to stderr, and output is byte-stable across runs.

Exit codes: 0 success or certified, 1 not certified (realize only),
2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, realize
from .cartan import CartanData, cartan_from_tag, custom_cartan
from .charpoly import parse as parse_poly
from .charpoly import render
from .errors import InputError, ResourceCapError
from .schur import alpha, parse_partition, render_ypoly, schur

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _load_json_arg(arg: str):
    """Inline JSON if the argument looks like JSON, else a file path."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            with open(arg, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError("invalid-json", f"cannot read {arg!r}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("invalid-json", f"malformed JSON: {exc}") from None


def _group_from_args(args) -> CartanData:
    matrix_file = getattr(args, "group_matrix", None)
    tag = getattr(args, "group", None)
    if matrix_file is not None:
        if tag is not None:
            raise InputError(
                "invalid-group", "give either a group tag or --group-matrix, not both"
            )
        data = _load_json_arg(matrix_file)
        if isinstance(data, dict):
            label = data.get("label", "custom")
            data = data.get("cartan")
            if data is None:
                raise InputError("invalid-cartan", "expected a 'cartan' matrix entry")
        else:
            label = "custom"
        if not isinstance(data, list):
            raise InputError("invalid-cartan", "expected a JSON integer matrix")
        return custom_cartan(data, label=label)
    if tag is None:
        raise InputError("invalid-group", "a group tag or --group-matrix is required")
    return cartan_from_tag(tag)


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError("invalid-weight", f"cannot parse weight {text!r}") from None


def _print_not_certified(result: characters.NotInOmega, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(result.to_json_dict()))
        return
    print("not-certified")
    print(f"reason: {result.reason}")
    if result.witness is not None:
        print(f"witness: {json.dumps(list(result.witness))}")
    if result.deficit is not None:
        print(f"deficit: {result.deficit}")
    if result.expected is not None:
        print(f"expected: {result.expected}")
    if result.actual is not None:
        print(f"actual: {result.actual}")
    print("note: not certified by this criterion; existence of a map is not ruled out")


def _cmd_char(args) -> int:
    cd = _group_from_args(args)
    char = characters.weight_multiplicities(cd, _parse_weight(args.weight), args.max_terms)
    print(render(char))
    return EXIT_OK


def _cmd_dim(args) -> int:
    cd = _group_from_args(args)
    print(characters.dimension(cd, _parse_weight(args.weight)))
    return EXIT_OK


def _cmd_smap(args) -> int:
    hom, _ = realize.cohom_from_json(_load_json_arg(args.hom))
    print(render(realize.s_map(hom)))
    return EXIT_OK


def _cmd_realize(args) -> int:
    cd = _group_from_args(args)
    hom, group = realize.cohom_from_json(_load_json_arg(args.hom))
    if group is not None and getattr(args, "group", None) is not None:
        if cartan_from_tag(group) != cd:
            raise InputError(
                "group-mismatch", f"JSON group {group!r} differs from {args.group!r}"
            )
    result = realize.check_realizable(cd, hom, args.max_terms)
    if isinstance(result, characters.Certificate):
        if args.format == "json":
            print(json.dumps(result.to_json_dict()))
        else:
            print("certified")
            print(f"summands: {result.render()}")
            print(f"dim: {result.total_dim}")
        return EXIT_OK
    _print_not_certified(result, args.format)
    return EXIT_NOT_CERTIFIED


def _cmd_verify_theorem(args) -> int:
    cd = _group_from_args(args)
    data = _load_json_arg(args.weights)
    if isinstance(data, dict):
        data = data.get("weights")
    if not isinstance(data, list) or not all(isinstance(w, list) for w in data):
        raise InputError("invalid-weights", "expected a JSON list of weight vectors")
    tr = realize.TorusRestriction(tuple(tuple(w) for w in data))
    check = realize.verify_factorization(cd, tr)
    print(f"equal: {'true' if check.equal else 'false'}")
    print(f"character: {render(check.character)}")
    print(f"via-induced-map: {render(check.via_cohomology)}")
    return EXIT_OK


def _cmd_schur(args) -> int:
    mu = parse_partition(args.mu)
    print(render_ypoly(schur(mu, args.m)))
    return EXIT_OK


def _cmd_alpha(args) -> int:
    cd = _group_from_args(args)
    if not cd.label.startswith("A"):
        raise InputError("typea-required", "alpha is defined for type A groups only")
    poly = parse_poly(args.poly, cd.rank)
    print(render_ypoly(alpha(poly)))
    return EXIT_OK


def _cmd_cor3(args) -> int:
    mu = parse_partition(args.mu)
    result = realize.realize_schur(mu, args.m)
    print(f"n: {result.n}")
    print(f"rows: {json.dumps([list(r) for r in result.hom.rows])}")
    print(f"alpha-s: {render_ypoly(result.symmetric_function)}")
    matches = result.symmetric_function == schur(mu, args.m)
    print(f"check: {'ok' if matches else 'mismatch'}")
    return EXIT_OK


def _cmd_omega(args) -> int:
    cd = _group_from_args(args)
    certs = characters.omega_n_enumerate(cd, args.n, args.max_n)
    if args.format == "json":
        print(json.dumps([c.to_json_dict() for c in certs]))
    else:
        for cert in certs:
            print(cert.render())
    return EXIT_OK


def _add_group_options(sub, positional: bool = True):
    if positional:
        sub.add_argument("group", nargs="?", help="group tag such as A2, B3, G2")
    sub.add_argument(
        "--group-matrix",
        metavar="FILE",
        help="custom Cartan matrix as JSON (a matrix, or {'cartan': ..., 'label': ...})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagrep",
        description="Exact character arithmetic for cohomology maps between flag manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="irreducible character of a dominant weight")
    _add_group_options(p)
    p.add_argument("weight", help="dominant weight, comma-separated, e.g. 1,0")
    p.add_argument("--max-terms", type=int, default=characters.TERM_CAP)
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("dim", help="dimension of the irreducible with this highest weight")
    _add_group_options(p)
    p.add_argument("weight")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("smap", help="s-invariant of a cohomology matrix")
    p.add_argument("hom", help="JSON {'n': ..., 'rows': [[...], ...]} inline or a file")
    p.set_defaults(func=_cmd_smap)

    p = sub.add_parser("realize", help="certify a cohomology matrix, or report why not")
    _add_group_options(p)
    p.add_argument("hom")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-terms", type=int, default=characters.TERM_CAP)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser(
        "verify-theorem",
        help="check the character against the s-invariant of its induced matrix",
    )
    _add_group_options(p)
    p.add_argument("weights", help="JSON list of torus weights (or {'weights': ...})")
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("schur", help="Schur polynomial of a partition")
    p.add_argument("mu", help="partition, comma-separated, e.g. 2,1,0")
    p.add_argument("m", type=int, help="number of variables")
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("alpha", help="map a type-A polynomial to symmetric variables")
    _add_group_options(p)
    p.add_argument("poly", help="polynomial text, e.g. 'w1 + rho'")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("cor3", help="flag-to-flag map data realizing a Schur polynomial")
    p.add_argument("mu")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_cor3)

    p = sub.add_parser("omega", help="enumerate all certificates of total dimension n")
    _add_group_options(p)
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=characters.OMEGA_N_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_omega)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, which matches the input-error code
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
