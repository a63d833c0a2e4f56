"""Command-line front end: sp4gtz {basis,vector,matrix,verify,decompose}."""
from __future__ import annotations

import argparse
import json
import sys

from . import corrections
from .action import GENERATORS, generator_matrix, generator_name, matrix_diff, parse_generator, verify_brackets
from .diagrams import GTZDiagram, HighestWeight, OutsideChamber, diagram_to_shift, enumerate_diagrams, lift, shift_to_diagram
from .gamma import TheoremViolation, check_gkz, decompose, f_full, f_total, obar, realize_gamma
from .oracle import ENTRY_NAMES, realize, zhelobenko_vector
from .poly import LABEL_NAMES, Poly, rational_to_str

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_THEOREM = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sp4gtz", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, weight_required=True):
        sp.add_argument("--weight", nargs=2, type=int, metavar=("M1", "M2"), required=weight_required)
        sp.add_argument("--out", metavar="PATH")

    common(sub.add_parser("basis", help="list diagrams and their shift vectors"))
    v = sub.add_parser("vector", help="layered solution and entry polynomial of one diagram")
    common(v, weight_required=False)
    v.add_argument("--diagram", nargs=6, type=int, required=True, metavar="N")
    m = sub.add_parser("matrix", help="sparse matrix of one generator")
    common(m)
    m.add_argument("--generator", required=True)
    m.add_argument("--method", choices=("closed", "oracle"), default="closed")
    ver = sub.add_parser("verify", help="run the verification suite")
    common(ver, weight_required=False)
    ver.add_argument("--max-weight", type=int, metavar="M")
    dec = sub.add_parser("decompose", help="decompose a polynomial read as JSON")
    dec.add_argument("--input", metavar="PATH", help="JSON file (default: stdin)")
    dec.add_argument("--out", metavar="PATH")
    return p


def _weight(args) -> HighestWeight:
    try:
        return HighestWeight(*args.weight).validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_basis(args) -> tuple[int, dict]:
    w = _weight(args)
    rows = []
    for i, d in enumerate(enumerate_diagrams(w)):
        g = diagram_to_shift(d)
        rows.append({"index": i, "diagram": d.to_json(), "shift": list(g), "shift10": list(lift(g))})
    return EXIT_OK, {"weight": list(w), "dim": len(rows), "labels": LABEL_NAMES, "diagrams": rows}


def cmd_vector(args) -> tuple[int, dict]:
    d = GTZDiagram(*args.diagram)
    if not d.is_valid():
        raise UsageError(f"invalid diagram {list(d)}")
    if args.weight is not None and tuple(args.weight) != tuple(d.weight):
        raise UsageError("diagram does not belong to the given weight")
    g = diagram_to_shift(d)
    sol = f_full(g)
    return EXIT_OK, {
        "diagram": d.to_json(),
        "labels": LABEL_NAMES,
        "gamma_series": realize_gamma(g).to_json(LABEL_NAMES),
        "solution": sol.to_json(),
        "entry_names": ENTRY_NAMES,
        "realization": zhelobenko_vector(d).to_json(ENTRY_NAMES),
    }


def cmd_matrix(args) -> tuple[int, dict]:
    w = _weight(args)
    try:
        gen = parse_generator(args.generator)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, generator_matrix(w, gen, args.method).to_json()


def verify_weight(w) -> dict:
    """Every check for one highest weight; ``passed`` is the conjunction."""
    basis = enumerate_diagrams(w)
    gkz_fail, system_fail = [], []
    for d in basis:
        g = diagram_to_shift(d)
        if not check_gkz(g):
            gkz_fail.append(d.to_json())
        f = f_total(g)
        if any(obar(i, f) for i in range(3)):
            system_fail.append(d.to_json())
    for d in basis:
        zhelobenko_vector(d)
    oracle = {}
    for gen in GENERATORS:
        diff = matrix_diff(generator_matrix(w, gen), generator_matrix(w, gen, "oracle"))
        oracle[generator_name(gen)] = {
            "passed": not diff,
            "mismatches": [[r, c, rational_to_str(a), rational_to_str(b)] for (r, c), a, b in diff[:10]],
        }
    brackets = verify_brackets(w)
    passed = not gkz_fail and not system_fail and all(v["passed"] for v in oracle.values()) and not brackets
    return {
        "weight": list(w),
        "dim": len(basis),
        "gkz_failures": gkz_fail,
        "antisymmetrized_failures": system_fail,
        "oracle": oracle,
        "brackets": brackets,
        "passed": passed,
    }


def cmd_verify(args) -> tuple[int, dict]:
    if args.max_weight is not None:
        if args.max_weight < 0:
            raise UsageError("--max-weight must be nonnegative")
        weights = [HighestWeight(a, b) for a in range(args.max_weight + 1) for b in range(a + 1)]
    elif args.weight is not None:
        weights = [_weight(args)]
    else:
        raise UsageError("verify needs --weight or --max-weight")
    reports = [verify_weight(w) for w in weights]
    confirmations = corrections.confirm_all()
    passed = all(r["passed"] for r in reports) and all(c["confirmed"] for c in confirmations)
    payload = {"passed": passed, "weights": reports, "corrections": confirmations}
    return (EXIT_OK if passed else EXIT_FAIL), payload


def cmd_decompose(args) -> tuple[int, dict]:
    try:
        src = open(args.input) if args.input else sys.stdin
        with src:
            data = json.load(src)
        terms = data["poly"] if isinstance(data, dict) else data
        poly = Poly.from_json(terms, LABEL_NAMES)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read polynomial: {exc}") from None
    try:
        parts = decompose(poly)
    except ValueError as exc:
        if isinstance(exc, TheoremViolation):
            raise
        raise UsageError(str(exc)) from None
    out = []
    for g, c in parts:
        try:
            d = shift_to_diagram(g).to_json()
        except OutsideChamber:
            d = None
        out.append({"shift": list(g), "diagram": d, "coeff": rational_to_str(c)})
    return EXIT_OK, {"terms": out}


COMMANDS = {
    "basis": cmd_basis,
    "vector": cmd_vector,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
}


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    out = None
    try:
        args = build_parser().parse_args(argv)
        out = getattr(args, "out", None)
        code, payload = COMMANDS[args.command](args)
        payload = {"schema": 1, "command": args.command, **payload}
    except UsageError as exc:
        code, payload = EXIT_USAGE, {"schema": 1, "error": "usage", "message": str(exc)}
    except TheoremViolation as exc:
        data = {k: repr(v) for k, v in exc.data.items()}
        code, payload = EXIT_THEOREM, {"schema": 1, "error": "theorem-violation", "message": str(exc), "instance": data}
    _emit(payload, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
