"""Command-line interface: ``trischur {tabloids,character,dimension,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .character import PoleError, SpecializationPoleError, Variant, character_sum, evaluate_character, expand_character, specialize_q
from .diagram import Diagram3
from .dimension import DegenerateSSError, dimension, dimension_terms
from .oracle import OracleSizeError
from .tabloid import classify, d_matrix, enumerate_tabloids
from .verify import SUITES, run_suite


def _n_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"n must be an integer, got {text!r}") from None
    if n < 3:
        raise argparse.ArgumentTypeError(f"n must be at least 3, got {n}")
    return n


def _m_arg(text: str) -> Diagram3:
    try:
        return Diagram3.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point_arg(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad point {text!r}; use e.g. 2,3,5/2") from None


def _ints_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _num(x) -> str:
    return str(Fraction(x))


def _emit(obj, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, indent=2) + "\n")


def _d_summary(tau) -> str:
    dm = d_matrix(tau)
    pairs = [f"{i + 1}{j + 1}:{v}" for i, row in enumerate(dm) for j, v in enumerate(row) if v]
    return f"sum={sum(map(sum, dm))} " + " ".join(pairs)


def cmd_tabloids(args) -> int:
    tabloids = enumerate_tabloids(args.n)
    if args.json:
        _emit([t.to_json() for t in tabloids])
        return 0
    for idx, tau in enumerate(tabloids):
        cls = classify(tau)
        kind = cls.kind.value + ("" if not cls.singular else " " + "".join(map(str, cls.ijk)))
        print(f"{idx:4d}  {tau}  {kind}  d[{_d_summary(tau)}]")
    print(f"{len(tabloids)} tabloids")
    return 0


def cmd_character(args) -> int:
    cs = character_sum(args.m, args.n, args.variant)
    report = {"command": "character", "n": args.n, "m": list(args.m.m), "variant": cs.variant.value}
    if args.eval:
        evaluations = []
        for point in args.eval:
            if len(point) != args.n:
                print(f"error: point {','.join(map(str, point))} needs {args.n} coordinates", file=sys.stderr)
                return 2
            evaluations.append({"point": [_num(x) for x in point], "value": _num(evaluate_character(cs, point))})
        report["evaluations"] = evaluations
    if args.q is not None:
        poly = specialize_q(cs, args.q or None)
        report["q"] = [{"exponent": e[0], "coeff": _num(c)} for e, c in sorted(poly.items())]
    if args.expand:
        ch = expand_character(cs)
        report["expanded"] = ch.to_json()
    if args.json:
        _emit(report)
        return 0
    for ev in report.get("evaluations", []):
        print(f"chi({','.join(ev['point'])}) = {ev['value']}")
    if "q" in report:
        print("q-specialization: " + (poly.to_string(["q"]) if not poly.is_zero() else "0"))
    if "expanded" in report:
        print(str(ch) if ch.dimension() else "0")
    return 0


def cmd_dimension(args) -> int:
    terms = dimension_terms(args.m, args.n, args.variant)
    dim = dimension(args.m, args.n, args.variant)
    if args.json:
        report = {"command": "dimension", "n": args.n, "m": list(args.m.m), "variant": Variant(args.variant).value,
                  "dimension": dim}
        if args.per_tabloid:
            report["per_tabloid"] = [
                {"tabloid": t.tabloid.to_json(), "b": t.b, "r": list(t.r), "value": _num(t.value)} for t in terms
            ]
        _emit(report)
        return 0
    if args.per_tabloid:
        for t in terms:
            print(f"{t.tabloid}  b={t.b}  {_num(t.value)}")
    print(dim)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.n, args.m, args.seed, args.max_squares)
    report.command = " ".join(["verify", "--suite", args.suite, "--n", str(args.n)]
                              + (["--m", str(args.m)] if args.m else [])
                              + (["--seed", str(args.seed)] if args.seed is not None else []))
    if args.json:
        _emit(report.to_json())
    else:
        for c in report.checks:
            print(f"{c.status} {c.name}" + (f": {c.detail}" if c.status == "FAIL" else ""))
        passed = sum(c.status == "PASS" for c in report.checks)
        print(f"{passed}/{len(report.checks)} checks passed")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trischur", description="Characters and dimensions of Schur modules of three-row diagrams."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tabloids", help="list column tabloids with class and d-matrix")
    p.add_argument("--n", type=_n_arg, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tabloids)

    variants = [v.value for v in Variant]
    p = sub.add_parser("character", help="evaluate, specialize or expand the character")
    p.add_argument("--m", type=_m_arg, required=True, help="seven column multiplicities, e.g. 0,0,0,1,1,1,0")
    p.add_argument("--n", type=_n_arg, required=True)
    mode = p.add_argument_group("output (at least one)")
    mode.add_argument("--eval", type=_point_arg, action="append", metavar="X1,...,XN",
                      help="evaluate at a rational point; may be repeated")
    mode.add_argument("--q", type=_ints_arg, nargs="?", const=[], metavar="C1,...,CN",
                      help="principal specialization x_a -> q^c_a (default c = 1..n)")
    mode.add_argument("--expand", action="store_true", help="expand into monomials (n <= 4)")
    p.add_argument("--variant", choices=variants, default="simplified")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("dimension", help="dim S_D via the Bott-residue sum")
    p.add_argument("--m", type=_m_arg, required=True)
    p.add_argument("--n", type=_n_arg, required=True)
    p.add_argument("--variant", choices=["simplified", "ss"], default="simplified")
    p.add_argument("--per-tabloid", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("verify", help="run a verification suite; exit 0 iff every check passes")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=_n_arg, required=True)
    p.add_argument("--m", type=_m_arg, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-squares", type=int, default=None,
                   help="oracle size limit (default: $SCHUR_MAX_SQUARES or 8)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "character" and not (args.eval or args.q is not None or args.expand):
        parser.error("character needs --eval, --q or --expand")
    try:
        return args.func(args)
    except (PoleError, SpecializationPoleError, DegenerateSSError, OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
