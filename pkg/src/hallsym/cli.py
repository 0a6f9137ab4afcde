"""Command line front end.

Output is JSON by default (``--table`` for aligned text).  Exit status is 0
on success, 1 when a computation fails (or a verification suite reports a
failure) and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bases import convert
from .hallcore import BASES, BasisError, HallElement, TensorElement, antipode, coproduct, hall_polynomial, pairing, pieri_coeff
from .lambda_bridge import MultiPoly, expand_vars, psi
from .operators import D0, boson, jing_Q, operator_matrix, vertex_D0
from .oracle import OracleBoundError, count_aut, count_g
from .parsing import ParseError, format_element, parse_element
from .partition import parse_partition, partitions_of
from .qrat import PoleError, QRat, as_qrat, eval_at
from .verify import UnknownSuiteError, run_verify

EXIT_OK, EXIT_COMPUTE, EXIT_PARSE = 0, 1, 2


class _InputError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _q_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _InputError(f"--q expects a rational number, got {text!r}") from None


class _Out:
    """Coefficient rendering shared by every command (symbolic or evaluated at ``--q``)."""

    def __init__(self, q0: Fraction | None):
        self.q0 = q0

    def coeff_json(self, c):
        c = as_qrat(c)
        if self.q0 is None:
            return c.to_json()
        return str(eval_at(c, self.q0))

    def coeff_text(self, c) -> str:
        c = as_qrat(c)
        return str(c) if self.q0 is None else str(eval_at(c, self.q0))

    def element(self, x: HallElement) -> tuple[dict, list]:
        if self.q0 is None:
            text = format_element(x)
        else:
            # evaluate first; the text form then has rational coefficients
            ev = HallElement(x.basis, {lam: as_qrat(eval_at(c, self.q0)) for lam, c in x.terms.items()})
            text = format_element(ev)
        js = {
            "basis": x.basis,
            "text": text,
            "terms": [{"partition": list(lam), "coeff": self.coeff_json(c)} for lam, c in x.items()],
        }
        rows = [[f"{x.basis}{lam}", self.coeff_text(c)] for lam, c in x.items()]
        return js, rows

    def tensor(self, t: TensorElement) -> tuple[dict, list]:
        js = {
            "bases": list(t.bases),
            "terms": [
                {"left": list(a), "right": list(b), "coeff": self.coeff_json(c)} for (a, b), c in t.items()
            ],
        }
        rows = [[f"{t.bases[0]}{a} (x) {t.bases[1]}{b}", self.coeff_text(c)] for (a, b), c in t.items()]
        return js, rows

    def scalar(self, c) -> tuple:
        return self.coeff_json(c), [["value", self.coeff_text(c)]]

    def matrix(self, mat, rows_idx, cols_idx) -> tuple:
        js = {
            "rows": [list(l) for l in rows_idx],
            "cols": [list(l) for l in cols_idx],
            "entries": [[self.coeff_json(v) for v in row] for row in mat],
        }
        rows = [[str(r)] + [self.coeff_text(v) for v in row] for r, row in zip(rows_idx, mat)]
        return js, [[""] + [str(c) for c in cols_idx]] + rows

    def multipoly(self, m: MultiPoly) -> tuple:
        js = [{"exponents": list(e), "coeff": self.coeff_json(c)} for e, c in m.items()]
        return js, [["x^" + str(list(e)), self.coeff_text(c)] for e, c in m.items()]


def _element(text: str) -> HallElement:
    return parse_element(text)


def _maybe_convert(x: HallElement, basis: str | None) -> HallElement:
    return convert(x, basis) if basis else x


# -- commands --------------------------------------------------------------


def cmd_mul(args, out: _Out):
    x, y = _element(args.a), _element(args.b)
    return out.element(_maybe_convert(x * y, args.basis))


def cmd_coproduct(args, out: _Out):
    return out.tensor(coproduct(convert(_element(args.a), "I")))


def cmd_antipode(args, out: _Out):
    x = _element(args.a)
    return out.element(convert(antipode(convert(x, "I")), args.basis or x.basis))


def cmd_pair(args, out: _Out):
    return out.scalar(pairing(_element(args.a), _element(args.b)))


def cmd_convert(args, out: _Out):
    return out.element(convert(_element(args.a), args.basis))


def cmd_hallpoly(args, out: _Out):
    lam, mu, nu = (_partition_arg(s) for s in (args.lam, args.mu, args.nu))
    return out.scalar(QRat(hall_polynomial(lam, mu, nu)))


def cmd_pieri(args, out: _Out):
    lam, mu = _partition_arg(args.lam), _partition_arg(args.mu)
    return out.scalar(QRat(pieri_coeff(lam, mu, args.p)))


def cmd_d0(args, out: _Out):
    if args.degree is not None:
        d = args.degree
        return out.matrix(operator_matrix(D0, d), partitions_of(d), partitions_of(d))
    if args.a is None:
        raise _InputError("d0 needs an element or --degree")
    x = _element(args.a)
    return out.element(_maybe_convert(vertex_D0(x), args.basis))


def cmd_jing(args, out: _Out):
    return out.element(_maybe_convert(jing_Q(_partition_arg(args.lam)), args.basis))


def cmd_boson(args, out: _Out):
    if args.n == 0:
        raise _InputError("boson index must be nonzero")
    op = boson(args.n)
    if args.apply is not None:
        return out.element(op.apply(_element(args.apply)))
    if args.degree is None:
        raise _InputError("boson needs --apply EXPR or --degree D")
    d = args.degree
    target = d + op.degree_shift
    rows = partitions_of(target) if target >= 0 else ()
    return out.matrix(operator_matrix(op, d), rows, partitions_of(d))


def cmd_expand(args, out: _Out):
    if args.vars is None or args.vars < 1:
        raise _InputError("expand needs --vars N with N >= 1")
    return out.multipoly(expand_vars(psi(_element(args.a)), args.vars))


def cmd_oracle(args, out: _Out):
    q0 = int(args.field)
    lam = _partition_arg(args.lam)
    if args.kind == "g":
        if args.mu is None or args.nu is None:
            raise _InputError("oracle g needs --mu and --nu")
        value = count_g(lam, _partition_arg(args.mu), _partition_arg(args.nu), q0)
    else:
        value = count_aut(lam, q0)
    return value, [["value", str(value)]]


def cmd_verify(args, out: _Out):
    report = run_verify(args.suite, args.max_degree)
    rows = [[r["key"], "PASS" if r["ok"] else "FAIL"] for r in report["instances"]]
    return report, rows


def _common(p: argparse.ArgumentParser, with_q: bool = True):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", help="JSON output (default)")
    fmt.add_argument("--table", dest="table", action="store_true", help="aligned text output")
    p.set_defaults(table=False)
    if with_q:
        p.add_argument("--q", dest="q", default=None, help="evaluate coefficients at this rational value")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hallsym", description="Exact computations in the Hall algebra of the Jordan quiver.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("mul", help="product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--basis", choices=BASES)
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("coproduct", help="coproduct, in I (x) I coordinates")
    p.add_argument("a")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", help="antipode")
    p.add_argument("a")
    p.add_argument("--basis", choices=BASES)
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("pair", help="Hopf pairing of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("convert", help="change of basis")
    p.add_argument("a")
    p.add_argument("--basis", choices=BASES, required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("hallpoly", help="Hall polynomial g^lam_{mu,nu}")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(func=cmd_hallpoly)

    p = sub.add_parser("pieri", help="Pieri coefficient g^lam_{mu,(1^p)}")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("d0", help="apply D_0, or print its matrix with --degree")
    p.add_argument("a", nargs="?")
    p.add_argument("--degree", type=int)
    p.add_argument("--basis", choices=BASES)
    p.set_defaults(func=cmd_d0)

    p = sub.add_parser("jing", help="B_{lam_1} ... B_{lam_l} (1)")
    p.add_argument("lam")
    p.add_argument("--basis", choices=BASES)
    p.set_defaults(func=cmd_jing)

    p = sub.add_parser("boson", help="Heisenberg generator b_n")
    p.add_argument("n", type=int)
    p.add_argument("--apply", metavar="EXPR")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_boson)

    p = sub.add_parser("expand", help="psi(x) in finitely many variables")
    p.add_argument("a")
    p.add_argument("--vars", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", help="brute-force counts over F_q")
    p.add_argument("kind", choices=("g", "aut"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--q", dest="field", type=int, default=2, help="field size (prime)")
    _common(p, with_q=False)
    p.set_defaults(func=cmd_oracle, q=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--max-degree", type=int, default=4)
    _common(p, with_q=False)
    p.set_defaults(func=cmd_verify, q=None)

    for name, sp in sub.choices.items():
        if name not in ("oracle", "verify"):
            _common(sp)
    return parser


def _render_table(rows: list) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    return "\n".join("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip() for r in rows)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = _Out(_q_arg(args.q) if args.q is not None else None)
        payload, rows = args.func(args, out)
    except (ParseError, _InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnknownSuiteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PoleError, BasisError, OracleBoundError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.table:
        print(_render_table(rows))
    else:
        print(json.dumps({"command": args.verb, "result": payload}, indent=2, sort_keys=True))
    if args.verb == "verify" and not payload["passed"]:
        return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
