"""Command-line entry point: ``naqm {verify,simulate,eval,table}``.

Exit codes: 0 success, 1 verification failure or runtime blow-up,
2 usage error, 3 expression error.
"""

from __future__ import annotations

import argparse
import sys

from . import expr
from .algebra import export_table
from .brackets import PhysicalConstants
from .dynamics import BlowUpError, DynamicsModel, FieldConfig, integrate, pauli_relations_check
from .matrix_rep import homomorphism_check
from .report import reports_to_json
from .verification import SuiteId, run_all, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_EXPR = 3

EXTRA_CHECKS = {"matrix-homomorphism": homomorphism_check, "pauli-relations": pauli_relations_check}

EXPR_HELP = """\
expression grammar (lowest precedence first):
  a + b, a - b           addition, subtraction
  a * b                  product; a*b*c means (a*b)*c (non-associative!)
  -a                     negation
  1, 2.5, 3I, I          scalars (I is the scalar imaginary unit)
  i0..i7, e1..e7         basis units
  (a)                    grouping
  [a, b, c]              ternary bracket a(bc) - (ca)b
  comm(a, b)             ab - ba
  assoc(a, b, c)         (ab)c - a(bc)
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vector(text: str) -> list[float]:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return parts


def _sign(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = 0
    if v not in (1, -1):
        raise argparse.ArgumentTypeError(f"must be 1 or -1, got {text!r}")
    return v


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="naqm", description="Sedenion algebra, ternary-bracket checks and qubit dynamics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    suites = ["all"] + [s.slug for s in SuiteId] + list(EXTRA_CHECKS)
    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", default="all", choices=suites, metavar="NAME",
                   help="one of: " + ", ".join(suites))
    v.add_argument("--hbar-tilde", type=_positive, default=1.0)
    v.add_argument("--json", action="store_true", help="machine-readable report on stdout")

    s = sub.add_parser("simulate", help="integrate a qubit model with RK4 and write a CSV trajectory")
    s.add_argument("--model", choices=[m.value for m in DynamicsModel], default="na-qubit")
    s.add_argument("--omega", type=_vector, default=[0.0, 0.0, 1.0])
    s.add_argument("--omega1", type=_vector, default=[0.0, 0.0, 1.0])
    s.add_argument("--omega2", type=_vector, default=[0.0, 0.0, 1.0])
    s.add_argument("--n1", type=_sign, default=1)
    s.add_argument("--n2", type=_sign, default=1)
    s.add_argument("--s0", type=_vector, default=[1.0, 0.0, 0.0])
    s.add_argument("--l0", type=_vector, default=[0.0, 0.0, 0.0])
    s.add_argument("--hbar-tilde", type=_positive, default=1.0)
    s.add_argument("--t-max", type=_positive, default=6.283185307179586)
    s.add_argument("--dt", type=_positive, default=1e-3)
    s.add_argument("--overflow", type=_positive, default=None,
                   help="abort once any component exceeds this magnitude")
    s.add_argument("--output", "-o", default=None, help="CSV path (default: stdout)")

    e = sub.add_parser("eval", help="evaluate an algebra expression",
                       epilog=EXPR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    e.add_argument("expression")

    t = sub.add_parser("table", help="print the 16x16 multiplication table")
    t.add_argument("--format", choices=["csv", "markdown"], default="csv")
    t.add_argument("--output", "-o", default=None)
    return p


def cmd_verify(args, out) -> int:
    constants = PhysicalConstants(hbar_tilde=args.hbar_tilde)
    if args.suite == "all":
        reports = run_all(constants)
    elif args.suite in EXTRA_CHECKS:
        reports = [EXTRA_CHECKS[args.suite]()]
    else:
        reports = [run_suite(SuiteId.from_slug(args.suite), constants)]
    if args.json:
        out.write(reports_to_json(reports) + "\n")
    else:
        for r in reports:
            out.write(r.to_text() + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_simulate(args, out, err) -> int:
    if args.t_max < args.dt:
        err.write("naqm simulate: error: --t-max must be >= --dt\n")
        return EXIT_USAGE
    model = DynamicsModel(args.model)
    f = FieldConfig(omega=args.omega, omega1=args.omega1, omega2=args.omega2, n1=args.n1, n2=args.n2)
    initial = args.s0 + args.l0 if model is DynamicsModel.EXTENDED else args.s0
    try:
        traj = integrate(model, initial, f, args.t_max, args.dt,
                         hbar_tilde=args.hbar_tilde, overflow=args.overflow)
    except BlowUpError as exc:
        err.write(f"naqm simulate: {exc}\n")
        return EXIT_FAILED
    text = traj.to_csv()
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            err.write(f"naqm simulate: cannot write {args.output}: {exc.strerror}\n")
            return EXIT_USAGE
    else:
        out.write(text)
    quantity = traj.conserved_label
    err.write(f"{model.value}: {len(traj)} rows, t_end = {traj.times[-1]:.17g}, "
              f"max drift of {quantity} = {traj.drift():.3e} (relative {traj.relative_drift():.3e})\n")
    return EXIT_OK


def cmd_eval(args, out, err) -> int:
    notes: list[str] = []
    try:
        value = expr.evaluate_text(args.expression, notes)
    except expr.ExprError as exc:
        err.write(f"naqm eval: error: {exc}\n{exc.caret(args.expression)}\n")
        return EXIT_EXPR
    for n in notes:
        err.write(n + "\n")
    out.write(expr.format_element(value) + "\n")
    return EXIT_OK


def cmd_table(args, out, err) -> int:
    text = export_table(args.format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            err.write(f"naqm table: cannot write {args.output}: {exc.strerror}\n")
            return EXIT_USAGE
    else:
        out.write(text)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        return cmd_verify(args, out)
    if args.command == "simulate":
        return cmd_simulate(args, out, err)
    if args.command == "eval":
        return cmd_eval(args, out, err)
    return cmd_table(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
