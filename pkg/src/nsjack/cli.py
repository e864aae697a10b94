"""Command-line front end.

Exit codes: 0 success, 1 user error (bad flags, bad labels, singular
parameters), 2 verification failure, 3 invariant violation.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .combinatorics import Interval, ParameterSet, sort_to_partition, total_order_key, to_fraction
from .errors import InvariantViolation, SingularParameterError, UserInputError
from .polyalg import parse_poly, to_text

MAX_N = 6
MAX_DEGREE = 8

EXIT_OK, EXIT_USER, EXIT_VERIFY, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USER)


def _scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _label(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UserInputError(f"label must be comma-separated integers, got {text!r}") from exc
    if any(v < 0 for v in out):
        raise UserInputError(f"label entries must be nonnegative: {text!r}")
    return out


def _params(args) -> ParameterSet:
    p = ParameterSet(args.n, to_fraction(args.k), to_fraction(args.k1))
    if p.N > MAX_N and not args.allow_large:
        raise UserInputError(f"N={p.N} exceeds the guard {MAX_N}; pass --allow-large to override")
    return p


def _check_degree(args, d: int):
    if d > MAX_DEGREE and not args.allow_large:
        raise UserInputError(f"degree {d} exceeds the guard {MAX_DEGREE}; pass --allow-large to override")


def _need(args, name: str, p: ParameterSet) -> tuple[int, ...]:
    text = getattr(args, name)
    if text is None:
        raise UserInputError(f"--{name} is required for this command")
    label = _label(text)
    if len(label) != p.N:
        raise UserInputError(f"--{name} has {len(label)} entries, N={p.N}")
    _check_degree(args, sum(label))
    return label


def _intervals(args, p: ParameterSet) -> list[Interval]:
    out = [Interval.parse(t) for t in args.interval]
    for I in out:
        I.check(p.N)
    return out


def _one_interval(args, p: ParameterSet) -> Interval:
    ints = _intervals(args, p)
    if len(ints) != 1:
        raise UserInputError("exactly one --interval is required for this command")
    return ints[0]


def _matrix(rows, order) -> list[list[str]]:
    return [[_scalar(rows[r][c]) for c in order] for r in order]


# ---------------------------------------------------------------- commands


def cmd_jack(args, p):
    from .jack import e_monic, omega, zeta

    alpha = _need(args, "alpha", p)
    build = {"monic": e_monic, "zeta": zeta, "omega": omega}[args.normalization]
    return {"poly": to_text(build(alpha, p))}


def cmd_zeta(args, p):
    from .jack import zeta

    return {"poly": to_text(zeta(_need(args, "alpha", p), p))}


def cmd_norms(args, p):
    from .dunkl_a import inner_p
    from .jack import zeta, zeta_norms

    alpha = _need(args, "alpha", p)
    n = zeta_norms(alpha, p)
    if args.check:
        z = zeta(alpha, p)
        if inner_p(z, z, p) != n.p_norm:
            raise InvariantViolation(f"closed p-norm disagrees with the inner product at {alpha}")
    return {"p_norm": _scalar(n.p_norm), "A_norm": _scalar(n.A_norm), "torus_norm": _scalar(n.torus_norm)}


def cmd_eval1n(args, p):
    from .jack import eval_1N, eval_1N_direct

    alpha = _need(args, "alpha", p)
    value = eval_1N(alpha, p)
    if args.check and eval_1N_direct(alpha, p) != value:
        raise InvariantViolation(f"closed evaluation disagrees with the polynomial at {alpha}")
    return {"value": _scalar(value)}


def cmd_coset(args, p):
    from .jack import coset_data

    data = coset_data(_need(args, "alpha", p), _one_interval(args, p), p)
    return {"orbit": [list(b) for b in data.orbit], "B": _matrix(data.B, data.orbit),
            "H": _matrix(data.H, data.orbit)}


def _typeb_report(alpha, kind, args, p):
    from .typeb import typeb_invariant_report

    r = typeb_invariant_report(alpha, args.ell, kind, p)
    if not r.consistent:
        raise InvariantViolation(f"type-B {kind} norms or evaluation disagree with closed forms")
    return {"poly": to_text(r.poly), "p_norm": _scalar(r.p_norm), "B_norm": _scalar(r.B_norm),
            "value": _scalar(r.value)}


def cmd_invariant(args, p):
    from .jack import j_invariant

    alpha = _need(args, "alpha", p)
    if args.ell is not None:
        return _typeb_report(alpha, "j", args, p)
    ints = _intervals(args, p) or [Interval(1, p.N)]
    return {"poly": to_text(j_invariant(alpha, ints, p))}


def cmd_alternant(args, p):
    from .jack import a_alternating

    alpha = _need(args, "alpha", p)
    if args.ell is not None:
        return _typeb_report(alpha, "a", args, p)
    ints = _intervals(args, p) or [Interval(1, p.N)]
    return {"poly": to_text(a_alternating(alpha, ints, p))}


def cmd_psi(args, p):
    from .dunkl_a import apply_psi
    from .skew_eval import psi_scalar_check

    I = _one_interval(args, p)
    if args.poly is not None:
        f = parse_poly(args.poly, p.N)
        _check_degree(args, f.degree())
        return {"poly": to_text(apply_psi(f, I, p))}
    return {"scalar": _scalar(psi_scalar_check(_need(args, "alpha", p), I, p))}


def cmd_weyl_eval(args, p):
    from .skew_eval import IntervalFamily, alternant_quotient_eval, weyl_evaluate

    fam = IntervalFamily(_intervals(args, p))
    if not fam.intervals:
        raise UserInputError("at least one --interval is required")
    if args.poly is not None:
        f = parse_poly(args.poly, p.N)
        _check_degree(args, f.degree())
        return {"value": _scalar(weyl_evaluate(f, fam, p))}
    return {"value": _scalar(alternant_quotient_eval(_need(args, "alpha", p), fam, p))}


def cmd_hermite(args, p):
    from .typeb import HermiteLabel, hermite, hermite_norm_B

    label = HermiteLabel.from_composition(_need(args, "beta", p))
    return {"poly": to_text(hermite(label, p)), "norm_B": _scalar(hermite_norm_B(label, p))}


def cmd_binomial(args, p):
    from .typeb import binomial_coeffs

    coeffs = binomial_coeffs(_need(args, "alpha", p), p, max_degree=args.deg)
    order = sorted(coeffs, key=total_order_key, reverse=True)
    return {"coefficients": [{"gamma": list(g), "value": _scalar(coeffs[g])} for g in order]}


def cmd_spectrum(args, p):
    from .jack import h1_spectrum
    from .typeb import HermiteLabel, spectra

    if args.which == "H1":
        lam = _need(args, "alpha", p) if args.alpha is not None else _need(args, "beta", p)
        return {"value": _scalar(h1_spectrum(sort_to_partition(lam), p))}
    label = HermiteLabel.from_composition(_need(args, "beta", p))
    return {"value": _scalar(spectra(label, args.which, p))}


def cmd_verify(args, p):
    from .verify import VerifyConfig, run_suites

    deg = 4 if args.deg is None else args.deg
    _check_degree(args, deg)
    cfg = VerifyConfig(p, deg, seed=args.seed, samples=args.samples)
    results = run_suites(args.suite, cfg)
    report = {"suites": [{"name": r.name, "passed": r.passed, "failed": r.failed + r.violations,
                          "failures": r.failures[:5]} for r in results]}
    report["ok"] = all(r.ok for r in results)
    code = EXIT_OK
    if any(r.violations for r in results):
        code = EXIT_INVARIANT
    elif not report["ok"]:
        code = EXIT_VERIFY
    return report, code


COMMANDS = {
    "jack": cmd_jack, "zeta": cmd_zeta, "norms": cmd_norms, "eval1n": cmd_eval1n,
    "coset": cmd_coset, "invariant": cmd_invariant, "alternant": cmd_alternant, "psi": cmd_psi,
    "weyl-eval": cmd_weyl_eval, "hermite": cmd_hermite, "binomial": cmd_binomial,
    "spectrum": cmd_spectrum, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nsjack", description="Exact nonsymmetric Jack polynomial computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--k", default="1")
        s.add_argument("--k1", default="0")
        s.add_argument("--alpha")
        s.add_argument("--beta")
        s.add_argument("--interval", action="append", default=[])
        s.add_argument("--ell", type=int)
        s.add_argument("--deg", type=int)
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.add_argument("--allow-large", action="store_true")
        if name == "jack":
            s.add_argument("--normalization", choices=("monic", "zeta", "omega"), default="monic")
        if name in ("norms", "eval1n"):
            s.add_argument("--check", action="store_true", help="also compute from the polynomial")
        if name in ("psi", "weyl-eval"):
            s.add_argument("--poly", help="polynomial in canonical text form")
        if name == "spectrum":
            s.add_argument("--which", choices=("H1", "H2", "H3"), default="H3")
        if name == "verify":
            s.add_argument("--suite", default="all")
            s.add_argument("--seed", type=int, default=0)
            s.add_argument("--samples", type=int, default=10)
    return parser


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, separators=(",", ":"))
    if "suites" in report:
        lines = [f"{r['name']}: {r['passed']} passed, {r['failed']} failed" for r in report["suites"]]
        lines.append("ok" if report["ok"] else "FAILED")
        return "\n".join(lines)
    return "\n".join(f"{key}: {val}" for key, val in report.items())


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        p = _params(args)
        out = COMMANDS[args.command](args, p)
    except InvariantViolation as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except (UserInputError, SingularParameterError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USER
    report, code = out if isinstance(out, tuple) else (out, EXIT_OK)
    sys.stdout.write(_render(report, args.format) + "\n")
    return code


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USER
    raise SystemExit(code)
