"""Command-line interface: catalog inspection, operator/spectrum dumps, lift
construction, the cyclic-symmetry report, and the verification suites."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cyclic
from .catalog import catalog, get_form
from .duality import build_duality_operator
from .forms import kform_to_json
from .lifting import hodge_dual_lift, trivial_lift
from .spectral import spectrum
from .suites import SUITE_ORDER, VerificationOutcome, run_all, run_suite


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _threads() -> int | None:
    raw = os.environ.get("FORMDUAL_THREADS")
    if raw is None:
        return os.cpu_count()
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_catalog(args) -> int:
    cat = catalog()
    if args.dump is not None:
        if args.dump not in cat:
            raise UsageError(f"unknown form {args.dump!r}")
        entry = cat[args.dump]
        _emit(
            {
                "name": entry.name,
                "D": entry.D,
                "note": entry.note,
                "form": kform_to_json(entry.form),
            }
        )
    else:
        _emit(
            [
                {"name": e.name, "D": e.D, "degree": e.form.k, "terms": len(e.form.coeffs), "note": e.note}
                for e in cat.values()
            ]
        )
    return 0


def cmd_operator(args) -> int:
    form = get_form(args.form)
    b = build_duality_operator(form, args.k)
    payload = {
        "form": args.form,
        "k": args.k,
        "D": b.D,
        "m": b.m,
        "degenerate": b.degenerate,
        "kappa": str(b.kappa),
        "matrix": b.matrix.to_json(),
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=False)
            fh.write("\n")
    else:
        _emit(payload)
    return 0


_SUITE_EXPECTATIONS = {
    ("theta8", 3): "spin7",
    ("theta8", 2): "spin7",
    ("theta8", 4): "spin7",
    ("thetabar7", 2): "g2",
    ("thetabar7", 3): "g2",
    ("z8", 2): "z8",
    ("z8", 3): "z8",
    ("z8", 4): "z8",
}


def _expected_factors_for(name: str, k: int):
    from .suites import complex_expected

    if name == "z8":
        return cyclic.expected_factors(k)
    if name.startswith("j") and name[1:].isdigit():
        return complex_expected(int(name[1:]), k)[0]
    table = {
        ("theta8", 2): [[-2, 1], [6, 1]],
        ("theta8", 3): [[4, 1], [Fraction(-2, 3), 1]],
        ("theta8", 4): [[0, 1], [2, 1], [4, 1], [Fraction(-2, 3), 1]],
        ("thetabar7", 2): [[-2, 1], [4, 1]],
        ("thetabar7", 3): [[4, 1], [2, 1], [Fraction(-2, 3), 1]],
    }
    key = (name, k)
    if key in table:
        from .linalg import Polynomial

        return [Polynomial([Fraction(c) for c in coeffs]) for coeffs in table[key]]
    return None


def cmd_spectrum(args) -> int:
    form = get_form(args.form)
    b = build_duality_operator(form, args.k)
    expected = _expected_factors_for(args.form, args.k) if args.expect_suite else None
    if args.form == "z8" and args.expect_suite:
        mat = cyclic.z8_operator(args.k)
        name = f"{cyclic.SCALE_BY_DEGREE[args.k]}b_{args.form}|L{args.k}R{b.D}"
    else:
        mat = b.matrix
        name = f"b_{args.form}|L{args.k}R{b.D}"
    report = spectrum(mat, expected_factors=expected, name=name)
    _emit(report.to_json())
    return 0


def cmd_lift(args) -> int:
    form = get_form(args.form)
    if args.to < form.D:
        raise UsageError(f"--to {args.to} is below the form's dimension D={form.D}")
    lifted = hodge_dual_lift(form, args.to) if args.dual else trivial_lift(form, args.to)
    _emit(
        {
            "form": args.form,
            "to": args.to,
            "dual": bool(args.dual),
            "lifted": kform_to_json(lifted),
        }
    )
    return 0


def cmd_z8(args) -> int:
    k = args.k
    if k not in (2, 3, 4):
        raise UsageError("z8 supports --k 2, 3 or 4")
    op = cyclic.z8_operator(k)
    report = spectrum(op, expected_factors=cyclic.expected_factors(k), name=f"{cyclic.SCALE_BY_DEGREE[k]}b_z8|L{k}R8")
    _emit(
        {
            "k": k,
            "scale": cyclic.SCALE_BY_DEGREE[k],
            "spectrum": report.to_json(),
            "sigma_multiplicities": cyclic.sigma_multiplicities(k),
            "restricted_sigma_equations": {
                key: bool(val) for key, val in cyclic.restricted_sigma_equations(k).items()
            },
            "commutes_with_shift": cyclic.commutes_with_sigma(k),
        }
    )
    return 0


def emit_report(outcomes: list[VerificationOutcome], fmt: str) -> bool:
    all_pass = all(o.overall for o in outcomes)
    if fmt == "json":
        _emit(
            {
                "suites": [o.to_json() for o in outcomes],
                "overall": "pass" if all_pass else "fail",
            }
        )
        return all_pass
    for outcome in outcomes:
        n = len(outcome.checks)
        print(f"suite {outcome.suite}: {n} checks")
        for c in outcome.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  [{outcome.suite}] {c.check_id} {c.anchor}: {status}"
            if c.detail:
                line += f"  ({c.detail})"
            print(line)
        print(f"suite {outcome.suite}: {'PASS' if outcome.overall else 'FAIL'}")
    print(f"overall: {'PASS' if all_pass else 'FAIL'}")
    return all_pass


def cmd_verify(args) -> int:
    if args.suite == "all":
        outcomes = run_all(threads=_threads())
    elif args.suite in SUITE_ORDER:
        outcomes = [run_suite(args.suite)]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITE_ORDER)}")
    return 0 if emit_report(outcomes, args.format) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formdual", description="Exact duality-operator verifier for invariant forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list catalog forms or dump one")
    p.add_argument("--dump", metavar="NAME", default=None)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("operator", help="emit the operator matrix as sparse JSON")
    p.add_argument("--form", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_operator)

    p = sub.add_parser("spectrum", help="emit the exact spectrum report")
    p.add_argument("--form", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--expect-suite", action="store_true")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("lift", help="lift a form to a larger dimension")
    p.add_argument("--form", required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--dual", action="store_true")
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("z8", help="cyclic-symmetry spectrum and shift report")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_z8)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
