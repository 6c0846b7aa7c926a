"""The ``gw`` command line: exact invariants in text or JSON form.

Output is deterministic (sorted keys, no timestamps, no environment
lookups); rationals serialize as "p/q" strings, never floats.  Exit codes:
0 success, 1 math-domain error (e.g. a general-type model), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance
from .calabi_yau import correlator, cy_correlator, quintic_report, solve_lambdas_up_to
from .correlators import CIModel, classify, one_point_invariant, phi
from .laurent import LaurentPoly
from .mirror import verify_mirror_identity
from .relative import (
    RelativeModel,
    derive_linear_cy_lambdas,
    linear_cy_model,
    linear_cy_pushforward,
    porteous_lines,
    relative_euler,
    relative_phi,
)
from .rings import CohClass, RingSpec

# -- serialization ----------------------------------------------------------


def coh_to_json(cls: CohClass) -> dict:
    spec = cls.spec
    if not spec.is_relative:
        return {"h": [str(cls.coefficient(k)) for k in range(spec.n + 1)]}
    names = spec.generator_names()
    terms = []
    for k, mono, c in sorted(cls.terms()):
        base = {names[i]: e for i, e in enumerate(mono) if e}
        terms.append({"h": k, "base": base, "c": str(c)})
    return {"terms": terms}


def laurent_to_json(poly: LaurentPoly) -> list[dict]:
    out = []
    for exp in sorted(poly.support(), reverse=True):
        entry: dict = {"t": exp}
        entry.update(coh_to_json(poly.coefficient(exp)))
        out.append(entry)
    return out


def coh_from_json(spec: RingSpec, data: dict) -> CohClass:
    if "h" in data:
        return CohClass(spec, [{(): Fraction(v)} for v in data["h"]])
    names = list(spec.generator_names())
    terms: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for item in data["terms"]:
        mono = [0] * len(names)
        for name, e in item.get("base", {}).items():
            mono[names.index(name)] = e
        terms[(item["h"], tuple(mono))] = Fraction(item["c"])
    return CohClass.from_terms(spec, terms)


def laurent_from_json(spec: RingSpec, data: list[dict]) -> LaurentPoly:
    return LaurentPoly(
        spec,
        {
            item["t"]: coh_from_json(spec, {k: v for k, v in item.items() if k != "t"})
            for item in data
        },
    )


def _lambda_json(lambdas) -> dict:
    return {
        str(d): {"alpha": str(lam.alpha), "beta": str(lam.beta)}
        for d, lam in sorted(lambdas.items())
    }


# -- command handlers -------------------------------------------------------


def _model(args) -> CIModel:
    return classify(args.n, tuple(args.l or ()))


def cmd_phi(args) -> tuple[dict, str]:
    model = _model(args)
    value = phi(model, args.d)
    payload = {
        "command": "phi",
        "n": model.n,
        "degrees": list(model.degrees),
        "d": args.d,
        "phi": laurent_to_json(value),
    }
    return payload, str(value)


def cmd_correlator(args) -> tuple[dict, str]:
    model = _model(args)
    value = correlator(model, args.d)
    payload = {
        "command": "correlator",
        "n": model.n,
        "degrees": list(model.degrees),
        "classification": model.classification.value,
        "d": args.d,
        "correlator": laurent_to_json(value),
    }
    return payload, str(value)


def cmd_invariant(args) -> tuple[dict, str]:
    model = _model(args)
    value = one_point_invariant(correlator(model, args.d), args.a, args.b)
    payload = {
        "command": "invariant",
        "n": model.n,
        "degrees": list(model.degrees),
        "d": args.d,
        "a": args.a,
        "b": args.b,
        "value": str(value),
    }
    return payload, str(value)


def cmd_cy(args) -> tuple[dict, str]:
    model = _model(args)
    lambdas = solve_lambdas_up_to(model, args.max_d)
    correlators = {d: cy_correlator(model, d, lambdas) for d in range(args.max_d + 1)}
    payload = {
        "command": "cy",
        "n": model.n,
        "degrees": list(model.degrees),
        "max_d": args.max_d,
        "lambda": _lambda_json(lambdas),
        "correlators": {str(d): laurent_to_json(c) for d, c in correlators.items()},
    }
    lines = [f"model: {model}"]
    for d in range(1, args.max_d + 1):
        lines.append(f"lambda_{d} = {lambdas[d]}")
    for d in range(args.max_d + 1):
        lines.append(f"degree {d}: {correlators[d]}")
    return payload, "\n".join(lines)


def cmd_quintic(args) -> tuple[dict, str]:
    report = quintic_report(args.max_d)
    payload = {
        "command": "quintic",
        "max_d": args.max_d,
        "n": {str(r.degree): str(r.n_d) for r in report.rows},
        "m": {str(r.degree): str(r.m_d) for r in report.rows},
        "N": {str(d): str(v) for d, v in sorted(report.immersed_counts.items())},
        "lambda": _lambda_json({r.degree: r.lam for r in report.rows}),
    }
    lines = ["quintic threefold"]
    for r in report.rows:
        lines.append(
            f"d={r.degree}  n_d={r.n_d}  m_d={r.m_d}  "
            f"N_d={report.immersed_counts[r.degree]}  lambda_d = {r.lam}"
        )
    return payload, "\n".join(lines)


def cmd_mirror(args) -> tuple[dict, str]:
    model = _model(args)
    report = verify_mirror_identity(model, args.max_d)
    payload = {
        "command": "mirror",
        "n": model.n,
        "degrees": list(model.degrees),
        "max_d": args.max_d,
        "a": {str(e): str(v) for e, v in sorted(report.mirror.a.items())},
        "b": {str(e): str(v) for e, v in sorted(report.mirror.b.items())},
        "holds": report.holds,
        "first_failing_degree": report.first_failing_degree,
    }
    lines = [f"model: {model}"]
    for e in sorted(report.mirror.a):
        lines.append(f"a_{e} = {report.mirror.a[e]}   b_{e} = {report.mirror.b[e]}")
    verdict = "holds" if report.holds else f"fails at q^{report.first_failing_degree}"
    lines.append(f"mirror identity to q^{args.max_d}: {verdict}")
    return payload, "\n".join(lines)


def cmd_relative_euler(args) -> tuple[dict, str]:
    model = RelativeModel(n=args.n, base_cutoff=args.cutoff, degrees=tuple(args.l or ()))
    value = relative_euler(model, args.d)
    payload = {
        "command": "relative-euler",
        "n": args.n,
        "cutoff": args.cutoff,
        "d": args.d,
        "euler": laurent_to_json(value),
    }
    return payload, str(value)


def cmd_relative_phi(args) -> tuple[dict, str]:
    model = RelativeModel(n=args.n, base_cutoff=args.cutoff, degrees=tuple(args.l or ()))
    value = relative_phi(model, args.d)
    payload = {
        "command": "relative-phi",
        "n": args.n,
        "cutoff": args.cutoff,
        "degrees": list(model.degrees),
        "d": args.d,
        "phi": laurent_to_json(value),
    }
    return payload, str(value)


def cmd_relative_porteous(args) -> tuple[dict, str]:
    model = RelativeModel(n=args.n, base_cutoff=args.cutoff, degrees=(1,) * args.m)
    value = porteous_lines(model)
    payload = {
        "command": "relative-porteous",
        "n": args.n,
        "cutoff": args.cutoff,
        "m": args.m,
        "class": coh_to_json(value),
    }
    return payload, str(value)


def cmd_relative_linear_cy(args) -> tuple[dict, str]:
    model = linear_cy_model(args.n, args.cutoff)
    pairs = derive_linear_cy_lambdas(model, args.max_d)
    pushforwards = {
        d: linear_cy_pushforward(model, d, args.max_d) for d in range(1, args.max_d + 1)
    }
    payload = {
        "command": "relative-linear-cy",
        "n": args.n,
        "cutoff": args.cutoff,
        "max_d": args.max_d,
        "lambda": {
            str(e): {"a": str(a), "b": coh_to_json(b)}
            for e, (a, b) in enumerate(pairs, start=1)
        },
        "pushforward": {str(d): coh_to_json(c) for d, c in pushforwards.items()},
    }
    lines = [f"linear Calabi-Yau over P^{args.n}-bundle, cutoff {args.cutoff}"]
    for e, (a, b) in enumerate(pairs, start=1):
        lines.append(f"lambda_{e} = ({a})*t + ({b})")
    for d, c in pushforwards.items():
        lines.append(f"pushforward d={d}: {c}")
    return payload, "\n".join(lines)


def cmd_selftest(args) -> int:
    results = acceptance.run_all()
    if args.format == "json":
        doc = {
            "command": "selftest",
            "results": [
                {
                    "number": r.number,
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  criterion {r.number:2d}  {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


# -- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", type=Path, help="also write the JSON document here")

    parser = argparse.ArgumentParser(
        prog="gw",
        description="Exact one-point genus-zero Gromov-Witten invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="the hypergeometric Laurent polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("correlator", parents=[common], help="the one-point correlator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_correlator)

    p = sub.add_parser("invariant", parents=[common], help="a single one-point invariant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=int, required=True, help="cotangent-class power")
    p.add_argument("--b", type=int, required=True, help="hyperplane-class power")
    p.set_defaults(handler=cmd_invariant)

    p = sub.add_parser("cy", parents=[common], help="Calabi-Yau correlators and lambda table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--max-d", type=int, required=True)
    p.set_defaults(handler=cmd_cy)

    p = sub.add_parser("quintic", parents=[common], help="full quintic pipeline")
    p.add_argument("--max-d", type=int, required=True)
    p.set_defaults(handler=cmd_quintic)

    p = sub.add_parser("mirror", parents=[common], help="mirror coefficients and verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--max-d", type=int, required=True)
    p.set_defaults(handler=cmd_mirror)

    rel = sub.add_parser("relative", help="projective-bundle computations")
    rel_sub = rel.add_subparsers(dest="relative_command", required=True)

    p = rel_sub.add_parser("euler", parents=[common], help="relative equivariant Euler class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_relative_euler)

    p = rel_sub.add_parser("phi", parents=[common], help="relative phi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--l", type=int, action="append")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_relative_phi)

    p = rel_sub.add_parser("porteous", parents=[common], help="Porteous class of lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="number of linear sections")
    p.set_defaults(handler=cmd_relative_porteous)

    p = rel_sub.add_parser("linear-cy", parents=[common], help="linear Calabi-Yau pipeline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--max-d", type=int, required=True)
    p.set_defaults(handler=cmd_relative_linear_cy)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=None, selftest=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "selftest", False):
        return cmd_selftest(args)
    try:
        payload, text = args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    document = json.dumps(payload, indent=2, sort_keys=True)
    if args.out is not None:
        args.out.write_text(document + "\n", encoding="utf-8")
    print(document if args.format == "json" else text)
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
