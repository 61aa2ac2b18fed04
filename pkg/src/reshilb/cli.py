"""Command-line front end: JSON jobs in, JSON (or aligned text) reports out.

A job is a JSON object with a ``command`` key.  Its remaining keys are the
payload, either inline or under ``payload``; ``options`` may carry prime,
seed, dmax and format, and command-line flags override them.

Exit codes: 0 success, 1 invalid job, 2 a verification check failed,
3 an oracle table did not stabilize.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import oracle as orc
from .numpoly import NumericalPolynomial
from .oracle.fixtures import plane_conic_hypersurface, twisted_cubic
from .powers import (CIData, KoszulInput, ci_base_coeffs, deweger_check, conormal_closed_forms, e3_from_lower,
                     solve_all_powers)
from .residual import (CoeffInput, DegreeData, ResidualInput, coeff_residual, codimension_criterion,
                       degree_delta, series_residual)
from .secant import (SurfaceChernData, ThreefoldChernData, diagonal_e10, surface_margin,
                     surface_rr_coeffs, threefold_margin, threefold_rr_coeffs)
from .series import (RationalSeries, canonical_dual_class, decompose, equiv_r, expand, project,
                     ring_ops, substitute_inverse)
from .verify import parse_suite, run_check

COMMANDS = ("series", "residual-series", "residual-coeffs", "residual-degree", "powers-solve",
            "powers-formulas", "secant", "oracle", "verify")
OPTION_KEYS = ("prime", "seed", "dmax", "format", "suite")

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH, EXIT_UNSTABLE = 0, 1, 2, 3


class JobError(ValueError):
    """The job does not match the command's schema."""


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


# --- job normalization ----------------------------------------------------------

def normalize_job(raw: Any, overrides: dict | None = None) -> dict:
    if not isinstance(raw, dict):
        raise JobError("a job must be a JSON object")
    command = raw.get("command")
    if command not in COMMANDS:
        raise JobError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    if "payload" in raw:
        payload = dict(raw["payload"])
        extra = {k: v for k, v in raw.items() if k not in ("command", "payload", "options")}
        payload.update(extra)
    else:
        payload = {k: v for k, v in raw.items() if k not in ("command", "options")}
    options = dict(raw.get("options", {}))
    for key in OPTION_KEYS:
        if key in payload and key not in options and key != "format":
            options[key] = payload.pop(key)
    for key, value in (overrides or {}).items():
        if value is not None:
            options[key] = value
    options.setdefault("format", "json")
    if options["format"] not in ("json", "table"):
        raise JobError("format must be json or table")
    return {"command": command, "payload": payload, "options": options}


def _need(payload: dict, key: str):
    if key not in payload:
        raise JobError(f"missing field {key!r}")
    return payload[key]


def _series(obj) -> RationalSeries:
    return RationalSeries.from_json(obj)


def _int(x, name="value") -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise JobError(f"{name} must be an integer")
    return x


def _jsonable(x):
    if isinstance(x, RationalSeries):
        return {"series": str(x), **x.to_json()}
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, NumericalPolynomial):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


# --- command handlers -------------------------------------------------------------

def cmd_series(p: dict, opts: dict):
    op = p.get("op", "normalize")
    a = _series(_need(p, "a"))
    if op == "normalize":
        return a
    if op in ("add", "sub", "mul"):
        return ring_ops(op, a, _series(_need(p, "b")))
    if op == "shift":
        return a.shift(_int(_need(p, "k"), "k"))
    if op == "substitute_inverse":
        return substitute_inverse(a)
    if op == "expand":
        return expand(a, _int(_need(p, "lo"), "lo"), _int(_need(p, "hi"), "hi"))
    if op == "decompose":
        dec = decompose(a, _int(_need(p, "D"), "D"))
        length = p.get("length", dec.D)
        return {"D": dec.D, "e": [dec.coefficient(i) for i in range(length)],
                "remainder": str(dec.remainder)}
    if op == "equiv_r":
        return equiv_r(a, _series(_need(p, "b")), _need(p, "n"), _need(p, "r"))
    if op == "project":
        return project(a, _need(p, "n"), _need(p, "r"))
    if op == "canonical_dual":
        return canonical_dual_class(a, _need(p, "n"), p.get("r"))
    raise JobError(f"unknown series op {op!r}")


def _powers_list(p: dict, key: str, conv):
    raw = p.get("powers", [])
    if isinstance(raw, dict):
        return {int(j): conv(v) for j, v in raw.items()}
    return {int(item["j"]): conv(item[key]) for item in raw}


def cmd_residual_series(p: dict, opts: dict):
    variant = _need(p, "variant")
    poly = p.get("polynomial_ring", variant.startswith("polynomial"))
    inp = ResidualInput(n=_need(p, "n"), g=_need(p, "g"), s=_need(p, "s"), r=p.get("r", p["s"]),
                        degrees=_need(p, "degrees"),
                        series_R=_series(p["series_R"]) if "series_R" in p else None,
                        powers=_powers_list(p, "series", _series), polynomial_ring=poly)
    return series_residual(variant, inp)


def cmd_residual_coeffs(p: dict, opts: dict):
    variant = p.get("variant", "polynomial-residual")
    poly = p.get("polynomial_ring", variant.startswith("polynomial"))
    inp = CoeffInput(n=_need(p, "n"), g=_need(p, "g"), s=_need(p, "s"), r=p.get("r", p["s"]),
                     degrees=_need(p, "degrees"), powers=_powers_list(p, "e", tuple),
                     e_R=tuple(p.get("e_R", (1,))),
                     e_quotient=tuple(p["e_quotient"]) if "e_quotient" in p else None,
                     polynomial_ring=poly)
    out = {}
    if p.get("criterion"):
        margin, passes = codimension_criterion(inp)
        out["criterion"] = {"margin": margin, "passes": passes}
    if "i" in p or not p.get("criterion"):
        i = p.get("i", 0)
        out["value"] = coeff_residual(variant, inp, i)
    return out


def cmd_residual_degree(p: dict, opts: dict):
    delta = _int(_need(p, "delta"), "delta")
    variant = p.get("variant", "corrected")
    e_prime = {int(k): v for k, v in p.get("e_prime", {}).items()}
    if "degrees" in p:
        data = DegreeData.from_degrees(_need(p, "g"), p["degrees"], tuple(_need(p, "e")), e_prime)
    else:
        sigmas = [1]
        for k in (1, 2, 3):
            if f"sigma_{k}" not in p:
                break
            sigmas.append(p[f"sigma_{k}"])
        data = DegreeData(_need(p, "g"), _need(p, "sigma_s"), tuple(sigmas),
                          tuple(_need(p, "e")), e_prime)
    return degree_delta(delta, data, variant)


def cmd_powers_solve(p: dict, opts: dict):
    n = _int(_need(p, "n"), "n")
    inp = KoszulInput(n=n, r=_need(p, "r"), g=_need(p, "g"), a=p.get("a", -n),
                      dim_quotient=p.get("dimQuotient", p.get("dim_quotient", n - p["g"])),
                      degrees=_need(p, "degrees"), known=[_series(s) for s in _need(p, "known")],
                      series_R=_series(p["series_R"]) if "series_R" in p else None)
    return solve_all_powers(inp, p.get("pmax", 3))


def cmd_powers_formulas(p: dict, opts: dict):
    op = p.get("op", "formulas")
    if op == "formulas":
        g, base = _need(p, "g"), _need(p, "base")
        if len(base) != 6:
            raise JobError("base must list e0(0), e1(0), e2(0), e2(1), e3(0), e3(1)")
        ps = range(p["pmax"] + 1) if "pmax" in p else [p.get("p", 1)]
        return {str(k): conormal_closed_forms(g, base, k, p.get("variant", "corrected")) for k in ps}
    if op == "ci-base":
        d = _need(p, "ci_degrees")
        data = CIData(len(d), d)
        return {"e": ci_base_coeffs(data), "alphas": data.alphas, "sigmas": data.sigmas}
    if op == "e3-expression":
        e = _need(p, "e")
        return e3_from_lower(*e[:3], p.get("variant", "corrected"))
    if op == "deweger":
        return deweger_check(_need(p, "a"), _need(p, "b"))
    raise JobError(f"unknown powers-formulas op {op!r}")


_SURFACE_KEYS = ("H2", "HK", "K2", "c2")
_THREEFOLD_KEYS = ("H3", "KH2", "K2H", "K3", "c2H", "Kc2", "c3")


def cmd_secant(p: dict, opts: dict):
    kind = _need(p, "kind")
    form = p.get("form", "chern")
    src = p.get("data", p)
    if kind == "surface":
        data = SurfaceChernData(*(_need(src, k) for k in _SURFACE_KEYS), chi=src.get("chi", 0),
                                smooth=bool(src.get("smooth", False)))
        coeffs = surface_rr_coeffs(data)
        margin = diagonal_e10("surface", coeffs) if form == "diagonal" else surface_margin(form, data)
    elif kind == "threefold":
        data = ThreefoldChernData(*(_need(src, k) for k in _THREEFOLD_KEYS))
        table = p.get("table", "classical")
        coeffs = threefold_rr_coeffs(data, table, strict=False)
        margin = (diagonal_e10("threefold", coeffs) if form == "diagonal"
                  else threefold_margin(form, data, table))
    else:
        raise JobError("kind must be surface or threefold")
    return {"margin": margin, "verdict": "deficient boundary" if margin == 0 else "non-deficient",
            "coefficients": coeffs.to_json()}


def _ideal(obj, field: orc.Field, seed: int) -> orc.IdealPresentation:
    if obj == "twisted_cubic":
        return orc.IdealPresentation(4, twisted_cubic(), field, seed)
    if obj == "conic_hypersurface":
        return orc.IdealPresentation(4, plane_conic_hypersurface(4), field, seed)
    if isinstance(obj, dict):
        ideal = orc.IdealPresentation.from_json(obj)
        if "field" not in obj:
            ideal = ideal.with_field(field)
        return ideal
    raise JobError("ideal must be an ideal object or a fixture name")


def _field(opts: dict, p: dict) -> orc.Field:
    if p.get("field") in ("rationals", "QQ"):
        return orc.RATIONALS
    return orc.Field(int(opts.get("prime", orc.DEFAULT_PRIME)))


def cmd_oracle(p: dict, opts: dict):
    op = p.get("op", "quotient")
    fld = _field(opts, p)
    seed = int(opts.get("seed", 0))
    workers = int(p.get("workers", 1))
    if op == "monomial":
        S = orc.monomial_series([tuple(g) for g in _need(p, "gens")], _need(p, "vars"))
        out = {"series": S}
        if "dmax" in opts:
            out["values"] = S.expand(0, int(opts["dmax"]))
        return out
    ideal = _ideal(_need(p, "ideal"), fld, seed)
    if op == "graded-dim":
        return orc.graded_dim(ideal, _need(p, "d"))
    dmax = int(opts.get("dmax", p.get("dmax", 12)))
    if op == "quotient":
        table = orc.hilbert_function_quotient(ideal, p.get("power", 1), dmax, workers)
        values = table.values
    elif op == "colon":
        if "A" in p:
            A = _ideal(p["A"], ideal.field, seed)
        else:
            A = orc.random_forms(ideal.generators, _need(p, "degrees"), seed, ideal.field)
        if "dmax" not in opts and "dmax" not in p and "degrees" in p:
            dmax = orc.stable_dmax(p["degrees"])
        table = orc.colon_table(A, ideal.generators, dmax, workers,
                                recheck=bool(p.get("recheck", False)))
        values = table.values
    elif op == "random-forms":
        return orc.random_forms(ideal.generators, _need(p, "degrees"), seed, ideal.field)
    else:
        raise JobError(f"unknown oracle op {op!r}")
    out = {"values": list(values), "dmax": dmax, "field": str(ideal.field)}
    if "dim" in p:
        fit = orc.fitted(values, int(p["dim"]))
        out.update(stabilization=fit.table.stabilization, polynomial=fit.polynomial,
                   series=fit.series)
    return out


def cmd_verify(p: dict, opts: dict):
    suite = str(opts.get("suite", p.get("suite", "all")))
    seed = int(opts.get("seed", 0))
    prime = int(opts.get("prime", orc.DEFAULT_PRIME))
    results = [run_check(k, seed, prime) for k in parse_suite(suite)]
    report = {"suite": suite, "passed": all(r.passed for r in results),
              "checks": [r.to_json() for r in results],
              "summary": [r.line() for r in results]}
    if not report["passed"]:
        raise VerificationFailed(report)
    return report


HANDLERS = {
    "series": cmd_series,
    "residual-series": cmd_residual_series,
    "residual-coeffs": cmd_residual_coeffs,
    "residual-degree": cmd_residual_degree,
    "powers-solve": cmd_powers_solve,
    "powers-formulas": cmd_powers_formulas,
    "secant": cmd_secant,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def execute(job: dict) -> dict:
    """Run a normalized job and return its report."""
    result = HANDLERS[job["command"]](job["payload"], job["options"])
    return {"command": job["command"], "input": job, "result": _jsonable(result)}


# --- rendering and entry point -----------------------------------------------------

def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    lines = [f"command  {report['command']}"]
    result = report.get("result")
    if isinstance(result, dict) and "summary" in result:
        lines += result["summary"]
    elif isinstance(result, dict):
        width = max((len(k) for k in result), default=0)
        for k in sorted(result):
            lines.append(f"{k.ljust(width)}  {json.dumps(result[k], sort_keys=True)}")
    else:
        lines.append(f"result   {json.dumps(result, sort_keys=True)}")
    if "error" in report:
        lines.append(f"error    {report['error']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reshilb", description=__doc__.splitlines()[0])
    ap.add_argument("command", nargs="?", choices=COMMANDS,
                    help="command to run; optional when the job names one")
    ap.add_argument("--input", "-i", help="job file, or - for stdin; without a command argument the job is read from stdin")
    ap.add_argument("--prime", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--dmax", type=int)
    ap.add_argument("--format", choices=("json", "table"))
    ap.add_argument("--suite", help="verify suite: all, identities, residual, powers, secant, "
                                    "oracle, or check numbers such as 4,12")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {k: getattr(args, k) for k in OPTION_KEYS}
    fmt = args.format or "json"
    try:
        if args.input == "-" or (args.input is None and args.command is None):
            text = sys.stdin.read()
        elif args.input:
            with open(args.input) as fh:
                text = fh.read()
        else:
            text = ""
        raw = json.loads(text) if text.strip() else {}
        if args.command:
            raw.setdefault("command", args.command)
            if raw["command"] != args.command:
                raise JobError(f"job names command {raw['command']!r} but {args.command!r} was given")
        job = normalize_job(raw, overrides)
        fmt = job["options"]["format"]
        report = execute(job)
        print(render(report, fmt))
        return EXIT_OK
    except VerificationFailed as exc:
        report = {"command": "verify", "input": job, "result": exc.report}
        print(render(report, fmt))
        return EXIT_MISMATCH
    except orc.NotStabilized as exc:
        print(f"oracle did not stabilize: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except (JobError, ValueError, TypeError, KeyError, ArithmeticError, OSError) as exc:
        print(f"invalid job: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
