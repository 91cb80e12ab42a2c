"""Command-line front end: JSON problem descriptions in, JSON reports out.

Exit codes: 0 success, 1 error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .clifford import CliffordReport, QuadraticAlgebraClass, classify_quadratic, quadratic_generator, verify_deg2
from .csa import adjoint_antiaut, antiaut_from_u, make_quaternion
from .errors import CliffordError, SpecError
from .exactmath import QMatrix, SquareClass, format_poly, format_rational, rational
from .forms import BilinearForm, asymmetry, clifford_form, discriminant
from .selftest import run_selftest
from .tensor_engine import EngineConfig, QuotientAlgebra, even_part

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2
KINDS = ("bilinear", "quaternion", "matrix_adjoint")


# --------------------------------------------------------------------------
# problem descriptions

@dataclass(frozen=True)
class ProblemSpec:
    kind: str
    matrix: tuple[tuple[Fraction, ...], ...] | None = None
    alpha: Fraction | None = None
    beta: Fraction | None = None
    u: tuple[Fraction, ...] | None = None
    engine: dict = field(default_factory=dict)
    seed: int | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        if self.matrix is not None:
            out["matrix"] = [[format_rational(x) for x in row] for row in self.matrix]
        if self.alpha is not None:
            out["alpha"] = format_rational(self.alpha)
            out["beta"] = format_rational(self.beta)
            out["u"] = [format_rational(x) for x in self.u]
        if self.engine:
            out["engine"] = dict(self.engine)
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def config(self, overrides: dict | None = None) -> EngineConfig:
        opts = {**self.engine, **{k: v for k, v in (overrides or {}).items() if v is not None}}
        return EngineConfig(degree_cap=opts.get("degree_cap"), slack_cap=opts.get("slack", 4))


def _number(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SpecError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    try:
        return rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"{where}: {exc}") from None


def _vector(value, where: str, length: int | None = None) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise SpecError(f"{where}: expected a list")
    if length is not None and len(value) != length:
        raise SpecError(f"{where}: expected {length} entries, got {len(value)}")
    return tuple(_number(x, f"{where}[{i}]") for i, x in enumerate(value))


def _matrix(value, where: str, size: int | None = None) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(value, list) or not value:
        raise SpecError(f"{where}: expected a nonempty list of rows")
    n = len(value)
    if size is not None and n != size:
        raise SpecError(f"{where}: expected a {size}x{size} matrix")
    return tuple(_vector(row, f"{where}[{i}]", n) for i, row in enumerate(value))


def _int_field(doc: dict, key: str, where: str, minimum: int) -> int | None:
    if key not in doc:
        return None
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise SpecError(f"{where}.{key}: expected an integer >= {minimum}")
    return v


def parse_spec(doc: Any, where: str = "spec") -> ProblemSpec:
    if not isinstance(doc, dict):
        raise SpecError(f"{where}: expected an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SpecError(f"{where}.kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    allowed = {"kind", "engine", "seed"} | ({"matrix"} if kind != "quaternion" else {"alpha", "beta", "u"})
    extra = sorted(set(doc) - allowed)
    if extra:
        raise SpecError(f"{where}: unexpected field(s) {', '.join(extra)}")
    engine: dict = {}
    if "engine" in doc:
        e = doc["engine"]
        if not isinstance(e, dict) or set(e) - {"degree_cap", "slack"}:
            raise SpecError(f"{where}.engine: expected an object with degree_cap and/or slack")
        for key in ("degree_cap", "slack"):
            v = _int_field(e, key, f"{where}.engine", 1)
            if v is not None:
                engine[key] = v
    seed = _int_field(doc, "seed", where, 0)
    if kind == "quaternion":
        for key in ("alpha", "beta", "u"):
            if key not in doc:
                raise SpecError(f"{where}.{key}: missing")
        return ProblemSpec(
            kind,
            alpha=_number(doc["alpha"], f"{where}.alpha"),
            beta=_number(doc["beta"], f"{where}.beta"),
            u=_vector(doc["u"], f"{where}.u", 4),
            engine=engine,
            seed=seed,
        )
    if "matrix" not in doc:
        raise SpecError(f"{where}.matrix: missing")
    size = 2 if kind == "matrix_adjoint" else None
    return ProblemSpec(kind, matrix=_matrix(doc["matrix"], f"{where}.matrix", size), engine=engine, seed=seed)


# --------------------------------------------------------------------------
# serialization

def square_class_json(c: SquareClass) -> dict:
    return {"zero": True} if c.is_zero else {"sign": c.sign, "radical": c.radical}


def class_json(c: QuadraticAlgebraClass | None):
    if c is None:
        return None
    return {"kind": c.kind, "class": square_class_json(c.square_class)}


def vector_json(v: Sequence[Fraction], labels: Sequence[str]) -> dict:
    return {lab: format_rational(x) for lab, x in zip(labels, v) if x}


def algebra_json(Q: QuotientAlgebra, names: Sequence[str] | None = None) -> dict:
    labels = Q.labels(names)
    out: dict[str, Any] = {
        "dimension": Q.dim,
        "basis": labels,
        "table": [[vector_json(Q.structure_constants[i][j], labels) for j in range(Q.dim)] for i in range(Q.dim)],
        "engine_degree": Q.degree,
        "engine_slack": Q.slack,
    }
    if Q.dim == 2 and Q.is_commutative():
        g, mp = quadratic_generator(Q)
        out["generator"] = labels[g.index(1)]
        out["generator_minpoly"] = format_poly(mp)
        out["classification"] = class_json(classify_quadratic(Q))
    return out


def matrix_json(M: QMatrix) -> list:
    return [[format_rational(x) for x in row] for row in M.rows]


def antiaut_report_json(r: CliffordReport, labels: Sequence[str]) -> dict:
    return {
        "asymmetry": vector_json(r.asymmetry, labels),
        "disc": square_class_json(r.disc),
        "clifford": algebra_json(r.algebra, labels),
        "classification": class_json(r.classification),
        "predicted": class_json(r.predicted),
        "match": r.match,
    }


# --------------------------------------------------------------------------
# commands

def run_spec(spec: ProblemSpec, overrides: dict | None = None) -> tuple[dict, int]:
    cfg = spec.config(overrides)
    report: dict[str, Any] = {"input": spec.to_json()}
    status = EXIT_OK
    if spec.kind == "bilinear":
        f = BilinearForm.from_rows(spec.matrix)
        Q = clifford_form(f, cfg)
        report["asymmetry"] = matrix_json(asymmetry(f))
        report["disc"] = square_class_json(discriminant(f))
        report["clifford"] = algebra_json(Q)
        report["even_part"] = algebra_json(even_part(Q)) if Q.parity_graded else None
    else:
        if spec.kind == "quaternion":
            sigma = antiaut_from_u(make_quaternion(spec.alpha, spec.beta), spec.u)
        else:
            sigma = adjoint_antiaut(BilinearForm.from_rows(spec.matrix))
        r = verify_deg2(sigma, cfg)
        report["antiautomorphism"] = sigma.description
        report.update(antiaut_report_json(r, sigma.host.labels))
        if not r.match:
            status = EXIT_MISMATCH
    return report, status


def error_json(exc: Exception) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def _dump(doc, pretty: bool) -> str:
    return json.dumps(doc, indent=2 if pretty else None, sort_keys=False)


def cmd_clifford(args) -> int:
    try:
        with open(args.spec, encoding="utf-8") as fh:
            text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{args.spec}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except (OSError, SpecError) as exc:
        print(_dump(error_json(exc), args.pretty))
        return EXIT_ERROR
    overrides = {"degree_cap": args.degree_cap, "slack": args.slack}
    batch = isinstance(doc, list)
    docs = doc if batch else [doc]
    reports, codes = [], []
    for i, d in enumerate(docs):
        try:
            rep, code = run_spec(parse_spec(d, f"spec[{i}]" if batch else "spec"), overrides)
        except CliffordError as exc:
            rep, code = error_json(exc), EXIT_ERROR
        except ValueError as exc:
            rep, code = error_json(SpecError(str(exc))), EXIT_ERROR
        reports.append(rep)
        codes.append(code)
    print(_dump(reports if batch else reports[0], args.pretty))
    if EXIT_ERROR in codes:
        return EXIT_ERROR
    return EXIT_MISMATCH if EXIT_MISMATCH in codes else EXIT_OK


def cmd_selftest(args) -> int:
    cfg = EngineConfig(degree_cap=args.degree_cap, slack_cap=args.slack or 4)
    results = run_selftest(args.seed, args.count, cfg)
    if args.json_out:
        doc = {
            "seed": args.seed,
            "count": args.count,
            "suites": [
                {"name": r.name, "passed": r.passed, "failed": r.failed, "errors": r.errors} for r in results
            ],
        }
        print(_dump(doc, args.pretty))
    else:
        width = max((len(r.name) for r in results), default=5)
        print(f"{'suite':<{width}}  passed  failed  errors")
        for r in results:
            print(f"{r.name:<{width}}  {r.passed:>6}  {r.failed:>6}  {r.errors:>6}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-cap", type=int, default=None, help="largest truncation degree for the engine")
    common.add_argument("--slack", type=int, default=None, help="largest slack for the engine")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", help="compact JSON output (default)")
    out.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON output")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(prog="clifford-antiaut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("clifford", parents=[common], help="compute a Clifford algebra from a JSON spec")
    p.add_argument("--spec", required=True, help="path to a JSON problem description (object or list)")
    p.set_defaults(func=cmd_clifford)
    s = sub.add_parser("selftest", parents=[common], help="run the built-in verification suites")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--table", dest="json_out", action="store_false", help="print a plain table")
    s.set_defaults(func=cmd_selftest, json_out=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("degree_cap", "slack", "count"):
        v = getattr(args, name, None)
        if v is not None and v < (0 if name == "count" else 1):
            print(_dump(error_json(SpecError(f"--{name.replace('_', '-')} out of range")), args.pretty))
            return EXIT_ERROR
    if getattr(args, "seed", 0) < 0:
        print(_dump(error_json(SpecError("--seed must be non-negative")), args.pretty))
        return EXIT_ERROR
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
