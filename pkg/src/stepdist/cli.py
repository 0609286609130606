"""File-driven command line front end.

Commands load distribution spec files, run single operations or whole
verification suites, and emit reproducible reports.  Exit codes: 0 success,
1 at least one verification check failed (the report is still printed),
2 usage or input error.

Report bodies are byte-identical across reruns with the same inputs, seeds
and version; the wall-clock duration is printed to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .cdf import level_set, quantile_pair
from .checks import CheckResult, analytic_checks, sklar_checks, stochastic_checks
from .distfile import file_digest, load_distribution
from .errors import StepDistError, ValidationError
from .measure import measure_interval
from .realset import Interval
from .stochastic import SeededStream, sample_inverse, transform_cdf_exact
from .transform import lambda_transform

__all__ = ["main"]

DEFAULT_N = 100_000
DEFAULT_SEED = 42


@dataclass
class RunReport:
    """Everything a verification run decided, in deterministic order."""

    command: str
    inputs: list[dict]
    seed: int | None
    n: int | None
    checks: list[CheckResult] = field(default_factory=list)
    duration_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def body(self) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "result": "pass" if self.passed else "fail",
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "value": c.value,
                    "threshold": c.threshold,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.n is not None:
            out["n"] = self.n
        return out


def _print_report(report: RunReport, fmt: str):
    if fmt == "json":
        print(json.dumps(report.body(), sort_keys=True, indent=2))
    else:
        print(f"command: {report.command}")
        for item in report.inputs:
            print(f"input: {item['path']} sha256={item['sha256']}")
        if report.seed is not None:
            print(f"seed: {report.seed}")
        if report.n is not None:
            print(f"n: {report.n}")
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  ({c.detail})" if c.detail else ""
            print(f"{status} {c.name:<28} value={c.value:.6g} threshold={c.threshold:.6g}{extra}")
        done = sum(1 for c in report.checks if c.passed)
        print(f"result: {'PASS' if report.passed else 'FAIL'} ({done}/{len(report.checks)})")
    print(f"elapsed: {report.duration_s:.2f}s", file=sys.stderr)


def _emit(fmt: str, pairs: list[tuple[str, object]]):
    if fmt == "json":
        print(json.dumps(dict(pairs), sort_keys=True, indent=2))
    else:
        for key, val in pairs:
            print(f"{key}: {val}")


def _input_records(paths) -> list[dict]:
    return [{"path": str(p), "sha256": file_digest(p)} for p in paths]


def _parse_interval_text(text: str) -> Interval:
    t = "".join(text.split())
    if len(t) >= 3 and t[0] == "{" and t[-1] == "}":
        return Interval.point(float(t[1:-1]))
    if len(t) < 5 or t[0] not in "([" or t[-1] not in ")]":
        raise ValidationError(f"cannot parse interval {text!r}; use forms like (a,b], [a,b), {{a}}")
    inner = t[1:-1].split(",")
    if len(inner) != 2:
        raise ValidationError(f"interval {text!r} needs exactly two endpoints")
    try:
        lo, hi = float(inner[0]), float(inner[1])
    except ValueError as exc:
        raise ValidationError(f"interval {text!r}: {exc}") from exc
    return Interval(lo, hi, t[0] == "[", t[-1] == "]")


def _level_set_fields(f, alpha: float) -> list[tuple[str, object]]:
    lo, hi = quantile_pair(f, alpha)
    ls = level_set(f, alpha)
    if ls.is_empty():
        case = "empty"
    elif ls.components[0].is_point():
        case = "singleton"
    elif ls.components[0].closed_hi:
        case = "closed"
    else:
        case = "half-open"
    return [
        ("left_quantile", lo),
        ("right_quantile", hi),
        ("level_set_case", case),
        ("level_set", str(ls)),
    ]


# -- commands -----------------------------------------------------------------


def _cmd_eval(args) -> int:
    f = load_distribution(args.dist[0])
    x = args.x
    _emit(args.format, [
        ("value", f.value(x)),
        ("left_value", f.left_value(x)),
        ("jump", f.jump(x)),
    ])
    return 0


def _cmd_quantile(args) -> int:
    f = load_distribution(args.dist[0])
    _emit(args.format, _level_set_fields(f, args.alpha))
    return 0


def _cmd_transform(args) -> int:
    f = load_distribution(args.dist[0])
    _emit(args.format, [
        ("transform", lambda_transform(f, args.x, args.lam)),
        ("left_value", f.left_value(args.x)),
        ("value", f.value(args.x)),
    ])
    return 0


def _cmd_levelset(args) -> int:
    f = load_distribution(args.dist[0])
    _emit(args.format, _level_set_fields(f, args.alpha))
    return 0


def _cmd_measure(args) -> int:
    f = load_distribution(args.dist[0])
    iv = _parse_interval_text(args.interval)
    _emit(args.format, [
        ("interval", str(iv)),
        ("mass", measure_interval(f, iv)),
    ])
    return 0


def _cmd_sample(args) -> int:
    f = load_distribution(args.dist[0])
    xs = sample_inverse(f, SeededStream(args.seed, args.stream_id), args.n)
    if args.format == "json":
        print(json.dumps({
            "seed": args.seed,
            "stream_id": args.stream_id,
            "n": args.n,
            "samples": xs.tolist(),
        }, sort_keys=True))
    else:
        for v in xs:
            print(repr(float(v)))
    return 0


def _cmd_transform_cdf(args) -> int:
    f = load_distribution(args.dist[0])
    law = load_distribution(args.law) if args.law else f
    br = transform_cdf_exact(f, law, args.alpha)
    _emit(args.format, [
        ("alpha", args.alpha),
        ("quantile", br.quantile),
        ("atom", br.atom),
        ("left_value", br.left_value),
        ("atom_coef", br.atom_coef),
        ("term_flat", br.term_flat),
        ("term_atom", br.term_atom),
        ("term_left", br.term_left),
        ("total", br.total),
    ])
    return 0


def _cmd_verify(args) -> int:
    start = time.perf_counter()
    dists = [(path, load_distribution(path)) for path in args.dist]
    checks: list[CheckResult] = []
    for path, f in dists:
        tag = str(path)
        if args.suite in ("analytic", "all"):
            for c in analytic_checks(f):
                checks.append(CheckResult(f"{tag}:{c.name}", c.passed, c.value, c.threshold, c.detail))
        if args.suite in ("stochastic", "all"):
            for c in stochastic_checks(f, args.seed, args.n):
                checks.append(CheckResult(f"{tag}:{c.name}", c.passed, c.value, c.threshold, c.detail))
    if args.suite in ("stochastic", "all"):
        marginals = [f for _, f in dists]
        if len(marginals) == 1:
            marginals = marginals * 2
        for dep in ("independent", "comonotone"):
            for c in sklar_checks(marginals, dep, args.n, args.seed):
                checks.append(CheckResult(f"sklar[{dep}]:{c.name}", c.passed, c.value, c.threshold, c.detail))
    report = RunReport(
        command="verify",
        inputs=_input_records(args.dist),
        seed=args.seed if args.suite != "analytic" else None,
        n=args.n if args.suite != "analytic" else None,
        checks=checks,
        duration_s=time.perf_counter() - start,
    )
    _print_report(report, args.format)
    return 0 if report.passed else 1


def _cmd_copula_check(args) -> int:
    start = time.perf_counter()
    marginals = [load_distribution(path) for path in args.dist]
    if len(marginals) < 2:
        raise ValidationError("copula-check needs at least two --dist files")
    if args.dependence == "countermonotone" and len(marginals) != 2:
        raise ValidationError("countermonotone exists only for exactly 2 marginals")
    grid = None
    if args.grid:
        try:
            axis = [float(tok) for tok in args.grid.split(",") if tok.strip()]
        except ValueError as exc:
            raise ValidationError(f"--grid: {exc}") from exc
        if not axis:
            raise ValidationError("--grid: no values")
        import numpy as np

        mesh = np.meshgrid(*([np.asarray(axis)] * len(marginals)), indexing="ij")
        grid = [np.array(p) for p in zip(*(mm.ravel() for mm in mesh))]
    checks = sklar_checks(marginals, args.dependence, args.n, args.seed, grid=grid)
    report = RunReport(
        command="copula-check",
        inputs=_input_records(args.dist),
        seed=args.seed,
        n=args.n,
        checks=checks,
        duration_s=time.perf_counter() - start,
    )
    _print_report(report, args.format)
    return 0 if report.passed else 1


# -- parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="stepdist",
        description="Exact distribution-function library: evaluation, quantiles, "
        "measures, transforms, sampling and copula verification.",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p, seeded=False):
        p.add_argument("--dist", action="append", required=True, metavar="FILE",
                       help="distribution spec file (repeatable where it makes sense)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        if seeded:
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)
            p.add_argument("--n", type=int, default=DEFAULT_N)

    p = sub.add_parser("eval", help="print F(x), F(x-), and the jump at x")
    common(p)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("quantile", help="left/right quantiles and the level set at a level")
    common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=_cmd_quantile)

    p = sub.add_parser("transform", help="jump-interpolated evaluation F(x-) + lam*jump(x)")
    common(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--lam", type=float, required=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("levelset", help="describe {x : F(x) = alpha}")
    common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=_cmd_levelset)

    p = sub.add_parser("measure", help="mass of one interval, e.g. --interval '(0.25,0.5]'")
    common(p)
    p.add_argument("--interval", required=True)
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("sample", help="inverse-transform samples, one per line")
    common(p, seeded=True)
    p.add_argument("--stream-id", type=int, default=0)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("transform-cdf", help="exact law of the distributional transform at a level")
    common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--law", metavar="FILE", default=None,
                   help="law of the input variable when it differs from --dist")
    p.set_defaults(func=_cmd_transform_cdf)

    p = sub.add_parser("verify", help="run the verification suites on the given distributions")
    common(p, seeded=True)
    p.add_argument("--suite", choices=("analytic", "stochastic", "all"), default="all")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("copula-check", help="extract the empirical copula and test the Sklar identity")
    common(p, seeded=True)
    p.add_argument("--dependence", choices=("independent", "comonotone", "countermonotone"),
                   default="independent")
    p.add_argument("--grid", default=None,
                   help="comma-separated axis values applied to every coordinate")
    p.set_defaults(func=_cmd_copula_check)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StepDistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
