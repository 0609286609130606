"""Executable verification suites over a distribution function.

Each check pins one identity of the library to a named pass/fail result
with a measured value and a threshold.  Exact identities use the arithmetic
tolerance 1e-12 (or an outright mismatch count with threshold 0); sampled
statements use their stated statistical bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cdf import (
    Cdf,
    jump_set,
    left_quantile,
    level_set,
    quantile_pair,
    sublevel_decomposition,
)
from .copula import (
    dt_copula,
    copula_at_flat_alpha,
    generate_joint_sample,
    sklar_identity_check,
)
from .measure import measure_interval, measure_level_set, measure_set, measure_value_level
from .monotone import df_condition_report
from .realset import Interval, RealSet
from .stochastic import (
    SeededStream,
    distributional_transform,
    inversion_check,
    ks_uniformity,
    sample_inverse,
    transform_cdf_exact,
)
from .transform import (
    attained_values,
    inversion_null_set,
    invert_transform,
    jump_gap_values,
    jump_gap_weights,
    lambda_transform,
    quantile_range_of_point,
)

__all__ = ["CheckResult", "analytic_checks", "stochastic_checks", "sklar_checks", "KS_CRIT"]

EXACT_TOL = 1e-12
INVERSION_TOL = 1e-9
KS_CRIT = 1.6276  # asymptotic two-sided 1% point of sqrt(n) * D_n
LAMBDA_GRID = (0.25, 0.5, 0.75, 1.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    threshold: float
    detail: str = ""


def _result(name, value, threshold, detail="") -> CheckResult:
    return CheckResult(name, bool(value <= threshold), float(value), float(threshold), detail)


def alpha_population(f: Cdf) -> list[float]:
    """Levels in (0,1): a percent grid, every flat level, every jump-gap interior."""
    levels = {i / 100.0 for i in range(1, 100)}
    levels.update(f.plateau_levels)
    for i in f._jump_idx:
        lo, hi = float(f._lefts[i]), float(f._cums[i])
        mid = lo + 0.5 * (hi - lo)
        if lo < mid < hi:
            levels.add(mid)
    return sorted(a for a in levels if 0.0 < a < 1.0)


def probe_grid(f: Cdf) -> np.ndarray:
    """Evaluation points: breakpoints, small and large offsets, segment midpoints."""
    xs = np.asarray(f.xs)
    pts = [xs, xs - 1e-6, xs + 1e-6, xs - 0.25, xs + 0.25]
    if len(xs) > 1:
        pts.append((xs[:-1] + xs[1:]) / 2.0)
    lo, hi = xs[0], xs[-1]
    pts.append(np.array([lo - 7.0, hi + 7.0]))
    return np.unique(np.concatenate(pts))


# -- analytic suite -----------------------------------------------------------


def _check_transform_sandwich(f: Cdf) -> CheckResult:
    worst = 0.0
    grid = probe_grid(f)
    for x in grid:
        lo, hi = f.left_value(x), f.value(x)
        for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
            t = lambda_transform(f, x, lam)
            worst = max(worst, lo - t, t - hi)
        worst = max(worst, abs(lambda_transform(f, x, 0.0) - lo))
        worst = max(worst, abs(lambda_transform(f, x, 1.0) - hi))
        if f.jump(x) == 0.0:
            vals = {lambda_transform(f, x, lam) for lam in (0.0, 0.3, 0.7, 1.0)}
            if len(vals) > 1:
                worst = max(worst, max(vals) - min(vals))
    return _result("transform_sandwich", worst, EXACT_TOL)


def _check_quantile_sandwich(f: Cdf, alphas) -> CheckResult:
    worst = 0.0
    for a in alphas:
        lo, hi = quantile_pair(f, a)
        if lo > hi:
            worst = max(worst, lo - hi)
        worst = max(worst, f.left_value(lo) - a, a - f.value(lo))
        worst = max(worst, f.left_value(hi) - a, a - f.value(hi))
        for d in (1e-6, 1e-3, 0.25):
            if not f.value(lo - d) < a:  # strict part of the sandwich
                worst = max(worst, f.value(lo - d) - a + 2.0 * EXACT_TOL)
            worst = max(worst, a - f.value(lo + d))
    return _result("quantile_sandwich", worst, EXACT_TOL)


def _check_halfline_sets(f: Cdf, alphas) -> CheckResult:
    grid = probe_grid(f)
    bad = 0
    for a in alphas:
        xi = left_quantile(f, a)
        for x in grid:
            if (f.value(x) >= a) != (x >= xi):
                bad += 1
            if (f.value(x) < a) != (x < xi):
                bad += 1
    return _result("halfline_sets", bad, 0)


def _expected_level_set(f: Cdf, a, lo, hi) -> RealSet:
    if lo == hi:
        return RealSet.point(lo) if f.value(lo) == a else RealSet.empty()
    if f.value(hi) == a:
        return RealSet.of(Interval.closed(lo, hi))
    return RealSet.of(Interval.closed_open(lo, hi))


def _check_level_set_cases(f: Cdf, alphas) -> CheckResult:
    bad = 0
    for a in alphas:
        lo, hi = quantile_pair(f, a)
        ls = level_set(f, a)
        if ls != _expected_level_set(f, a, lo, hi):
            bad += 1
        if (f.value(lo) == a) != (not ls.is_empty()):
            bad += 1
        small = ls.is_empty() or ls == RealSet.point(lo)
        if (hi == lo) != small:
            bad += 1
        if hi > lo and (f.jump(hi) == 0.0) != (f.value(hi) == a):
            bad += 1
    return _result("level_set_cases", bad, 0)


def _check_flat_mass(f: Cdf, alphas) -> CheckResult:
    worst = 0.0
    for a in alphas:
        lo, hi = quantile_pair(f, a)
        for lam in LAMBDA_GRID:
            beyond, _, _ = sublevel_decomposition(f, lam, a)
            worst = max(worst, abs(measure_set(f, beyond)))
        m = measure_level_set(f, a)
        worst = max(worst, abs(m - measure_set(f, level_set(f, a))))
        if hi > lo:
            worst = max(worst, abs(m - (a - f.left_value(lo))), abs(m - f.jump(lo)))
    return _result("flat_piece_mass", worst, EXACT_TOL)


def _check_sublevel_union(f: Cdf, alphas) -> CheckResult:
    grid = probe_grid(f)
    bad = 0
    for a in alphas:
        for lam in LAMBDA_GRID:
            beyond, at, below = sublevel_decomposition(f, lam, a)
            if not beyond.intersect(at).is_empty() or not at.intersect(below).is_empty():
                bad += 1
            if not beyond.intersect(below).is_empty():
                bad += 1
            union = beyond.union(at).union(below)
            for x in grid:
                member = lambda_transform(f, x, lam) <= a
                if member != union.contains(x):
                    bad += 1
    return _result("sublevel_union", bad, 0)


def _check_quantile_ranges(f: Cdf) -> CheckResult:
    bad = 0
    bps = set(f.xs)
    for x in probe_grid(f):
        lo, hi = f.left_value(x), f.value(x)
        s = quantile_range_of_point(f, x)
        for iv in s.components:
            if iv.lo < lo or iv.hi > hi:
                bad += 1
        if hi > lo:
            if len(s.components) != 1:
                bad += 1
            else:
                iv = s.components[0]
                if iv.lo != lo or iv.hi != hi:
                    bad += 1
            for frac in (0.25, 0.5, 0.75):
                a = lo + frac * (hi - lo)
                if lo < a < hi and left_quantile(f, a) != x:
                    bad += 1
        if x in bps:
            # endpoint membership round-trips exactly at breakpoints; inside
            # rising segments the scan may land an ulp off, which the set
            # semantics must not depend on
            for a in (lo, hi):
                if 0.0 < a < 1.0:
                    if s.contains(a) != (left_quantile(f, a) == x):
                        bad += 1
    return _result("quantile_range_of_point", bad, 0)


def _check_jump_gaps(f: Cdf) -> CheckResult:
    gaps = RealSet(
        tuple(
            Interval.open(float(f._lefts[i]), float(f._cums[i]))
            for i in f._jump_idx
        )
    )
    unit = RealSet.of(Interval.open(0.0, 1.0))
    expected = unit.difference(attained_values(f))
    bad = 0 if gaps.intersect(unit) == expected else 1
    # pairwise disjointness of the gaps comes with distinct jump points
    ivs = gaps.components
    for a, b in zip(ivs, ivs[1:]):
        if a.intersect(b) is not None:
            bad += 1
    return _result("jump_gap_complement", bad, 0)


def _check_phi_roundtrip(f: Cdf, seed: int = 20240901) -> CheckResult:
    rng = np.random.default_rng(seed)
    m = len(f._jump_idx)
    worst = 0.0
    bad = 0
    attained = attained_values(f)
    for _ in range(8):
        lams = rng.uniform(0.05, 0.95, size=m).tolist()
        vals = jump_gap_values(f, lams)
        for v in vals:
            if attained.contains(v):
                bad += 1
        back = jump_gap_weights(f, vals)
        if m:
            worst = max(worst, max(abs(b - l) for b, l in zip(back, lams)))
    if bad:
        return _result("jump_gap_roundtrip", bad + 1.0, EXACT_TOL, "output hit an attained level")
    return _result("jump_gap_roundtrip", worst, EXACT_TOL)


def _check_null_sets(f: Cdf) -> CheckResult:
    worst = 0.0
    bad = 0
    for lam in LAMBDA_GRID:
        rep = inversion_null_set(f, lam)
        worst = max(worst, abs(measure_set(f, rep.plateau_union)))
        boundary = measure_set(f, rep.zero_set.union(rep.one_set))
        if boundary == 0.0:
            worst = max(worst, abs(rep.total_measure))
        exceptional = rep.union()
        for x in probe_grid(f):
            t = lambda_transform(f, x, lam)
            if t == 0.0 or t == 1.0:
                if not exceptional.contains(x):
                    bad += 1
                continue
            y = invert_transform(f, x, lam)
            if y > x + EXACT_TOL:
                bad += 1
            if not exceptional.contains(x):
                tol = 0.0 if f.jump(x) > 0.0 else INVERSION_TOL
                if abs(y - x) > tol:
                    bad += 1
    return _result("null_set_inversion", worst + bad, EXACT_TOL)


def _check_transform_cdf(f: Cdf, alphas) -> CheckResult:
    worst = 0.0
    for a in alphas:
        br = transform_cdf_exact(f, f, a)
        worst = max(worst, abs(br.total - a))
    return _result("transform_cdf_uniform", worst, EXACT_TOL)


def _check_uniformity_displays(f: Cdf) -> CheckResult:
    # on flat levels: P(F(X) <= a) = a = P(X <= left quantile)
    worst = 0.0
    for a in f.plateau_levels:
        lo, hi = quantile_pair(f, a)
        below = measure_interval(f, Interval(-math.inf, hi, False, f.value(hi) == a))
        worst = max(worst, abs(below - a), abs(f.value(lo) - a))
    # every jump puts an equally sized atom on the law of F(X)
    for x, mass in zip(f.jump_points, f.jump_masses):
        worst = max(worst, abs(measure_value_level(f, f.value(x)) - mass))
    return _result("uniformity_displays", worst, EXACT_TOL)


def _check_jump_characterization(f: Cdf, alphas) -> CheckResult:
    jump_set(f)  # raises if the stored atoms and the quantile scans disagree
    bad = 0
    for a in alphas:
        lo, hi = quantile_pair(f, a)
        beyond, _, _ = sublevel_decomposition(f, 1.0, a)
        if (hi > lo) != (not beyond.is_empty()):
            bad += 1
    return _result("jump_characterization", bad, 0)


def _check_total_mass(f: Cdf) -> CheckResult:
    worst = abs(measure_set(f, RealSet.reals()) - 1.0)
    xs = f.xs
    lo = xs[0] - 1.0
    hi = xs[-1] + 1.0
    cuts = np.linspace(lo, hi, 17)
    parts = sum(
        measure_interval(f, Interval.open_closed(a, b)) for a, b in zip(cuts, cuts[1:])
    )
    worst = max(worst, abs(parts - (f.value(hi) - f.value(lo))))
    rep = df_condition_report(f)
    if not (rep.all_agree() and rep.is_distribution_function()):
        worst = max(worst, 1.0)
    return _result("total_mass_and_df_conditions", worst, EXACT_TOL)


def analytic_checks(f: Cdf) -> list[CheckResult]:
    """Every exact identity the representation supports, on one CDF."""
    alphas = alpha_population(f)
    return [
        _check_transform_sandwich(f),
        _check_quantile_sandwich(f, alphas),
        _check_halfline_sets(f, alphas),
        _check_level_set_cases(f, alphas),
        _check_flat_mass(f, alphas),
        _check_sublevel_union(f, alphas),
        _check_quantile_ranges(f),
        _check_jump_gaps(f),
        _check_phi_roundtrip(f),
        _check_null_sets(f),
        _check_transform_cdf(f, alphas),
        _check_uniformity_displays(f),
        _check_jump_characterization(f, alphas),
        _check_total_mass(f),
    ]


# -- stochastic suite ---------------------------------------------------------


def stochastic_checks(f: Cdf, seed: int, n: int) -> list[CheckResult]:
    """Sampled statements: uniformity, inversion, and the exact/Monte-Carlo bridge.

    Stream policy, recorded for reproducibility: (seed, 0) draws the sample,
    (seed, 1) randomizes the transform, (seed, 2) and (seed, 3) drive the
    inversion check.
    """
    out = []
    x_stream = SeededStream(seed, 0)
    v_stream = SeededStream(seed, 1)
    xs = sample_inverse(f, x_stream, n)
    us = distributional_transform(f, xs, v_stream, x_stream=x_stream)
    ks = ks_uniformity(us)
    out.append(_result("ks_uniformity", ks, KS_CRIT / math.sqrt(n)))

    rep = inversion_check(f, SeededStream(seed, 2), n)
    fails = rep.failures + (rep.shortcut_failures or 0)
    out.append(_result("inversion_failures", fails, 0))

    worst = 0.0
    for a in (0.25, 0.5, 0.75):
        exact = transform_cdf_exact(f, f, a).total
        est = float((us <= a).mean())
        se = math.sqrt(max(exact * (1.0 - exact), 1e-12) / n)
        worst = max(worst, abs(est - exact) / (4.0 * se))
    out.append(_result("mc_bridge_4se", worst, 1.0))
    return out


# -- copula suite -------------------------------------------------------------


def default_copula_grid(marginals) -> list[np.ndarray]:
    axes = []
    for m in marginals:
        xs = np.asarray(m.xs)
        axes.append(np.unique(np.concatenate([xs, xs - 0.25, xs + 0.25])))
    mesh = np.meshgrid(*axes, indexing="ij")
    return [np.array(p) for p in zip(*(mm.ravel() for mm in mesh))]


def sklar_checks(
    marginals,
    dependence: str,
    n: int,
    seed: int,
    grid: list | None = None,
) -> list[CheckResult]:
    """Sample a joint law, extract its copula, and test both Sklar directions."""
    marginals = tuple(marginals)
    d = len(marginals)
    sample = generate_joint_sample(marginals, dependence, n, seed, base_stream_id=0)
    c_hat = dt_copula(sample, SeededStream(seed, d))
    out = []
    ks_worst = max(ks_uniformity(c_hat.sample[:, j]) for j in range(d))
    out.append(_result("copula_marginal_ks", ks_worst, KS_CRIT / math.sqrt(n)))
    if grid is None:
        grid = default_copula_grid(marginals)
    out.append(_result("sklar_identity", sklar_identity_check(sample, c_hat, grid), 0.01))

    flat_axes = [m.plateau_levels for m in marginals]
    worst = 0.0
    count = 0
    if all(flat_axes):
        idx = [0] * d
        while True:
            alphas = [flat_axes[j][idx[j]] for j in range(d)]
            lhs, rhs = copula_at_flat_alpha(sample, c_hat, alphas)
            worst = max(worst, abs(lhs - rhs))
            count += 1
            j = d - 1
            while j >= 0:
                idx[j] += 1
                if idx[j] < len(flat_axes[j]):
                    break
                idx[j] = 0
                j -= 1
            if j < 0:
                break
    out.append(
        _result("copula_flat_levels", worst, 0.01, f"{count} flat level vectors")
    )
    return out
