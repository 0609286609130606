"""The jump-interpolating transform of a CDF and its a.e. inversion machinery.

For a weight lam in [0, 1] the transform evaluates F(x-) + lam * jump(x),
which interpolates across the jump of F at x and reduces to F(x-) at lam=0
and to F(x) at lam=1.  Left-composing the left quantile undoes the transform
everywhere outside an explicit exceptional set: the points transported to 0
or 1 plus the flat pieces of F, a set of F-mass zero whenever the transform
stays strictly inside (0, 1) F-almost everywhere.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

from .cdf import Cdf, _left_quantile_unchecked, _right_quantile_unchecked
from .errors import (
    AlphaNotInJumpInterval,
    LambdaOutOfRange,
    LengthMismatch,
    TransformOutOfRange,
)
from .measure import measure_set
from .realset import Interval, RealSet

__all__ = [
    "lambda_transform",
    "quantile_range_of_point",
    "jump_gap_values",
    "jump_gap_weights",
    "attained_values",
    "NullSetReport",
    "inversion_null_set",
    "invert_transform",
]


def lambda_transform(f: Cdf, x: float, lam: float) -> float:
    """F(x-) + lam * jump(x), the jump-interpolated evaluation.

    Always sandwiched between F(x-) and F(x); independent of lam at
    continuity points.  lam = 0 and lam = 1 return the stored left limit and
    value exactly.
    """
    lam = float(lam)
    if math.isnan(lam) or not 0.0 <= lam <= 1.0:
        raise LambdaOutOfRange(f"weight must lie in [0, 1], got {lam}")
    if lam == 0.0:
        return f.left_value(x)
    if lam == 1.0:
        return f.value(x)
    return f.left_value(x) + lam * f.jump(x)


def quantile_range_of_point(f: Cdf, x: float) -> RealSet:
    """{a in (0,1) : left_quantile(F, a) == x}, with exact endpoint membership.

    Always contains the open value gap (F(x-), F(x)) and is contained in its
    closure; which endpoints belong is decided from the local breakpoint
    structure (whether F is flat immediately left of x, and whether the
    endpoint level sits inside (0,1)).
    """
    x = float(x)
    lo = f.left_value(x)
    hi = f.value(x)
    xs = f.xs
    # is F constant on some interval (x - eps, x)?
    if x <= xs[0] or x > xs[-1]:
        flat_left = True
    else:
        # x sits in (xs[i-1], xs[i]]; flatness to the left is segment i-1's rise
        i = bisect_left(xs, x)
        flat_left = f.rises[i - 1] == 0.0
    if hi > lo:
        include_lo = (not flat_left) and lo > 0.0
        include_hi = hi < 1.0
        return RealSet.of(Interval(lo, hi, include_lo, include_hi))
    if (not flat_left) and 0.0 < hi < 1.0:
        return RealSet.point(hi)
    return RealSet.empty()


def jump_gap_values(f: Cdf, lams) -> list[float]:
    """Map one interior weight per jump to a level inside that jump's value gap.

    The n-th output is the transform at the n-th jump point (ascending) with
    weight lams[n]; outputs land strictly inside the pairwise-disjoint open
    gaps (F(x_n-), F(x_n)) and therefore avoid every level attained by F or
    by its left limits.
    """
    idx = f._jump_idx
    lams = [float(v) for v in lams]
    if len(lams) != len(idx):
        raise LengthMismatch(f"{len(lams)} weights for {len(idx)} jump points")
    out = []
    for n, (i, lam) in enumerate(zip(idx, lams)):
        if math.isnan(lam) or not 0.0 < lam < 1.0:
            raise LambdaOutOfRange(f"weight {n} must lie strictly inside (0, 1), got {lam}")
        lo = float(f._lefts[i])
        hi = float(f._cums[i])
        v = lo + lam * f.atoms[i]
        # float rounding with sub-ulp masses could touch a gap endpoint
        if v <= lo:
            v = math.nextafter(lo, math.inf)
        if v >= hi:
            v = math.nextafter(hi, -math.inf)
        out.append(v)
    return out


def jump_gap_weights(f: Cdf, alphas) -> list[float]:
    """Invert :func:`jump_gap_values`: recover the weight from a level in each gap.

    The n-th level must lie strictly inside the n-th open jump gap, else
    AlphaNotInJumpInterval(n) is raised.  The weight is
    (a - F(q-)) / jump(q) with q the left quantile of a.
    """
    idx = f._jump_idx
    alphas = [float(a) for a in alphas]
    if len(alphas) != len(idx):
        raise LengthMismatch(f"{len(alphas)} levels for {len(idx)} jump points")
    out = []
    for n, (i, a) in enumerate(zip(idx, alphas)):
        lo = float(f._lefts[i])
        hi = float(f._cums[i])
        if math.isnan(a) or not lo < a < hi:
            raise AlphaNotInJumpInterval(n, f"level {a} not inside ({lo}, {hi})")
        q = _left_quantile_unchecked(f, a)
        out.append((a - f.left_value(q)) / f.jump(q))
    return out


def attained_values(f: Cdf) -> RealSet:
    """All levels attained by F or by its left limits, as an exact set.

    The complement of this set within (0,1) is precisely the disjoint union
    of the open jump gaps.
    """
    parts = [Interval.point(0.0), Interval.point(1.0)]
    k = len(f.xs)
    for i in range(k):
        parts.append(Interval.point(float(f._lefts[i])))
        parts.append(Interval.point(float(f._cums[i])))
        if i < k - 1 and f.rises[i] > 0.0:
            parts.append(Interval.closed(float(f._cums[i]), float(f._lefts[i + 1])))
    return RealSet(tuple(parts))


@dataclass(frozen=True)
class NullSetReport:
    """The exceptional set of the transform inversion, piece by piece.

    ``zero_set``/``one_set`` hold the points the lam-transform sends to 0/1;
    ``plateau_union`` is the union over flat levels of the open-right parts
    of the flat pieces.  ``total_measure`` is the exact F-mass of the union;
    the plateau part always carries mass 0, so a positive total flags a
    failure of the strictly-inside hypothesis.
    """

    zero_set: RealSet
    one_set: RealSet
    plateau_union: RealSet
    total_measure: float

    def union(self) -> RealSet:
        return self.zero_set.union(self.one_set).union(self.plateau_union)


def inversion_null_set(f: Cdf, lam: float) -> NullSetReport:
    """Construct the exceptional set for a weight lam in (0, 1].

    Outside this set, composing the left quantile after the lam-transform
    returns every point unchanged.
    """
    lam = float(lam)
    if math.isnan(lam) or not 0.0 < lam <= 1.0:
        raise LambdaOutOfRange(f"weight must lie in (0, 1], got {lam}")
    # {x : transform = 0} equals {x : F(x) = 0} for every lam > 0
    t0 = _right_quantile_unchecked(f, 0.0)
    if f.value(t0) == 0.0:
        zero = RealSet.of(Interval(-math.inf, t0, False, True))
    else:
        zero = RealSet.of(Interval.open(-math.inf, t0))
    # {x : transform = 1}: beyond the first point where F reaches 1; the
    # point itself belongs iff lam = 1 or F arrives continuously
    z1 = _left_quantile_unchecked(f, 1.0)
    if lam == 1.0 or f.jump(z1) == 0.0:
        one = RealSet.of(Interval(z1, math.inf, True, False))
    else:
        one = RealSet.of(Interval(z1, math.inf, False, False))
    parts = []
    for run in f._flat_runs:
        if run.closed_end:
            parts.append(Interval.open_closed(run.lo, run.hi))
        else:
            parts.append(Interval.open(run.lo, run.hi))
    plateau = RealSet(tuple(parts))
    report = NullSetReport(zero, one, plateau, 0.0)
    total = measure_set(f, report.union())
    object.__setattr__(report, "total_measure", float(total))
    return report


def invert_transform(f: Cdf, x: float, lam: float) -> float:
    """Left quantile of the lam-transform at x; equals x off the null set.

    Requires the transformed value to lie strictly inside (0, 1).  The result
    never exceeds x, and equality holds exactly when x avoids
    :func:`inversion_null_set`.
    """
    lam = float(lam)
    if math.isnan(lam) or not 0.0 < lam <= 1.0:
        raise LambdaOutOfRange(f"weight must lie in (0, 1], got {lam}")
    t = lambda_transform(f, x, lam)
    if t == 0.0 or t == 1.0:
        raise TransformOutOfRange(f"transform at {x} hit {t}; left quantile undefined")
    return _left_quantile_unchecked(f, t)
