"""Validated distribution functions with exact left/right generalized inverses.

Quantiles are computed by a structural scan of the stored breakpoint values,
with at most one linear solve inside a rising segment.  Levels that are
attained at a breakpoint (atoms, flat pieces) always come back as the stored
breakpoint abscissa, so set endpoints downstream are float-identical rather
than merely close.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import AlphaOutOfRange, DegenerateRange, LambdaOutOfRange, ValidationError
from .monotone import MonotoneStepLinear
from .realset import Interval, RealSet

__all__ = [
    "Cdf",
    "QuantilePair",
    "normalize",
    "as_cdf",
    "left_quantile",
    "right_quantile",
    "quantile_pair",
    "level_set",
    "sublevel_decomposition",
    "jump_set",
]


class QuantilePair(NamedTuple):
    """Left and right generalized inverse at one level; ``lo <= hi`` always."""

    lo: float
    hi: float


@dataclass(frozen=True)
class _FlatRun:
    """One maximal flat piece of positive length at a level strictly inside (0,1).

    ``closed_end`` records whether the function still equals ``level`` at
    ``hi`` (continuous take-off) or jumps past it there (atom at ``hi``).
    """

    level: float
    lo: float
    hi: float
    closed_end: bool


@dataclass(frozen=True)
class Cdf(MonotoneStepLinear):
    """A distribution function: nondecreasing, right-continuous, limits 0 and 1.

    Carries the jump points (atoms) and the flat-piece levels in (0,1),
    read off the representation at construction time.
    """

    _jump_idx: np.ndarray = field(init=False, repr=False, compare=False)
    _flat_runs: tuple = field(init=False, repr=False, compare=False)

    def _derive(self):
        k = len(self.xs)
        if k == 0:
            raise DegenerateRange("a constant function is not a distribution function")
        if self.base != 0.0:
            raise ValidationError(f"base must be exactly 0.0, got {self.base}")
        if float(self._cums[-1]) != 1.0:
            raise ValidationError(f"top must be exactly 1.0, got {float(self._cums[-1])}")
        object.__setattr__(self, "_jump_idx", np.nonzero(self._atoms_arr > 0.0)[0])
        runs = []
        i = 0
        while i < k - 1:
            if self.rises[i] != 0.0:
                i += 1
                continue
            s = i
            m = i + 1
            while m < k - 1 and self.atoms[m] == 0.0 and self.rises[m] == 0.0:
                m += 1
            level = float(self._cums[s])
            if 0.0 < level < 1.0:
                runs.append(_FlatRun(level, self.xs[s], self.xs[m], self.atoms[m] == 0.0))
            i = m
        object.__setattr__(self, "_flat_runs", tuple(runs))

    @property
    def jump_points(self) -> tuple[float, ...]:
        return tuple(self.xs[i] for i in self._jump_idx)

    @property
    def jump_masses(self) -> tuple[float, ...]:
        return tuple(self.atoms[i] for i in self._jump_idx)

    @property
    def plateau_levels(self) -> tuple[float, ...]:
        """Levels a in (0,1) where the left and right quantiles differ."""
        return tuple(run.level for run in self._flat_runs)


def normalize(g: MonotoneStepLinear) -> Cdf:
    """Affinely rescale a bounded nondecreasing function onto [0, 1].

    Maps G to (G - base) / (top - base).  Breakpoints are preserved; atom and
    rise proportions are preserved.  The stored breakpoint values are divided
    directly, so the rescaled top is exactly 1.0.

    Raises
    ------
    DegenerateRange
        If G is constant (top == base).
    """
    span = g.top - g.base
    if span <= 0.0:
        raise DegenerateRange("constant function has no distribution-function rescaling")
    lefts = (g._lefts - g.base) / span
    cums = (g._cums - g.base) / span
    atoms = tuple(a / span for a in g.atoms)
    rises = tuple(r / span for r in g.rises)
    return Cdf._with_profile(g.xs, atoms, rises, 0.0, lefts, cums)


def as_cdf(g: MonotoneStepLinear, mass_tol: float = 1e-9) -> Cdf:
    """Validate that g carries total mass 1 within ``mass_tol`` and rescale exactly.

    Decimal inputs whose masses sum to 1 only approximately are accepted and
    renormalized; a larger deviation is a validation error rather than a
    silent distortion.
    """
    if isinstance(g, Cdf):
        return g
    span = g.top - g.base
    if span <= 0.0:
        raise DegenerateRange("constant function has no distribution-function rescaling")
    if abs(span - 1.0) > mass_tol:
        raise ValidationError(
            f"total mass {span!r} differs from 1 by more than {mass_tol}"
        )
    return normalize(g)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if math.isnan(alpha) or not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"level must lie in (0, 1), got {alpha}")
    return alpha


# -- quantile scans ----------------------------------------------------------
#
# Left quantile at a: the least x with F(x) >= a.  Scan for the first
# breakpoint value >= a; the level is attained either at that breakpoint
# (atom jumps past it, or the ramp arrives exactly there) or strictly inside
# the rising segment before it, where one linear solve inverts the ramp.
# After an interior solve the result is nudged by ulps until F(x) >= a holds
# in float arithmetic, so the defining inequality is never violated.


def _left_quantile_unchecked(f: Cdf, a: float) -> float:
    cums = f._cums
    i = int(np.searchsorted(cums, a, side="left"))
    if i == 0:
        return f.xs[0]
    la = float(f._lefts[i])
    if a >= la:
        return f.xs[i]
    x0, x1 = f.xs[i - 1], f.xs[i]
    x = x0 + (a - float(cums[i - 1])) / f.rises[i - 1] * (x1 - x0)
    while f.value(x) < a:
        x = math.nextafter(x, math.inf)
    return x


def _right_quantile_unchecked(f: Cdf, a: float) -> float:
    # requires a < top == 1, so {x : F(x) > a} is nonempty and the scan lands
    cums = f._cums
    j = int(np.searchsorted(cums, a, side="right"))
    if j == 0:
        return f.xs[0]
    la = float(f._lefts[j])
    if a >= la:
        return f.xs[j]
    c0 = float(cums[j - 1])
    if a == c0:
        return f.xs[j - 1]
    x0, x1 = f.xs[j - 1], f.xs[j]
    x = x0 + (a - c0) / f.rises[j - 1] * (x1 - x0)
    while f.value(x) < a:
        x = math.nextafter(x, math.inf)
    return x


def left_quantile(f: Cdf, alpha: float) -> float:
    """The least x with F(x) >= alpha (the left generalized inverse).

    The minimum is attained because F is right-continuous.  Exact at atoms
    and flat pieces; one linear solve inside rising segments.
    """
    return _left_quantile_unchecked(f, _check_alpha(alpha))


def right_quantile(f: Cdf, alpha: float) -> float:
    """sup{x : F(x) <= alpha} = inf{x : F(x) > alpha} (the right generalized inverse)."""
    return _right_quantile_unchecked(f, _check_alpha(alpha))


def quantile_pair(f: Cdf, alpha: float) -> QuantilePair:
    a = _check_alpha(alpha)
    lo = _left_quantile_unchecked(f, a)
    hi = _right_quantile_unchecked(f, a)
    return QuantilePair(lo, hi)


def _left_quantiles(f: Cdf, a: np.ndarray) -> np.ndarray:
    """Vectorized left quantile for levels already inside (0, 1)."""
    cums = f._cums
    xs = f._xs_arr
    i = np.searchsorted(cums, a, side="left")
    out = np.empty(a.shape)
    first = i == 0
    out[first] = xs[0]
    rest = ~first
    ii = i[rest]
    av = a[rest]
    res = xs[ii].copy()
    interior = av < f._lefts[ii]
    ij = ii[interior] - 1
    x0 = xs[ij]
    res[interior] = x0 + (av[interior] - cums[ij]) / f._rises_arr[ij] * (xs[ij + 1] - x0)
    out[rest] = res
    bad = f.values(out) < a
    while bad.any():
        out[bad] = np.nextafter(out[bad], np.inf)
        bad &= f.values(out) < a
    return out


# -- level sets and the sublevel split ---------------------------------------


def level_set(f: Cdf, alpha: float) -> RealSet:
    """{x : F(x) = alpha}, exactly one of: empty, a point, [lo,hi), [lo,hi].

    With lo/hi the left/right quantiles: empty or {lo} when lo == hi
    (according to whether F(lo) equals alpha); when lo < hi the set is
    [lo, hi) if F(hi) > alpha and [lo, hi] if F(hi) == alpha.
    """
    a = _check_alpha(alpha)
    lo = _left_quantile_unchecked(f, a)
    hi = _right_quantile_unchecked(f, a)
    if lo == hi:
        if f.value(lo) == a:
            return RealSet.point(lo)
        return RealSet.empty()
    if f.value(hi) == a:
        return RealSet.of(Interval.closed(lo, hi))
    return RealSet.of(Interval.closed_open(lo, hi))


def sublevel_decomposition(f: Cdf, lam: float, alpha: float):
    """Split {x : F(x-) + lam * jump(x) <= alpha} around the left quantile.

    Returns ``(beyond, at, below)``: the part strictly right of the left
    quantile q (a flat piece of F, possibly empty), the singleton {q} when
    jump(q) * lam <= alpha - F(q-), and the always-present (-inf, q).
    Requires 0 < lam <= 1 and 0 < alpha < 1.
    """
    lam = float(lam)
    if not 0.0 < lam <= 1.0:
        raise LambdaOutOfRange(f"weight must lie in (0, 1], got {lam}")
    a = _check_alpha(alpha)
    lo = _left_quantile_unchecked(f, a)
    hi = _right_quantile_unchecked(f, a)
    if lo == hi:
        beyond = RealSet.empty()
    elif f.value(hi) == a:
        beyond = RealSet.of(Interval.open_closed(lo, hi))
    else:
        beyond = RealSet.of(Interval.open(lo, hi))
    # membership of the quantile itself: jump(q) * lam <= alpha - F(q-),
    # evaluated as the transform itself evaluates so the two never disagree
    # on the float boundary
    t_at = f.value(lo) if lam == 1.0 else f.left_value(lo) + lam * f.jump(lo)
    if t_at <= a:
        at = RealSet.point(lo)
    else:
        at = RealSet.empty()
    below = RealSet.of(Interval.open(-math.inf, lo))
    return beyond, at, below


def jump_set(f: Cdf) -> list[tuple[float, float]]:
    """All jump points with their masses, cross-checked against the quantiles.

    For each atom, a level strictly inside its value gap must map back to the
    same point under both generalized inverses; a mismatch would mean the
    stored structure and the scans disagree, so it raises.
    """
    out = []
    for i in f._jump_idx:
        x = f.xs[i]
        mass = f.atoms[i]
        u = float(f._lefts[i]) + 0.5 * mass
        if float(f._lefts[i]) < u < float(f._cums[i]) and 0.0 < u < 1.0:
            lo = _left_quantile_unchecked(f, u)
            hi = _right_quantile_unchecked(f, u)
            if lo != x or hi != x:
                raise ValidationError(
                    f"jump at {x} fails the quantile round trip: got ({lo}, {hi})"
                )
        out.append((x, mass))
    return out
