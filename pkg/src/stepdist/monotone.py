"""Bounded nondecreasing right-continuous functions as breakpoints, atoms and ramps.

The representation keeps the running values at every breakpoint (both the
right-continuous value and the left limit) as stored floats, so evaluation,
jumps and flat-piece levels come out of stored data instead of re-derived
sums.  That is what makes the downstream identities exact: two points on the
same flat piece share the identical float level.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

__all__ = ["MonotoneStepLinear", "DfConditionReport", "df_condition_report"]


def _float_tuple(values) -> tuple[float, ...]:
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class MonotoneStepLinear:
    """A bounded nondecreasing right-continuous function on the real line.

    The function equals ``base`` on (-inf, xs[0]), jumps by ``atoms[i]`` at
    ``xs[i]`` (the jump is included in the value at the point, which is what
    right-continuity means here), rises linearly by ``rises[i]`` across
    [xs[i], xs[i+1]), and is constant at the accumulated top on
    [xs[-1], inf).  An empty breakpoint list gives the constant ``base``.

    Parameters
    ----------
    xs : strictly increasing finite abscissas.
    atoms : jump mass at each breakpoint, >= 0.
    rises : total linear increase over each consecutive breakpoint pair, >= 0.
    base : value on (-inf, xs[0]).
    """

    xs: tuple[float, ...]
    atoms: tuple[float, ...]
    rises: tuple[float, ...]
    base: float = 0.0
    _lefts: np.ndarray = field(init=False, repr=False, compare=False)
    _cums: np.ndarray = field(init=False, repr=False, compare=False)
    _xs_arr: np.ndarray = field(init=False, repr=False, compare=False)
    _rises_arr: np.ndarray = field(init=False, repr=False, compare=False)
    _atoms_arr: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "xs", _float_tuple(self.xs))
        object.__setattr__(self, "atoms", _float_tuple(self.atoms))
        object.__setattr__(self, "rises", _float_tuple(self.rises))
        object.__setattr__(self, "base", float(self.base))
        self._validate_fields()
        k = len(self.xs)
        lefts = np.empty(k)
        cums = np.empty(k)
        running = self.base
        for i in range(k):
            if i > 0:
                running = running + self.rises[i - 1]
            lefts[i] = running
            running = running + self.atoms[i]
            cums[i] = running
        self._attach_profile(lefts, cums)
        self._derive()

    def _validate_fields(self):
        k = len(self.xs)
        if len(self.atoms) != k:
            raise ValidationError(f"{len(self.atoms)} atoms for {k} breakpoints")
        if len(self.rises) != max(k - 1, 0):
            raise ValidationError(f"{len(self.rises)} rises for {k} breakpoints")
        vals = self.xs + self.atoms + self.rises + (self.base,)
        if any(math.isnan(v) or math.isinf(v) for v in vals):
            raise ValidationError("breakpoints, masses and base must be finite")
        for a, b in zip(self.xs, self.xs[1:]):
            if not a < b:
                raise ValidationError(f"breakpoints not strictly increasing at {a}, {b}")
        if any(a < 0 for a in self.atoms):
            raise ValidationError("negative atom mass")
        if any(r < 0 for r in self.rises):
            raise ValidationError("negative segment increase")

    def _attach_profile(self, lefts: np.ndarray, cums: np.ndarray):
        object.__setattr__(self, "_lefts", lefts)
        object.__setattr__(self, "_cums", cums)
        object.__setattr__(self, "_xs_arr", np.asarray(self.xs))
        object.__setattr__(self, "_rises_arr", np.asarray(self.rises))
        object.__setattr__(self, "_atoms_arr", np.asarray(self.atoms))

    def _derive(self):
        """Hook for subclasses that cache extra structure."""

    @classmethod
    def _with_profile(cls, xs, atoms, rises, base, lefts, cums):
        """Build an instance whose breakpoint values are supplied, not accumulated.

        Used by affine rescaling, where dividing the stored values keeps the
        top exactly 1.0 while re-accumulating scaled masses would not.
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "xs", _float_tuple(xs))
        object.__setattr__(obj, "atoms", _float_tuple(atoms))
        object.__setattr__(obj, "rises", _float_tuple(rises))
        object.__setattr__(obj, "base", float(base))
        obj._validate_fields()
        obj._attach_profile(np.asarray(lefts, dtype=float), np.asarray(cums, dtype=float))
        obj._derive()
        return obj

    # -- basic queries -------------------------------------------------------
    @property
    def top(self) -> float:
        """The constant value on [xs[-1], inf); equals base when there are no breakpoints."""
        return float(self._cums[-1]) if len(self.xs) else self.base

    def value(self, x: float) -> float:
        """G(x), right-continuous: the jump at x is included."""
        x = float(x)
        if math.isnan(x):
            raise ValidationError("evaluation point is NaN")
        xs = self.xs
        k = len(xs)
        if k == 0 or x < xs[0]:
            return self.base
        i = bisect_right(xs, x) - 1
        if i >= k - 1:
            return float(self._cums[k - 1])
        r = self.rises[i]
        c = float(self._cums[i])
        return c + r * ((x - xs[i]) / (xs[i + 1] - xs[i]))

    def left_value(self, x: float) -> float:
        """G(x-), the limit from the left; equals value(x) off the jump points."""
        x = float(x)
        if math.isnan(x):
            raise ValidationError("evaluation point is NaN")
        xs = self.xs
        if not xs or x <= xs[0]:
            return self.base
        i = bisect_left(xs, x)
        if i < len(xs) and xs[i] == x:
            return float(self._lefts[i])
        return self.value(x)

    def jump(self, x: float) -> float:
        """G(x) - G(x-): the stored atom at breakpoints, 0 elsewhere."""
        x = float(x)
        if math.isnan(x):
            raise ValidationError("evaluation point is NaN")
        xs = self.xs
        i = bisect_left(xs, x)
        if i < len(xs) and xs[i] == x:
            return self.atoms[i]
        return 0.0

    # -- vectorized evaluation ------------------------------------------------
    def values(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        k = len(self.xs)
        if k == 0:
            return np.full(x.shape, self.base)
        xs = self._xs_arr
        idx = np.searchsorted(xs, x, side="right") - 1
        out = np.full(x.shape, self.base)
        last = idx >= k - 1
        out[last] = self._cums[k - 1]
        mid = (idx >= 0) & ~last
        i = idx[mid]
        frac = (x[mid] - xs[i]) / (xs[i + 1] - xs[i])
        out[mid] = self._cums[i] + self._rises_arr[i] * frac
        return out

    def left_values(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = self.values(x)
        k = len(self.xs)
        if k == 0:
            return out
        j = np.searchsorted(self._xs_arr, x, side="left")
        hit = (j < k) & (self._xs_arr[np.minimum(j, k - 1)] == x)
        out[hit] = self._lefts[j[hit]]
        return out

    def jumps(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape)
        k = len(self.xs)
        if k == 0:
            return out
        j = np.searchsorted(self._xs_arr, x, side="left")
        hit = (j < k) & (self._xs_arr[np.minimum(j, k - 1)] == x)
        out[hit] = self._atoms_arr[j[hit]]
        return out


@dataclass(frozen=True)
class DfConditionReport:
    """Truth values of the four equivalent ways a [0,1]-valued nondecreasing
    function can be a distribution function."""

    cond_limits: bool
    cond_both_nonempty: bool
    cond_bounded_below: bool
    cond_inf_finite: bool

    def all_agree(self) -> bool:
        return (
            self.cond_limits
            == self.cond_both_nonempty
            == self.cond_bounded_below
            == self.cond_inf_finite
        )

    def is_distribution_function(self) -> bool:
        return self.cond_limits and self.all_agree()


def _probe_levels(g: MonotoneStepLinear) -> list[float]:
    """Every level in (0,1) at which a set condition could change, plus
    midpoints between consecutive critical levels and a coarse grid.

    The function has finitely many attained levels, so conditions quantified
    over all levels in (0,1) are constant between critical levels; probing
    criticals and midpoints decides them completely.
    """
    crit = {0.0, 1.0, g.base, g.top}
    crit.update(float(v) for v in g._cums)
    crit.update(float(v) for v in g._lefts)
    levels = sorted(c for c in crit if 0.0 <= c <= 1.0)
    probes = set(levels)
    for a, b in zip(levels, levels[1:]):
        probes.add(a + 0.5 * (b - a))
    probes.update(i / 100.0 for i in range(1, 100))
    return sorted(p for p in probes if 0.0 < p < 1.0)


def df_condition_report(g: MonotoneStepLinear) -> DfConditionReport:
    """Evaluate the four distribution-function conditions independently.

    Requires range(g) within [0, 1].  The conditions are decided from the
    finite breakpoint structure over critical levels and midpoints, not by
    numeric search.
    """
    if g.base < 0.0 or g.top > 1.0:
        raise ValidationError("range must be contained in [0, 1]")
    cond_limits = g.base == 0.0 and g.top == 1.0

    both_nonempty = True
    bounded_below = True
    inf_finite = True
    for a in _probe_levels(g):
        upper_nonempty = g.top >= a  # {x : G(x) >= a} nonempty
        lower_nonempty = g.base < a  # {x : G(x) < a} nonempty (base is attained)
        both_nonempty &= upper_nonempty and lower_nonempty
        bounded_below &= upper_nonempty and lower_nonempty
        if not upper_nonempty:
            inf_finite = False  # infimum over the empty set: +inf
        elif not lower_nonempty:
            inf_finite = False  # G >= a everywhere: infimum -inf
    return DfConditionReport(cond_limits, both_nonempty, bounded_below, inf_finite)
