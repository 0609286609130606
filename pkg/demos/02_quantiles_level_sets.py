"""Left and right generalized inverses, level sets, and their exact masses.

With atoms and flat pieces the inverse of a CDF splits into a left quantile
(least x with F(x) >= a) and a right quantile (sup of {F <= a}).  The set
{F = a} is empty, a point, [lo, hi) or [lo, hi], and the half-open/closed
distinction is data, not a tolerance.
"""

import numpy as np

import stepdist as sd
from stepdist.measure import measure_interval, measure_level_set, measure_set
from stepdist.realset import Interval, RealSet

fm = sd.ramp_plateau_atom()

print("level   left_q  right_q  level set            mass")
for a in (0.1, 0.25, 0.3, 0.5, 0.75):
    lo = sd.left_quantile(fm, a)
    hi = sd.right_quantile(fm, a)
    ls = sd.level_set(fm, a)
    print(f"{a:<7g} {lo:<7g} {hi:<8g} {str(ls):<20} {measure_level_set(fm, a):g}")

# The flat piece [0.25, 0.5) sits at level 0.25 and carries no mass, while
# the level 0.3 is only reached by the jump at 0.5.
assert sd.level_set(fm, 0.25) == RealSet.of(Interval.closed_open(0.25, 0.5))
assert sd.level_set(fm, 0.3).is_empty()

# Interval masses follow the endpoint conventions exactly.
print("\nmass of (0.25, 0.5] =", measure_interval(fm, Interval.open_closed(0.25, 0.5)))
print("mass of {0.5}       =", measure_interval(fm, Interval.point(0.5)))
print("mass of [0.5, 1)    =", measure_interval(fm, Interval.closed_open(0.5, 1.0)))
assert measure_set(fm, RealSet.reals()) == 1.0

# The sublevel set of the jump-interpolated transform splits around the left
# quantile: a flat piece beyond it, possibly the quantile itself, and
# everything below.  Only the middle part depends on the weight.
for lam in (0.25, 1.0):
    beyond, at, below = sd.sublevel_decomposition(fm, lam, 0.25)
    print(f"lam={lam}: beyond={beyond}  at={at}  below={below}")

# Random spot check: the quantile sandwich F(lo-) <= a <= F(lo).
rng = np.random.default_rng(1)
f = sd.random_cdf(rng)
for a in rng.uniform(0.01, 0.99, size=200):
    lo = sd.left_quantile(f, float(a))
    assert f.left_value(lo) <= a + 1e-12 <= f.value(lo) + 2e-12
print("\nsandwich holds on 200 random levels of a random CDF")
