"""The jump-interpolating transform and where the left quantile undoes it.

F_lam(x) = F(x-) + lam * jump(x) sweeps across each jump as lam runs through
[0, 1].  Composing the left quantile after it returns x everywhere except on
an explicit exceptional set: the points sent to 0 or 1, plus the flat pieces
of F.  That set always carries zero F-mass unless mass sits on the levels
0 or 1 themselves.
"""

import numpy as np

import stepdist as sd
from stepdist.measure import measure_set

fm = sd.ramp_plateau_atom()
fb = sd.bernoulli_half()

# The transform interpolates the jump at 0.5 and is sandwiched by the limits.
for lam in (0.0, 0.25, 0.5, 1.0):
    t = sd.lambda_transform(fm, 0.5, lam)
    print(f"transform at the atom with lam={lam}: {t}")
    assert fm.left_value(0.5) <= t <= fm.value(0.5)

# Each jump's open value gap is reached bijectively: weights <-> gap levels.
vals = sd.jump_gap_values(fb, [0.4, 0.6])
back = sd.jump_gap_weights(fb, vals)
print("\ngap levels:", vals, "-> weights:", back)
assert max(abs(b - l) for b, l in zip(back, [0.4, 0.6])) < 1e-12

# Gap levels are never attained by F or its left limits; together the gaps
# are exactly the unattained part of (0,1).
att = sd.attained_values(fb)
assert not att.contains(vals[0]) and not att.contains(vals[1])

# The exceptional set, piece by piece.  For the mixed CDF at full weight the
# flat piece (0.25, 0.5) joins the tails, and everything carries zero mass.
rep = sd.inversion_null_set(fm, 1.0)
print("\nzero set:", rep.zero_set)
print("one set:", rep.one_set)
print("flat pieces:", rep.plateau_union)
print("total mass:", rep.total_measure)
assert rep.total_measure == 0.0

# Outside the set the inversion is the identity; inside a flat piece it
# drops to the left end of the piece, never exceeding the input.
print("\ninvert at 0.75 (regular point):", sd.invert_transform(fm, 0.75, 1.0))
print("invert at 0.30 (flat piece):   ", sd.invert_transform(fm, 0.30, 1.0))

# A jump onto the level 1 defeats the hypothesis: the one-set keeps mass.
flagged = sd.inversion_null_set(fb, 1.0)
print("\ntwo-atom CDF at lam=1: exceptional mass =", flagged.total_measure)
assert measure_set(fb, flagged.one_set) == 0.5

# Random check across a random CDF: never above x, equal off the set.
rng = np.random.default_rng(3)
f = sd.random_cdf(rng)
rep = sd.inversion_null_set(f, 0.5)
exceptional = rep.union()
hits = 0
for x in np.linspace(f.xs[0] - 0.5, f.xs[-1] + 0.5, 500):
    t = sd.lambda_transform(f, x, 0.5)
    if t == 0.0 or t == 1.0:
        continue
    y = sd.invert_transform(f, x, 0.5)
    assert y <= x + 1e-12
    if not exceptional.contains(x):
        assert abs(y - x) <= 1e-9
        hits += 1
print(f"\nrandom CDF: identity verified at {hits} regular points")
