"""Building exact distribution functions out of atoms, ramps and flat pieces.

A distribution function here is a finite structure: breakpoints that may
carry point masses, and segments between them that may rise linearly.  All
later identities (quantiles, measures, transforms) are exact because
evaluation reads stored breakpoint values instead of re-deriving sums.
"""

import numpy as np

import stepdist as sd
from stepdist import MonotoneStepLinear, df_condition_report, normalize

# Three canonical shapes: purely discrete, purely continuous, and mixed.
fb = sd.bernoulli_half()        # atoms 1/2 at 0 and 1
fu = sd.uniform_01()            # one rising segment
fm = sd.ramp_plateau_atom()     # ramp, flat piece, interior atom, ramp

for name, f in (("two-atom", fb), ("uniform", fu), ("mixed", fm)):
    print(f"--- {name} ---")
    for x in (-1.0, 0.0, 0.3, 0.5, 1.0):
        print(f"  F({x:>4}) = {f.value(x):<6g}  F({x}-) = {f.left_value(x):<6g}"
              f"  jump = {f.jump(x):g}")
    print(f"  jump points: {f.jump_points}  flat levels in (0,1): {f.plateau_levels}")

# Right-continuity: the value at an atom includes the jump.
assert fb.value(0.0) == 0.5 and fb.left_value(0.0) == 0.0

# Any bounded nondecreasing function rescales onto [0, 1] exactly.
g = MonotoneStepLinear(xs=(0.0, 2.0), atoms=(0.3, 0.1), rises=(0.2,), base=1.0)
f = normalize(g)
print("\nrescaled range:", f.value(-np.inf), "to", f.value(np.inf))
assert f.value(np.inf) == 1.0

# Four equivalent conditions decide whether a [0,1]-valued nondecreasing
# function is a distribution function; they agree on every instance.
for cand in (fb, normalize(g), MonotoneStepLinear((0.0,), (0.7,), (), base=0.2)):
    rep = df_condition_report(cand)
    print("df conditions:", rep)
    assert rep.all_agree()
