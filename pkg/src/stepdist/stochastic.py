"""Seeded sampling, the distributional transform, and its exact law.

Sampling is inverse-transform sampling through the exact left quantile.  The
distributional transform U = F(X-) + V * jump(X), with V uniform on (0,1)
and independent of X, is uniform on (0,1) no matter how many atoms F has;
the module computes its CDF exactly (no sampling) for an arbitrary law of X
and verifies the almost-sure inversion X = left_quantile(U) empirically.

Streams are identified by (seed, stream_id): the same pair always reproduces
the same draws, distinct stream_ids give independent streams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cdf import Cdf, _check_alpha, _left_quantile_unchecked, _left_quantiles, level_set
from .errors import EmptySample, StreamCollision, ValidationError
from .measure import measure_set
from .realset import Interval, RealSet

__all__ = [
    "SeededStream",
    "sample_inverse",
    "distributional_transform",
    "TransformCdfBreakdown",
    "transform_cdf_exact",
    "ks_uniformity",
    "InversionReport",
    "inversion_check",
]

INVERSION_TOL = 1e-9  # covers the float round trip through segment inversion


@dataclass(frozen=True)
class SeededStream:
    """A reproducible uniform stream: (seed, stream_id) fixes every draw."""

    seed: int
    stream_id: int = 0

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if int(self.stream_id) < 0:
            raise ValidationError(f"stream_id must be nonnegative, got {self.stream_id}")

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        ss = np.random.SeedSequence(entropy=int(self.seed), spawn_key=(int(self.stream_id),))
        return np.random.Generator(np.random.PCG64(ss))

    def child(self, offset: int = 1) -> "SeededStream":
        return SeededStream(self.seed, self.stream_id + offset)

    def uniforms(self, n: int) -> np.ndarray:
        """n draws from the open interval (0, 1); exact 0s are redrawn."""
        g = self.generator()
        u = g.random(int(n))
        while True:
            zero = u == 0.0
            if not zero.any():
                return u
            u[zero] = g.random(int(zero.sum()))


def sample_inverse(f: Cdf, stream: SeededStream, n: int) -> np.ndarray:
    """n draws from F by applying the left quantile to uniform levels."""
    if n < 1:
        raise EmptySample("need at least one draw")
    return _left_quantiles(f, stream.uniforms(n))


def distributional_transform(
    f: Cdf, xs, v_stream: SeededStream, x_stream: SeededStream | None = None
) -> np.ndarray:
    """F(x-) + V * jump(x) with fresh V ~ U(0,1) per observation.

    Each output lies in [F(x-), F(x)].  The randomization stream must not be
    the stream that produced xs; pass the producing stream as ``x_stream``
    to have the collision checked.
    """
    if x_stream is not None and x_stream.stream_id == v_stream.stream_id:
        raise StreamCollision(
            f"stream_id {v_stream.stream_id} used for both the sample and its randomization"
        )
    xs = np.asarray(xs, dtype=float)
    v = v_stream.uniforms(xs.size).reshape(xs.shape)
    return f.left_values(xs) + v * f.jumps(xs)


@dataclass(frozen=True)
class TransformCdfBreakdown:
    """P(F_V(X) <= a) computed exactly, term by term.

    ``total`` is a plus the three correction terms; all three vanish when the
    law of X is the transform's own reference CDF, which is why the
    distributional transform is uniform.
    """

    quantile: float  # left quantile of the reference CDF at the level
    atom: float  # jump of the reference CDF there
    left_value: float  # reference CDF's left limit there
    atom_coef: float  # 0 if the atom vanishes, else (a - F(quantile)) / atom
    term_flat: float  # P(X > quantile and F(X) = a)
    term_atom: float  # atom_coef * (P(X = quantile) - atom)
    term_left: float  # P(X <= quantile) - F(quantile)
    total: float


def transform_cdf_exact(f: Cdf, law_of_x: Cdf, alpha: float) -> TransformCdfBreakdown:
    """Exact CDF of the distributional transform built from F, at one level.

    ``f`` is the reference CDF inside the transform; ``law_of_x`` is the
    actual law of the input variable (they may differ).  Every probability
    is read off the two representations, so the result is exact.
    """
    a = _check_alpha(alpha)
    q_pt = _left_quantile_unchecked(f, a)
    beta = f.jump(q_pt)
    qv = f.left_value(q_pt)
    fq = f.value(q_pt)
    c_beta = 0.0 if beta == 0.0 else (a - fq) / beta
    flat_region = level_set(f, a).intersect(
        RealSet.of(Interval.open(q_pt, math.inf))
    )
    term_flat = measure_set(law_of_x, flat_region)
    term_atom = c_beta * (law_of_x.jump(q_pt) - beta)
    term_left = law_of_x.value(q_pt) - fq
    total = a + term_flat + term_atom + term_left
    return TransformCdfBreakdown(
        quantile=q_pt,
        atom=beta,
        left_value=qv,
        atom_coef=c_beta,
        term_flat=term_flat,
        term_atom=term_atom,
        term_left=term_left,
        total=total,
    )


def ks_uniformity(us) -> float:
    """Two-sided Kolmogorov-Smirnov statistic of a sample against U(0,1)."""
    us = np.asarray(us, dtype=float)
    if us.size == 0:
        raise EmptySample("KS statistic of an empty sample")
    if np.isnan(us).any() or (us < 0.0).any() or (us > 1.0).any():
        raise ValidationError("sample values must lie in [0, 1]")
    s = np.sort(us, kind="stable").ravel()
    n = s.size
    upper = np.arange(1, n + 1, dtype=float) / n
    lower = np.arange(0, n, dtype=float) / n
    d_plus = float((upper - s).max())
    d_minus = float((s - lower).max())
    return max(d_plus, d_minus)


@dataclass(frozen=True)
class InversionReport:
    """Failure counts of the sampled inversion identity.

    ``failures`` counts draws where the left quantile of the transformed
    value missed the original draw by more than the round-trip tolerance.
    ``shortcut_failures`` does the same for the untransformed composition
    left_quantile(F(x)), which is only expected to work when F never hits
    0 or 1 with positive mass; it is None when that hypothesis fails.
    """

    failures: int
    shortcut_failures: int | None
    n: int
    seed: int
    stream_id: int


def inversion_check(f: Cdf, stream: SeededStream, n: int) -> InversionReport:
    """Draw (x, v) pairs and count violations of x == left_quantile(transform).

    x is drawn from F via ``stream``; the independent v-stream is
    ``stream.child(1)``.  Atoms round-trip exactly; points inside rising
    segments are compared with tolerance 1e-9.
    """
    if n < 1:
        raise EmptySample("need at least one draw")
    xs = sample_inverse(f, stream, n)
    v = stream.child(1).uniforms(n)
    u = f.left_values(xs) + v * f.jumps(xs)
    back = _left_quantiles(f, u)
    failures = int((np.abs(back - xs) > INVERSION_TOL).sum())

    z1 = _left_quantile_unchecked(f, 1.0)
    shortcut_failures = None
    if f.jump(z1) == 0.0:  # F reaches 1 continuously, so 0 < F(X) < 1 a.s.
        fx = f.values(xs)
        ok = (fx > 0.0) & (fx < 1.0)
        bad = int((~ok).sum())
        back2 = _left_quantiles(f, fx[ok])
        bad += int((np.abs(back2 - xs[ok]) > INVERSION_TOL).sum())
        shortcut_failures = bad
    return InversionReport(
        failures=failures,
        shortcut_failures=shortcut_failures,
        n=int(n),
        seed=stream.seed,
        stream_id=stream.stream_id,
    )
