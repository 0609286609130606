"""Copulas and both directions of Sklar's theorem, on exact marginals.

Composing a copula with marginal CDFs yields a joint CDF; conversely, the
copula of a joint sample is recovered empirically by pushing every
coordinate through its distributional transform, which is uniform even in
the presence of atoms.  Analytic kinds (independence, comonotone,
countermonotone) evaluate in closed form; the empirical kind counts rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cdf import Cdf, _check_alpha, _left_quantile_unchecked, _left_quantiles, _right_quantile_unchecked
from .errors import (
    CountermonotoneDimension,
    DimensionMismatch,
    NotAFlatLevel,
    StreamCollision,
    ValidationError,
)
from .stochastic import SeededStream

__all__ = [
    "CopulaSpec",
    "JointSample",
    "copula_eval",
    "sklar_compose",
    "dt_copula",
    "sklar_identity_check",
    "copula_at_flat_alpha",
    "generate_joint_sample",
    "empirical_joint_cdf",
]

_ANALYTIC_KINDS = ("independence", "comonotone", "countermonotone")


@dataclass(frozen=True)
class CopulaSpec:
    """An n-dimensional copula, either analytic or empirical.

    Empirical copulas carry the matrix of transform samples in [0,1]^(N x n)
    and evaluate by weak-inequality row counting.
    """

    kind: str
    dim: int
    sample: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in _ANALYTIC_KINDS + ("empirical",):
            raise ValidationError(f"unknown copula kind {self.kind!r}")
        if self.kind == "countermonotone" and self.dim != 2:
            raise CountermonotoneDimension("countermonotone copula needs dimension 2")
        if self.kind == "empirical":
            if self.sample is None:
                raise ValidationError("empirical copula needs a sample matrix")
            u = np.asarray(self.sample, dtype=float)
            if u.ndim != 2 or u.shape[1] != self.dim:
                raise ValidationError(f"sample must be N x {self.dim}")
            if u.size == 0 or np.isnan(u).any() or (u < 0).any() or (u > 1).any():
                raise ValidationError("sample entries must fill [0, 1]")
            object.__setattr__(self, "sample", u)
        elif self.sample is not None:
            raise ValidationError("only the empirical kind carries a sample")

    @staticmethod
    def independence(dim: int) -> "CopulaSpec":
        return CopulaSpec("independence", dim)

    @staticmethod
    def comonotone(dim: int) -> "CopulaSpec":
        return CopulaSpec("comonotone", dim)

    @staticmethod
    def countermonotone() -> "CopulaSpec":
        return CopulaSpec("countermonotone", 2)

    @staticmethod
    def empirical(sample) -> "CopulaSpec":
        u = np.asarray(sample, dtype=float)
        return CopulaSpec("empirical", u.shape[1], u)


def copula_eval(cop: CopulaSpec, gamma) -> float:
    """C(gamma) for gamma in [0,1]^n.

    independence: product; comonotone: minimum; countermonotone (n=2):
    max(g1 + g2 - 1, 0); empirical: fraction of rows <= gamma coordinatewise.
    """
    g = np.asarray(gamma, dtype=float)
    if g.ndim != 1 or g.size != cop.dim:
        raise DimensionMismatch(f"expected {cop.dim} coordinates, got shape {g.shape}")
    if np.isnan(g).any() or (g < 0).any() or (g > 1).any():
        raise ValidationError("copula arguments must lie in [0, 1]")
    if cop.kind == "independence":
        return float(np.prod(g))
    if cop.kind == "comonotone":
        return float(g.min())
    if cop.kind == "countermonotone":
        return float(max(g[0] + g[1] - 1.0, 0.0))
    return float(np.all(cop.sample <= g, axis=1).mean())


def sklar_compose(cop: CopulaSpec, marginals, x) -> float:
    """The joint CDF C(H_1(x_1), ..., H_n(x_n)) at one point.

    Fixing all but one coordinate at +inf recovers that marginal exactly for
    the analytic kinds.
    """
    marginals = list(marginals)
    x = np.asarray(x, dtype=float)
    if len(marginals) != cop.dim or x.size != cop.dim:
        raise DimensionMismatch(
            f"copula dimension {cop.dim}, {len(marginals)} marginals, point of size {x.size}"
        )
    gamma = np.array([m.value(xi) for m, xi in zip(marginals, x)])
    return copula_eval(cop, gamma)


@dataclass(frozen=True)
class JointSample:
    """Rows of joint observations, their declared marginals, and provenance."""

    rows: np.ndarray
    marginals: tuple[Cdf, ...]
    provenance: tuple[SeededStream, ...]

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "marginals", tuple(self.marginals))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        n = len(self.marginals)
        if rows.ndim != 2 or rows.shape[1] != n:
            raise DimensionMismatch(f"rows must be N x {n}")
        if len(self.provenance) != n:
            raise DimensionMismatch("one provenance stream per coordinate")

    @property
    def dim(self) -> int:
        return len(self.marginals)

    @property
    def size(self) -> int:
        return int(self.rows.shape[0])


def generate_joint_sample(
    marginals, dependence: str, n: int, seed: int, base_stream_id: int = 0
) -> JointSample:
    """Draw a joint sample with a known dependence structure.

    independent: one stream per coordinate (ids base, base+1, ...);
    comonotone: a single uniform driven through every left quantile;
    countermonotone (2 marginals): u and 1-u through the two quantiles.
    """
    marginals = tuple(marginals)
    d = len(marginals)
    if d < 1:
        raise DimensionMismatch("need at least one marginal")
    if dependence == "independent":
        streams = tuple(SeededStream(seed, base_stream_id + j) for j in range(d))
        cols = [_left_quantiles(m, s.uniforms(n)) for m, s in zip(marginals, streams)]
    elif dependence == "comonotone":
        s = SeededStream(seed, base_stream_id)
        u = s.uniforms(n)
        streams = tuple(s for _ in range(d))
        cols = [_left_quantiles(m, u) for m in marginals]
    elif dependence == "countermonotone":
        if d != 2:
            raise CountermonotoneDimension("countermonotone sampling needs exactly 2 marginals")
        s = SeededStream(seed, base_stream_id)
        u = s.uniforms(n)
        streams = (s, s)
        cols = [_left_quantiles(marginals[0], u), _left_quantiles(marginals[1], 1.0 - u)]
    else:
        raise ValidationError(f"unknown dependence {dependence!r}")
    return JointSample(np.column_stack(cols), marginals, streams)


def dt_copula(sample: JointSample, v_stream: SeededStream) -> CopulaSpec:
    """Empirical copula of the per-coordinate distributional transforms.

    Each coordinate is pushed to F_j(x-) + V * jump_j(x) with fresh uniforms
    from ``v_stream``, which must differ from every provenance stream.
    """
    if any(v_stream.stream_id == s.stream_id for s in sample.provenance):
        raise StreamCollision(
            f"randomization stream_id {v_stream.stream_id} collides with the sample's streams"
        )
    rows = sample.rows
    v = v_stream.uniforms(rows.size).reshape(rows.shape)
    cols = []
    for j, m in enumerate(sample.marginals):
        xj = rows[:, j]
        cols.append(m.left_values(xj) + v[:, j] * m.jumps(xj))
    return CopulaSpec.empirical(np.column_stack(cols))


def empirical_joint_cdf(sample: JointSample, x) -> float:
    """Fraction of rows <= x coordinatewise."""
    x = np.asarray(x, dtype=float)
    if x.size != sample.dim:
        raise DimensionMismatch(f"point of size {x.size} for dimension {sample.dim}")
    return float(np.all(sample.rows <= x, axis=1).mean())


def sklar_identity_check(sample: JointSample, c_hat: CopulaSpec, grid) -> float:
    """Max deviation of the Sklar identity over a grid of points.

    Compares the empirical joint CDF against the copula composed with the
    declared marginals, both estimated from the same rows.
    """
    if c_hat.dim != sample.dim:
        raise DimensionMismatch(f"copula dimension {c_hat.dim} vs sample {sample.dim}")
    worst = 0.0
    for x in grid:
        lhs = empirical_joint_cdf(sample, x)
        rhs = sklar_compose(c_hat, sample.marginals, x)
        worst = max(worst, abs(lhs - rhs))
    return worst


def copula_at_flat_alpha(sample: JointSample, c_hat: CopulaSpec, alphas) -> tuple[float, float]:
    """Evaluate the copula at a level vector of flat marginal levels.

    Every coordinate level must sit on a flat piece of its marginal (left
    quantile strictly below right quantile); at such levels the copula value
    equals the joint CDF at the left quantiles.  Returns (copula value,
    empirical joint CDF at the quantile vector).
    """
    alphas = np.asarray(alphas, dtype=float)
    if alphas.size != sample.dim or c_hat.dim != sample.dim:
        raise DimensionMismatch(f"expected {sample.dim} levels")
    q = np.empty(sample.dim)
    for j, (m, a) in enumerate(zip(sample.marginals, alphas)):
        a = _check_alpha(a)
        lo = _left_quantile_unchecked(m, a)
        hi = _right_quantile_unchecked(m, a)
        if not lo < hi:
            raise NotAFlatLevel(j, f"coordinate {j}: level {a} is not on a flat piece")
        q[j] = lo
    lhs = copula_eval(c_hat, alphas)
    rhs = empirical_joint_cdf(sample, q)
    return lhs, rhs
