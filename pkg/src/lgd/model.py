"""Domain types and closed-form laws of the leverage model.

The leverage ratio V/B follows a GBM whose drift switches at the
distress level ``alpha`` (``mu0`` above, ``mu`` at or below); debt grows
at the constant rate ``r``.  After the last passage below ``alpha`` the
ratio is conditioned never to recover, which in the normalized
log coordinate X = ln(V/B)/sigma produces a coth drift with an entrance
boundary at ``alpha_star``.  Default strikes once the occupation time
under the danger threshold ``r_d`` exhausts an independent unit
exponential.

This module evaluates every closed form of that construction: the joint
Laplace transform of (default clock, leverage at default), the clock's
Laplace transform, the distribution and density of the leverage ratio
at default, and the Laplace transform (in time) of the joint density.
All evaluators accept numpy arrays and, where a transform has to be
continued off the real axis for numerical inversion, complex arguments.
Hyperbolic combinations are computed in factored/log form so that large
``|m| * (alpha_star - d)`` cannot overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModelParams",
    "DerivedParams",
    "RecoveryRatio",
    "derive_params",
    "conditioned_drift",
    "joint_laplace",
    "tau_laplace",
    "recovery_cdf",
    "recovery_pdf",
    "joint_density_laplace",
]


@dataclass(frozen=True)
class ModelParams:
    """Model parameters in market units.

    mu0, mu : drift (1/year) above / at-or-below the distress level
    sigma   : diffusion coefficient (1/sqrt(year)), shared by both regimes
    r       : interest and debt growth rate (1/year)
    alpha   : distress level of the leverage ratio, > 1
    r_d     : danger threshold, 0 < r_d < alpha
    x0      : initial leverage ratio V0/B0, > 0
    w       : long-term share of total debt, in [0, 1]

    Both normalized drifts must be negative so the leverage ratio decays
    and default eventually occurs; mu0 >= mu because business conditions
    only worsen below the distress level.
    """

    mu0: float
    mu: float
    sigma: float
    r: float
    alpha: float
    r_d: float
    x0: float
    w: float = 0.0

    def __post_init__(self) -> None:
        if not self.sigma > 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if not self.alpha > 1.0:
            raise ValueError(f"alpha must exceed 1, got {self.alpha}")
        if not 0.0 < self.r_d < self.alpha:
            raise ValueError(f"r_d must lie in (0, alpha), got {self.r_d}")
        if not self.x0 > 0.0:
            raise ValueError(f"x0 must be positive, got {self.x0}")
        if not 0.0 <= self.w <= 1.0:
            raise ValueError(f"w must lie in [0, 1], got {self.w}")
        half_var = 0.5 * self.sigma**2
        if not self.mu0 - half_var - self.r < 0.0:
            raise ValueError("mu0 - sigma^2/2 - r must be negative (left boundary attracting)")
        if not self.mu - half_var - self.r < 0.0:
            raise ValueError("mu - sigma^2/2 - r must be negative (left boundary attracting)")
        if not self.mu0 >= self.mu:
            raise ValueError("mu0 must be >= mu")

    @property
    def nu0(self) -> float:
        """Log-leverage drift above the distress level (1/year)."""
        return self.mu0 - 0.5 * self.sigma**2 - self.r

    @property
    def nu(self) -> float:
        """Log-leverage drift at or below the distress level (1/year)."""
        return self.mu - 0.5 * self.sigma**2 - self.r


@dataclass(frozen=True)
class DerivedParams:
    """Transformed constants used by every closed form.

    m          : normalized drift of X = ln(V/B)/sigma below the distress
                 level; negative under the ModelParams invariants
    alpha_star : ln(alpha)/sigma, the entrance boundary of the
                 conditioned process
    d          : ln(r_d)/sigma, the danger threshold in X coordinates
    b          : sqrt(1 + 2/m^2)
    """

    m: float
    alpha_star: float
    d: float
    b: float

    @property
    def abs_m(self) -> float:
        return abs(self.m)

    @property
    def zone_width(self) -> float:
        """alpha_star - d, the gap between distress and danger levels."""
        return self.alpha_star - self.d

    def b1(self, gamma):
        """sqrt(1 + 2(1+gamma)/m^2); complex-safe (principal branch)."""
        return np.sqrt(1.0 + 2.0 * (1.0 + gamma) / self.m**2)

    def b2(self, gamma):
        """sqrt(1 + 2*gamma/m^2); complex-safe (principal branch)."""
        return np.sqrt(1.0 + 2.0 * gamma / self.m**2)


@dataclass(frozen=True)
class RecoveryRatio:
    """Leverage ratio at default; lies in (0, r_d] by construction."""

    value: float

    def __post_init__(self) -> None:
        if not self.value > 0.0:
            raise ValueError(f"recovery ratio must be positive, got {self.value}")


def derive_params(p: ModelParams) -> DerivedParams:
    """Compute the transformed constants from validated model parameters."""
    m = p.nu / p.sigma
    return DerivedParams(
        m=m,
        alpha_star=math.log(p.alpha) / p.sigma,
        d=math.log(p.r_d) / p.sigma,
        b=math.sqrt(1.0 + 2.0 / m**2),
    )


def conditioned_drift(x, dp: DerivedParams):
    """Drift of the conditioned log-leverage process at X = x.

    The process, conditioned never to return to ``alpha_star``, has
    drift m*coth(m*(x - alpha_star)).  It diverges to -inf as x
    approaches the boundary from below and tends to m far away from it.
    Only x < alpha_star is admissible (entrance boundary).
    """
    x = np.asarray(x, dtype=float)
    if np.any(x >= dp.alpha_star):
        raise ValueError("x must lie strictly below alpha_star")
    out = dp.m / np.tanh(dp.m * (x - dp.alpha_star))
    return out if out.ndim else float(out)


def _log_cosh_plus_c_sinh(x, c):
    """log(cosh(x) + c*sinh(x)) for real x >= 0 and c >= 0, overflow-safe.

    Uses cosh(x) + c*sinh(x) = e^x * ((1+c) + (1-c) e^{-2x}) / 2.
    """
    x = np.asarray(x, dtype=float)
    c = np.asarray(c, dtype=float)
    ratio = (1.0 - c) / (1.0 + c)
    return x + np.log((1.0 + c) / 2.0) + np.log1p(ratio * np.exp(-2.0 * x))


def _bracket(z, c):
    """(1+c) + (1-c)*exp(-2z), the factored hyperbolic combination.

    Valid for complex z with Re(z) >= 0; cosh(z) + c*sinh(z) equals
    e^z * _bracket(z, c) / 2.
    """
    return (1.0 + c) + (1.0 - c) * np.exp(-2.0 * z)


def tau_laplace(gamma, p: ModelParams, dp: DerivedParams):
    """Laplace transform of the default clock at rate(s) ``gamma``.

    Accepts positive real rates or complex rates with positive real part
    (needed by the numerical inverse).  Equals the R -> r_d limit of
    :func:`joint_laplace` and tends to 1 as gamma -> 0+.
    """
    gamma = np.asarray(gamma)
    if np.iscomplexobj(gamma):
        if np.any(gamma.real <= 0.0):
            raise ValueError("Re(gamma) must be positive")
    elif np.any(gamma <= 0.0):
        raise ValueError("gamma must be positive")
    b1 = dp.b1(gamma)
    b2 = dp.b2(gamma)
    zn = dp.abs_m * dp.zone_width
    zd = b2 * zn
    value = (
        _bracket(zn, b1)
        * np.exp(zn - zd)
        / ((1.0 + gamma) * _bracket(zd, b1 / b2))
    )
    return value if value.ndim else value[()]


def joint_laplace(gamma, ratio, p: ModelParams, dp: DerivedParams):
    """E[exp(-gamma * clock); leverage at default <= ratio].

    Defined for gamma > 0 (or complex with positive real part) and
    0 < ratio <= r_d.  Tends to the total recovery CDF as gamma -> 0+
    and to :func:`tau_laplace` as ratio -> r_d.
    """
    gamma = np.asarray(gamma)
    ratio = np.asarray(ratio, dtype=float)
    if np.iscomplexobj(gamma):
        if np.any(gamma.real <= 0.0):
            raise ValueError("Re(gamma) must be positive")
    elif np.any(gamma <= 0.0):
        raise ValueError("gamma must be positive")
    if np.any(ratio <= 0.0) or np.any(ratio > p.r_d):
        raise ValueError("ratio must lie in (0, r_d]")
    b1 = dp.b1(gamma)
    b2 = dp.b2(gamma)
    c_sig = dp.abs_m / p.sigma
    w = c_sig * np.log(p.alpha / ratio)
    zn = dp.abs_m * dp.zone_width
    zd = b2 * zn
    # exponent = w - zd + b1 * c_sig * ln(ratio/r_d); non-positive real part
    exponent = w - zd + b1 * c_sig * np.log(ratio / p.r_d)
    value = (
        _bracket(w, b1)
        * np.exp(exponent)
        / ((1.0 + gamma) * _bracket(zd, b1 / b2))
    )
    return value if value.ndim else value[()]


def recovery_cdf(ratio, p: ModelParams, dp: DerivedParams):
    """P(leverage ratio at default <= ratio); the gamma -> 0 law.

    Right-continuous and nondecreasing, equal to 1 for ratio >= r_d and
    vanishing as ratio -> 0+.
    """
    ratio = np.asarray(ratio, dtype=float)
    if np.any(ratio <= 0.0):
        raise ValueError("ratio must be positive")
    c_sig = dp.abs_m / p.sigma
    inside = np.minimum(ratio, p.r_d)
    w = c_sig * np.log(p.alpha / inside)
    zn = dp.abs_m * dp.zone_width
    log_value = (
        _log_cosh_plus_c_sinh(w, dp.b)
        - _log_cosh_plus_c_sinh(zn, dp.b)
        + dp.b * c_sig * np.log(inside / p.r_d)
    )
    out = np.where(ratio >= p.r_d, 1.0, np.exp(log_value))
    return out if out.ndim else float(out)


def recovery_pdf(ratio, p: ModelParams, dp: DerivedParams):
    """Density of the leverage ratio at default on (0, r_d).

    Algebraic gamma -> 0 limit of :func:`joint_density_laplace`; it is
    verified in the test suite against the numerical derivative of
    :func:`recovery_cdf`, since only the transform itself has an
    explicit reference form.
    """
    ratio = np.asarray(ratio, dtype=float)
    if np.any(ratio <= 0.0) or np.any(ratio >= p.r_d):
        raise ValueError("ratio must lie in (0, r_d)")
    c_sig = dp.abs_m / p.sigma
    w = c_sig * np.log(p.alpha / ratio)
    zn = dp.abs_m * dp.zone_width
    # log sinh(w) = w + log1p(-exp(-2w)) - log 2, safe for w > 0
    log_value = (
        math.log(dp.b**2 - 1.0)
        + w
        + np.log1p(-np.exp(-2.0 * w))
        - math.log(2.0)
        + np.log(c_sig / ratio)
        + dp.b * c_sig * np.log(ratio / p.r_d)
        - _log_cosh_plus_c_sinh(zn, dp.b)
    )
    out = np.exp(log_value)
    return out if out.ndim else float(out)


def joint_density_laplace(gamma, ratio, p: ModelParams, dp: DerivedParams):
    """Laplace transform in time of the joint (clock, ratio) density.

    For fixed ratio in (0, r_d) this is the transform of t -> f(t, ratio);
    it equals d/dR of :func:`joint_laplace` and tends to
    :func:`recovery_pdf` as gamma -> 0+.  Complex gamma with positive
    real part is supported for numerical inversion.
    """
    gamma = np.asarray(gamma)
    ratio = np.asarray(ratio, dtype=float)
    if np.iscomplexobj(gamma):
        if np.any(gamma.real <= 0.0):
            raise ValueError("Re(gamma) must be positive")
    elif np.any(gamma <= 0.0):
        raise ValueError("gamma must be positive")
    if np.any(ratio <= 0.0) or np.any(ratio >= p.r_d):
        raise ValueError("ratio must lie in (0, r_d)")
    b1 = dp.b1(gamma)
    b2 = dp.b2(gamma)
    c_sig = dp.abs_m / p.sigma
    w = c_sig * np.log(p.alpha / ratio)
    zn = dp.abs_m * dp.zone_width
    zd = b2 * zn
    # sinh(w) = e^w (1 - e^{-2w}) / 2 and the denominator combination
    # carries e^{zd}/2; the two halves cancel.
    exponent = w - zd + b1 * c_sig * np.log(ratio / p.r_d)
    value = (
        (b1**2 - 1.0)
        * -np.expm1(-2.0 * w)
        * (c_sig / ratio)
        * np.exp(exponent)
        / ((1.0 + gamma) * _bracket(zd, b1 / b2))
    )
    return value if value.ndim else value[()]
