"""Loss functions and the scale-mixture error law behind them.

The scaled pseudo-Huber loss

    sph(t) = alpha sqrt(alpha^2 + 1) (sqrt(1 + t^2/alpha^2) - 1)

bridges absolute loss (alpha -> 0) and half-squared loss (alpha -> infinity).
Its normalized exponential-negative density is exactly the marginal of the
Gaussian scale mixture

    eps | lam ~ N(0, lam),   lam ~ GIG(1 + alpha^2, alpha^2, 1),

which is what the Gibbs samplers exploit.  The unscaled pseudo-Huber variant
``alpha^2 (sqrt(1 + t^2/alpha^2) - 1)`` has the analogous mixture with
mixing rate ``alpha^2`` instead of ``1 + alpha^2``; both are handled here so
the two can be compared.  The classical (non-smooth) Huber loss is kept for
reference and tests only; the samplers never touch it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bessel import log_bessel_k
from .distributions import sample_gig
from .rng import RngStream

LOSS_KINDS = ("sph", "uph", "huber", "l1", "l2")
_ALPHA_KINDS = ("sph", "uph", "huber")


@dataclass(frozen=True)
class LossVariant:
    """A loss family plus its transition parameter.

    ``alpha`` is meaningful for the pseudo-Huber family and the Huber loss;
    it is ignored for ``l1`` and ``l2``.
    """

    kind: str
    alpha: float = 1.0

    def __post_init__(self):
        if self.kind not in LOSS_KINDS:
            raise ValueError(f"unknown loss kind {self.kind!r}; expected one of {LOSS_KINDS}")
        if self.kind in _ALPHA_KINDS and not (self.alpha > 0.0):
            raise ValueError(f"loss {self.kind!r} requires alpha > 0, got {self.alpha}")


def _sqrt1p_m1(u):
    # sqrt(1 + u) - 1 without cancellation for small u
    return u / (np.sqrt(1.0 + u) + 1.0)


def loss(variant: LossVariant, t):
    """Evaluate the loss at residual(s) ``t``; vectorized, always >= 0."""
    t = np.asarray(t, dtype=float)
    a = variant.alpha
    if variant.kind == "sph":
        out = a * math.sqrt(a * a + 1.0) * _sqrt1p_m1((t / a) ** 2)
    elif variant.kind == "uph":
        out = a * a * _sqrt1p_m1((t / a) ** 2)
    elif variant.kind == "huber":
        # quadratic core |t| <= 1/a, linear tails 2|t|/a - 1/a^2
        at = np.abs(t)
        out = np.where(at <= 1.0 / a, t * t, 2.0 * at / a - 1.0 / (a * a))
    elif variant.kind == "l1":
        out = np.abs(t)
    else:  # l2
        out = t * t
    return out if out.shape else float(out)


def sph_log_norm_const(alpha: float, kind: str = "sph") -> float:
    """Log normalizing constant of the (scaled) pseudo-Huber density.

    For the scaled loss this is
    ``-alpha sqrt(1+alpha^2) - log(2 alpha) - log K_1(alpha sqrt(1+alpha^2))``;
    the unscaled variant replaces ``sqrt(1+alpha^2)`` by ``alpha``.
    """
    if not alpha > 0.0:
        raise ValueError("alpha must be > 0")
    if kind == "sph":
        root = math.sqrt(1.0 + alpha * alpha)
    elif kind == "uph":
        root = alpha
    else:
        raise ValueError("normalized density exists only for kinds 'sph' and 'uph'")
    return -alpha * root - math.log(2.0 * alpha) - log_bessel_k(1.0, alpha * root)


@dataclass(frozen=True)
class SphDensity:
    """Normalized density ``C(alpha) exp(-loss(eps))`` for sph or uph."""

    alpha: float
    kind: str = "sph"
    log_norm_const: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "log_norm_const", sph_log_norm_const(self.alpha, self.kind))


def log_density(d: SphDensity, eps):
    """Log of the normalized error density at ``eps``."""
    return d.log_norm_const - loss(LossVariant(d.kind, d.alpha), eps)


def mixing_rate(kind: str, alpha2: float) -> float:
    """GIG rate-on-``lam`` parameter of the scale mixture for ``alpha^2``."""
    if kind == "sph":
        return 1.0 + alpha2
    if kind == "uph":
        return alpha2
    raise ValueError(f"no scale mixture with free alpha for kind {kind!r}")


def sample_sph_error(alpha: float, rng: RngStream, size=None, kind: str = "sph"):
    """Draw from the (scaled) pseudo-Huber error law via its two-stage mixture."""
    if not alpha > 0.0:
        raise ValueError("alpha must be > 0")
    alpha2 = alpha * alpha
    lam = sample_gig(mixing_rate(kind, alpha2), alpha2, 1.0, rng, size=size)
    z = rng.gen.standard_normal(np.shape(lam))
    out = np.sqrt(lam) * z
    return out if np.ndim(out) else float(out)
