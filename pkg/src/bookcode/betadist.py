"""Mode-parameterized beta distribution over anchored word intervals.

Candidate words between two anchors split [0, 1] into equal intervals; the
i-th word receives the beta mass on its interval.  The distribution is
parameterized by its mode m and a sharpness beta; the standard alpha is
derived as (m*beta - 2m + 1) / (1 - m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

M_EPS = 1e-3  # clamp keeps the derived alpha away from the 1/(1-m) singularity
_CF_TOL = 1e-12
_CF_MAX_ITER = 500


@dataclass(frozen=True, slots=True)
class BetaParams:
    """Mode m (clamped to [M_EPS, 1-M_EPS]) and sharpness beta (>= 1)."""

    m: float
    beta: float = 5.0

    def __post_init__(self):
        if not math.isfinite(self.m):
            raise ValueError(f"mode must be finite, got {self.m}")
        if not self.beta >= 1.0:
            raise ValueError(f"beta must be >= 1, got {self.beta}")
        object.__setattr__(self, "m", min(max(self.m, M_EPS), 1.0 - M_EPS))

    @property
    def alpha(self) -> float:
        m = self.m
        return (m * self.beta - 2.0 * m + 1.0) / (1.0 - m)


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (Lentz's method)."""
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for i in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * i
        aa = i * (b - i) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + i) * (qab + i) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_TOL:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction failed to converge (a={a}, b={b}, x={x})")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b), the CDF of Beta(a, b) at x."""
    if a <= 0 or b <= 0:
        raise ValueError(f"shape parameters must be positive, got a={a}, b={b}")
    if x <= 0.0:
        if x < 0.0:
            raise ValueError(f"x must be in [0, 1], got {x}")
        return 0.0
    if x >= 1.0:
        if x > 1.0:
            raise ValueError(f"x must be in [0, 1], got {x}")
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # The continued fraction converges fast for x below the distribution mean.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def beta_cdf(params: BetaParams, x: float) -> float:
    return regularized_incomplete_beta(params.alpha, params.beta, x)


def beta_interval_prob(params: BetaParams, M: int, i: int) -> float:
    """Probability mass on interval i of M equal divisions of [0, 1].

    Equals the beta CDF difference across [(i-1)/M, i/M].  May underflow to
    exactly 0.0 in the far tail; callers that need finite log-probabilities
    must floor the result.
    """
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if not 1 <= i <= M:
        raise ValueError(f"i must be in 1..{M}, got {i}")
    hi = beta_cdf(params, i / M)
    lo = beta_cdf(params, (i - 1) / M)
    return max(hi - lo, 0.0)


def beta_interval_probs(params: BetaParams, M: int) -> list[float]:
    """All M interval masses; one CDF evaluation per edge."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    edges = [beta_cdf(params, i / M) for i in range(M + 1)]
    return [max(edges[i + 1] - edges[i], 0.0) for i in range(M)]
