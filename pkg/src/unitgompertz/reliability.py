"""Hazard/reversed-hazard rates, residual and inactivity times, stress-strength.

Everything here reduces to the tail integral

    I_n(t) = integral of y^n f(y) over (t, 1)
           = alpha^(n/beta) * e^alpha * [Gamma(1 - n/beta; alpha)
                                         - Gamma(1 - n/beta; alpha / t^beta)]

evaluated through the scaled incomplete gamma so the e^alpha factor never
overflows.  The reversed hazard r(x) = alpha*beta / x^(1+beta) is strictly
decreasing and the inactivity time is increasing for every parameter choice
(the cdf is log-concave); the plain hazard rises to +inf at x = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import oracle
from .distribution import Params, _as_count, _pow_neg_beta, pdf, raw_moment, sf
from .errors import DomainError
from .specfun import upper_inc_gamma_scaled

# Relative tolerance for the stress-strength quadrature when the two scale
# parameters differ and no closed form exists.
STRESS_STRENGTH_REL_TOL = 1e-9


@dataclass(frozen=True)
class StressStrengthPair:
    """Strength X and stress Y, each a validated unit-Gompertz Params."""

    strength: Params
    stress: Params


def hazard(p: Params, x: float) -> float:
    """Hazard rate f(x) / (1 - F(x)) on [0, 1].

    Tends to 0 as x -> 0 and to +inf as x -> 1; x = 1 returns math.inf
    rather than raising, matching the limit.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"hazard needs x in [0, 1], got {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return math.inf
    return pdf(p, x) / sf(p, x)


def reversed_hazard(p: Params, x: float) -> float:
    """Reversed hazard rate f(x) / F(x) = alpha * beta / x^(1 + beta)."""
    if not 0.0 < x <= 1.0:
        raise DomainError(f"reversed hazard needs x in (0, 1], got {x!r}")
    t = math.log(p.alpha * p.beta) - (1.0 + p.beta) * math.log(x)
    return math.exp(t) if t <= 709.0 else math.inf


def partial_expectation(p: Params, n: int, t: float) -> float:
    """Tail moment integral of y^n f(y) over (t, 1).

    Accepts t in [0, 1]: t = 0 gives the full raw moment and t = 1 gives 0,
    both as exact continuous extensions of the closed form.
    """
    n = _as_count(n, 1, "moment order")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"partial expectation needs t in [0, 1], got {t!r}")
    if t == 0.0:
        return raw_moment(p, n)
    if t == 1.0:
        return 0.0
    s = 1.0 - n / p.beta
    z = p.alpha * _pow_neg_beta(t, p.beta)
    head = upper_inc_gamma_scaled(s, p.alpha)
    if not math.isfinite(z) or p.alpha - z < -745.0:
        tail = 0.0
    else:
        tail = math.exp(p.alpha - z) * upper_inc_gamma_scaled(s, z)
    return p.alpha ** (n / p.beta) * (head - tail)


def conditional_moment(p: Params, n: int, x: float) -> float:
    """E[X^n | X > x] for x in [0, 1); the conditioning event dies at x = 1."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"conditional moment needs x in [0, 1), got {x!r}")
    if x == 0.0:
        return raw_moment(p, n)
    return partial_expectation(p, n, x) / sf(p, x)


def mrl(p: Params, t: float) -> float:
    """Mean residual life E[X - t | X > t] on [0, 1].

    mrl(0) is the mean; mrl(1) is defined as 0, the continuous limit as the
    remaining support shrinks to nothing.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"mrl needs t in [0, 1], got {t!r}")
    if t == 0.0:
        return raw_moment(p, 1)
    if t == 1.0:
        return 0.0
    return partial_expectation(p, 1, t) / sf(p, t) - t


def eit(p: Params, x: float) -> float:
    """Expected inactivity time E[x - X | X <= x] for x in (0, 1].

    Closed form (alpha^(1/beta) / beta) * e^z * Gamma(-1/beta; z) with
    z = alpha / x^beta, evaluated in scaled form; eit(1) equals 1 - mean.
    """
    if not 0.0 < x <= 1.0:
        raise DomainError(f"eit needs x in (0, 1], got {x!r}")
    z = p.alpha * _pow_neg_beta(x, p.beta)
    if not math.isfinite(z):
        return 0.0
    scaled = upper_inc_gamma_scaled(-1.0 / p.beta, z)
    return p.alpha ** (1.0 / p.beta) / p.beta * scaled


def stress_strength(pair: StressStrengthPair) -> float:
    """R = P(stress < strength) for independent unit-Gompertz X and Y.

    With a common scale the answer is exactly alpha_X / (alpha_X + alpha_Y);
    otherwise the defining integral is evaluated adaptively with the
    integrand assembled in log space (it decays double-exponentially at 0).
    """
    px, py = pair.strength, pair.stress
    if px.beta == py.beta:
        return px.alpha / (px.alpha + py.alpha)

    log_c = math.log(px.alpha * px.beta) + px.alpha + py.alpha

    def integrand(x: float) -> float:
        t = (
            log_c
            - (1.0 + px.beta) * math.log(x)
            - px.alpha * _pow_neg_beta(x, px.beta)
            - py.alpha * _pow_neg_beta(x, py.beta)
        )
        return math.exp(t) if t > -745.0 else 0.0

    return oracle.integrate(integrand, 0.0, 1.0, rel_tol=STRESS_STRENGTH_REL_TOL).value
