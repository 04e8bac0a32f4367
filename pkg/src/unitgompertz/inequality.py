"""First incomplete moment, mean deviations, and Lorenz/Bonferroni/Zenga curves.

The building block is m1(z) = integral of x f(x) over (0, z), the first
incomplete moment, with m1(1) = mean.  The mean deviation about any point
x0 reduces to

    delta(x0) = 2*x0*F(x0) - mean + 2*I1(x0) - x0,

where I1 is the tail moment from the reliability module.  The Lorenz curve
has the closed form L(p) = alpha^(1/beta) e^alpha Gamma(1 - 1/beta;
alpha/q^beta) / mean with q the p-quantile; it is finite for every beta > 0
(not only beta > 1) because the incomplete-gamma lower limit stays positive
on a bounded support.  Zenga's curve compares the conditional means below
and above x.
"""

from __future__ import annotations

import math

from .distribution import Params, _pow_neg_beta, cdf, raw_moment, sf
from .errors import DomainError
from .reliability import partial_expectation
from .specfun import upper_inc_gamma_scaled


def first_incomplete_moment(p: Params, z: float) -> float:
    """m1(z) = mean - I1(z) for z in (0, 1]; m1(1) is the mean."""
    if not 0.0 < z <= 1.0:
        raise DomainError(f"first incomplete moment needs z in (0, 1], got {z!r}")
    return raw_moment(p, 1) - partial_expectation(p, 1, z)


def mean_deviation_about(p: Params, x0: float) -> float:
    """E|X - x0| for an interior point x0."""
    if not 0.0 < x0 < 1.0:
        raise DomainError(f"mean deviation needs x0 in (0, 1), got {x0!r}")
    mean = raw_moment(p, 1)
    return 2.0 * x0 * cdf(p, x0) - mean + 2.0 * partial_expectation(p, 1, x0) - x0


def lorenz(p: Params, prob: float) -> float:
    """Lorenz curve L(p): share of the mean owned by the poorest `prob` mass.

    Uses w = alpha - ln(prob), the exact image of the quantile under
    alpha / q^beta, so L(1) = 1 to machine precision.
    """
    if not 0.0 < prob <= 1.0:
        raise DomainError(f"lorenz needs prob in (0, 1], got {prob!r}")
    s = 1.0 - 1.0 / p.beta
    w = p.alpha - math.log(prob)
    numerator = (
        p.alpha ** (1.0 / p.beta)
        * math.exp(p.alpha - w)
        * upper_inc_gamma_scaled(s, w)
    )
    return numerator / raw_moment(p, 1)


def bonferroni(p: Params, prob: float) -> float:
    """Bonferroni curve B(p) = L(p) / p."""
    return lorenz(p, prob) / prob


def zenga(p: Params, x: float) -> float:
    """Zenga curve Z(x) = 1 - (lower conditional mean / upper conditional mean).

    Z(x) = 1 - [Gamma(s; z) / (Gamma(s; alpha) - Gamma(s; z))] * sf(x)/cdf(x)
    with s = 1 - 1/beta and z = alpha / x^beta, rearranged through the
    scaled gamma so the cdf in the denominator cancels analytically.
    Endpoints are excluded: one of the conditional means degenerates there.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"zenga needs x in (0, 1), got {x!r}")
    s = 1.0 - 1.0 / p.beta
    z = p.alpha * _pow_neg_beta(x, p.beta)
    if not math.isfinite(z):
        return 1.0  # x so small that the lower conditional mean vanishes
    head = upper_inc_gamma_scaled(s, p.alpha)
    tail = math.exp(p.alpha - z) * upper_inc_gamma_scaled(s, z)
    # Gamma(s; z) * e^z * sf / (e^alpha [Gamma(s;alpha) - Gamma(s;z)]) with
    # cdf = e^(alpha - z) already folded in.
    return 1.0 - upper_inc_gamma_scaled(s, z) * sf(p, x) / (head - tail)
