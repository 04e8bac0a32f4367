"""Renyi and Shannon entropies and the variance-of-log-density shape measure.

For order g > 0, g != 1, the Renyi entropy is (1 - g)^-1 * ln of the
integral of f^g, which for this law collapses to incomplete-gamma terms:

    I(g) = (1-g)^-1 * [ alpha*g + ((1-g)/beta) ln alpha - (1-g) ln beta
                        + (1/beta)(1 - g(1+beta)) ln g
                        + ln Gamma(g + (g-1)/beta; alpha*g) ]

The Shannon entropy is the g -> 1 limit, 1 - ln(alpha*beta)
- (1+beta) e^alpha Gamma(0; alpha) / beta.  The shape measure returned by
`song_measure` is -2 times the derivative of the Renyi entropy at g = 1,
which equals Var[ln f(X)]; the closed form needs the tail integral of
e^(-t) (ln t)^2.
"""

from __future__ import annotations

import math

from .distribution import Params
from .errors import DomainError
from .specfun import _log_sq_tail_scaled, upper_inc_gamma_scaled

# Orders this close to 1 are rejected; use shannon_entropy instead.
RENYI_ORDER_GAP = 1e-12


def renyi_entropy(p: Params, gamma: float) -> float:
    """Renyi entropy of order gamma (gamma > 0, gamma != 1).

    gamma = 1 is rejected rather than silently limited; the limit is the
    Shannon entropy and has its own function.
    """
    if not (math.isfinite(gamma) and gamma > 0.0):
        raise DomainError(f"Renyi order must be positive, got {gamma!r}")
    if abs(gamma - 1.0) <= RENYI_ORDER_GAP:
        raise DomainError("Renyi order 1 is the Shannon entropy; call shannon_entropy")
    a, b = p.alpha, p.beta
    s = gamma + (gamma - 1.0) / b
    # ln Gamma(s; a*g) = ln(scaled) - a*g, and the -a*g cancels the alpha*g
    # term of the closed form exactly.
    log_gamma_term = math.log(upper_inc_gamma_scaled(s, a * gamma))
    bracket = (
        (1.0 - gamma) / b * math.log(a)
        - (1.0 - gamma) * math.log(b)
        + (1.0 - gamma * (1.0 + b)) / b * math.log(gamma)
        + log_gamma_term
    )
    return bracket / (1.0 - gamma)


def shannon_entropy(p: Params) -> float:
    """Shannon entropy E[-ln f(X)] in closed form."""
    a, b = p.alpha, p.beta
    return 1.0 - math.log(a * b) - (1.0 + b) / b * upper_inc_gamma_scaled(0.0, a)


def song_measure(p: Params) -> float:
    """Shape measure -2 * d/dg Renyi(g) at g = 1, equal to Var[ln f(X)].

    Plays the role kurtosis plays for tail-weight comparisons, and is
    invariant under location/scale changes.  Always nonnegative.
    """
    a, b = p.alpha, p.beta
    c = 1.0 + 1.0 / b
    g0 = upper_inc_gamma_scaled(0.0, a)  # e^alpha Gamma(0; alpha)
    k = _log_sq_tail_scaled(a)  # e^alpha * tail integral of e^-t (ln t)^2
    derivative = (b + 2.0) / (2.0 * b) - 0.5 * (
        a * (a - 2.0 * c * math.log(a))
        - (c * (math.log(a) + g0) - a) ** 2
        + c * c * k
    )
    return -2.0 * derivative
