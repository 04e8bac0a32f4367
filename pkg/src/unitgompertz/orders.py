"""Grid-level verification of stochastic orders between two unit-Gompertz laws.

Each checker evaluates the defining inequality of one order on an interior
lattice and reports the first violating point, so a `holds=True` result
means "certified on this grid", not a symbolic proof.  Ratio-type orders
(likelihood ratio, hazard, reversed hazard) are compared as log-differences,
which stay exact deep into the tails where the raw densities underflow.
Pointwise orders compare their defining quantities on the natural scale
with an absolute slack, so all checkers resolve differences at the same
double-precision granularity and the textbook implication chains cannot be
broken by one checker seeing sub-epsilon structure another cannot.

Implemented orders and their defining comparisons, for X against Y:

    st    F_X(t) >= F_Y(t)                      everywhere
    hr    sf_X(t) / sf_Y(t)                     decreasing
    rh    F_X(t) / F_Y(t)                       decreasing
    lr    f_X(t) / f_Y(t)                       decreasing
    mrl   mrl_X(t) <= mrl_Y(t)                  everywhere
    eit   eit_X(t) >= eit_Y(t)                  everywhere (note the >=)
    hmrl  harmonic mean of mrl_X up to t <= same for Y
    icx   integral of sf over (t, 1): X <= Y    everywhere
    icv   integral of cdf over (0, t): X >= Y   everywhere
    ttt   integral of sf over (0, q(p)): X <= Y on a p-lattice
    disp  quantile spread q_Y(u) - q_X(u)       nondecreasing

The integral-based orders use the identities int_t^1 sf = sf(t) * mrl(t)
and int_0^t cdf = cdf(t) * eit(t), so they reduce to closed forms.  Two
orders quantified over whole function classes (stochastic-variability and
star-shaped) admit no finite certificate and are deliberately absent.

With a common scale and alpha_X < alpha_Y, X precedes Y in the likelihood
ratio order, hence in every order implied by it; see `common_scale_order_suite`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import oracle
from .distribution import Params, log_cdf, log_pdf, quantile, sf
from .errors import DomainError
from .reliability import eit, mrl

ORDER_KINDS = ("st", "hr", "rh", "lr", "mrl", "hmrl", "eit", "icx", "icv", "disp", "ttt")

# Absolute slack on every grid comparison, absorbing float noise without
# hiding real violations.
MONOTONE_SLACK = 1e-10

# The harmonic-mean checker integrates 1/mrl numerically; the residual-life
# closed form itself carries ~1e-11 relative noise near t = 1, so this
# checker gets a looser tolerance and a matching comparison slack.
_HMRL_REL_TOL = 1e-9
_HMRL_SLACK = 1e-8


@dataclass(frozen=True)
class OrderReport:
    """Outcome of one grid check: verdict, first violation, bookkeeping."""

    kind: str
    holds: bool
    first_violation: tuple[float, float, float] | None
    grid_size: int
    skipped: int = 0

    def __post_init__(self) -> None:
        if not self.holds and self.first_violation is None:
            raise ValueError("a failed check must carry its first violation")


def _log_sf(p: Params, t: float) -> float:
    return math.log(sf(p, t))


def _pointwise(kind, ts, lhs_fn, rhs_fn, ge: bool) -> OrderReport:
    """lhs >= rhs (or <=) at every lattice point, within MONOTONE_SLACK."""
    skipped = 0
    for t in ts:
        lhs = lhs_fn(t)
        rhs = rhs_fn(t)
        if math.isnan(lhs) or math.isnan(rhs):
            skipped += 1
            continue
        bad = lhs < rhs - MONOTONE_SLACK if ge else lhs > rhs + MONOTONE_SLACK
        if bad:
            return OrderReport(kind, False, (t, lhs, rhs), len(ts), skipped)
    return OrderReport(kind, True, None, len(ts), skipped)


def _monotone(kind, ts, diff_fn, decreasing: bool) -> OrderReport:
    """diff_fn nonincreasing (or nondecreasing) along the lattice."""
    skipped = 0
    prev_d = None
    for t in ts:
        d = diff_fn(t)
        if not math.isfinite(d):
            skipped += 1
            continue
        if prev_d is not None:
            bad = d > prev_d + MONOTONE_SLACK if decreasing else d < prev_d - MONOTONE_SLACK
            if bad:
                return OrderReport(kind, False, (t, d, prev_d), len(ts), skipped)
        prev_d = d
    return OrderReport(kind, True, None, len(ts), skipped)


def _hmrl_report(x: Params, y: Params, ts) -> OrderReport:
    """Harmonic-mean residual life comparison via chained quadrature."""

    def cumulative(p: Params) -> list[float]:
        out = []
        acc = 0.0
        lo = 0.0
        for t in ts:
            acc += oracle.integrate(
                lambda u, p=p: 1.0 / mrl(p, u), lo, t, rel_tol=_HMRL_REL_TOL
            ).value
            out.append(acc)
            lo = t
        return out

    cum_x = cumulative(x)
    cum_y = cumulative(y)
    for t, cx, cy in zip(ts, cum_x, cum_y):
        hm_x = t / cx
        hm_y = t / cy
        if hm_x > hm_y + _HMRL_SLACK:
            return OrderReport("hmrl", False, (t, hm_x, hm_y), len(ts), 0)
    return OrderReport("hmrl", True, None, len(ts), 0)


def check_order(kind: str, x: Params, y: Params, grid_size: int = 128) -> OrderReport:
    """Check whether X precedes Y in the given order, on an interior lattice.

    The lattice is t_i = i / (grid_size + 1); quantile-based orders (disp,
    ttt) use the same lattice in probability space.  Lattice points where a
    defining ratio degenerates to 0/0 are skipped and counted.
    """
    if kind not in ORDER_KINDS:
        raise DomainError(f"unknown order kind {kind!r}; choose from {ORDER_KINDS}")
    if grid_size < 64:
        raise DomainError(f"grid_size must be at least 64, got {grid_size!r}")
    ts = [i / (grid_size + 1) for i in range(1, grid_size + 1)]

    if kind == "st":
        return _pointwise(
            kind,
            ts,
            lambda t: math.exp(log_cdf(x, t)),
            lambda t: math.exp(log_cdf(y, t)),
            ge=True,
        )
    if kind == "hr":
        return _monotone(kind, ts, lambda t: _log_sf(x, t) - _log_sf(y, t), decreasing=True)
    if kind == "rh":
        return _monotone(kind, ts, lambda t: log_cdf(x, t) - log_cdf(y, t), decreasing=True)
    if kind == "lr":
        return _monotone(kind, ts, lambda t: log_pdf(x, t) - log_pdf(y, t), decreasing=True)
    if kind == "mrl":
        return _pointwise(kind, ts, lambda t: mrl(x, t), lambda t: mrl(y, t), ge=False)
    if kind == "eit":
        return _pointwise(kind, ts, lambda t: eit(x, t), lambda t: eit(y, t), ge=True)
    if kind == "hmrl":
        return _hmrl_report(x, y, ts)
    if kind == "icx":
        return _pointwise(
            kind,
            ts,
            lambda t: sf(x, t) * mrl(x, t),
            lambda t: sf(y, t) * mrl(y, t),
            ge=False,
        )
    if kind == "icv":
        return _pointwise(
            kind,
            ts,
            lambda t: math.exp(log_cdf(x, t)) * eit(x, t),
            lambda t: math.exp(log_cdf(y, t)) * eit(y, t),
            ge=True,
        )
    if kind == "ttt":

        def ttt_value(p: Params, u: float) -> float:
            q = quantile(p, u)
            return q - u * eit(p, q)

        return _pointwise(
            kind, ts, lambda u: ttt_value(x, u), lambda u: ttt_value(y, u), ge=False
        )
    # disp: quantile difference must widen with u.
    return _monotone(
        kind, ts, lambda u: quantile(y, u) - quantile(x, u), decreasing=False
    )


SUITE_ORDER_KINDS = ("lr", "hr", "rh", "mrl", "eit", "st", "hmrl", "ttt", "icx", "icv")


def common_scale_order_suite(
    alpha1: float, alpha2: float, beta: float, grid_size: int = 128
) -> list[OrderReport]:
    """Run the full order battery for X = (alpha1, beta) vs Y = (alpha2, beta).

    Requires alpha1 < alpha2, the regime in which X precedes Y in the
    likelihood-ratio order and therefore in every weaker order checked here.
    Returns one report per order; all should hold.
    """
    if not alpha1 < alpha2:
        raise DomainError(
            f"suite requires alpha1 < alpha2, got {alpha1!r} >= {alpha2!r}"
        )
    x = Params(alpha1, beta)
    y = Params(alpha2, beta)
    return [check_order(kind, x, y, grid_size) for kind in SUITE_ORDER_KINDS]
