"""Command-line surface: point evaluation, curve CSVs, sampling, verification.

Subcommands:

    eval          print one function value with 15 significant digits
    curve         write an (x, f(x)) CSV over a lo:hi:count grid
    sample        write a one-column CSV of reproducible draws
    verify-paper  run the built-in battery of distributional checks

Exit codes: 0 on success, 2 on a domain error (message to stderr), 3 when
verification fails.  CSV numbers use the shortest round-trip decimal form,
so files are byte-identical across runs for identical flags and seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import entropy, inequality, oracle, order_stats, reliability
from . import distribution as dist
from .distribution import Params
from .errors import DomainError
from .orders import common_scale_order_suite

# Grid endpoints are nudged into the open interval by this amount for
# functions that blow up or leave their domain at 0 or 1.
GRID_EPS = 1e-9

EVAL_FUNCTIONS = (
    "pdf", "logpdf", "cdf", "sf", "quantile", "hazard", "rhr", "mrl", "eit",
    "mode", "lcbound", "moment", "condmoment", "meandev", "lorenz",
    "bonferroni", "zenga", "renyi", "shannon", "song", "osmoment", "ssr",
)

# Curve functions of a support point x.
_X_CURVES = ("pdf", "logpdf", "cdf", "sf", "hazard", "rhr", "mrl", "eit", "zenga")
# Curve functions of a probability level (still emitted under an `x` header).
_U_CURVES = ("quantile", "lorenz", "bonferroni")

# Sides on which each curve function cannot be evaluated at the endpoint.
_CLAMP_LO = {"logpdf", "rhr", "zenga", "eit", "quantile", "lorenz", "bonferroni"}
_CLAMP_HI = {"hazard", "zenga"}


@dataclass(frozen=True)
class CurveSeries:
    """Sampled curve: function name, parameters, and (x, y) points."""

    name: str
    params: Params
    points: list[tuple[float, float]]


def _fmt(value: float) -> str:
    """Shortest decimal string that round-trips to the same double."""
    return repr(float(value))


def _require(args: argparse.Namespace, *names: str) -> list[float]:
    out = []
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            raise DomainError(f"--fn {args.fn} requires --{name}")
        out.append(v)
    return out


def _eval_value(args: argparse.Namespace) -> float:
    fn = args.fn
    if fn == "ssr":
        a1, b1, a2, b2 = _require(args, "alpha1", "beta1", "alpha2", "beta2")
        pair = reliability.StressStrengthPair(Params(a1, b1), Params(a2, b2))
        return reliability.stress_strength(pair)

    alpha, beta = _require(args, "alpha", "beta")
    p = Params(alpha, beta)
    if fn == "mode":
        return dist.mode(p)
    if fn == "lcbound":
        return dist.log_concavity_bound(p)
    if fn == "shannon":
        return entropy.shannon_entropy(p)
    if fn == "song":
        return entropy.song_measure(p)
    if fn == "renyi":
        (g,) = _require(args, "gamma")
        return entropy.renyi_entropy(p, g)
    if fn == "moment":
        (n,) = _require(args, "n")
        return dist.raw_moment(p, int(n))
    if fn == "condmoment":
        n, x = _require(args, "n", "x")
        return reliability.conditional_moment(p, int(n), x)
    if fn == "osmoment":
        n, j, k = _require(args, "n", "j", "k")
        return order_stats.order_stat_moment(p, int(n), int(j), int(k))
    if fn == "quantile":
        (u,) = _require(args, "u")
        return dist.quantile(p, u)
    if fn in ("lorenz", "bonferroni"):
        (u,) = _require(args, "u")
        op = inequality.lorenz if fn == "lorenz" else inequality.bonferroni
        return op(p, u)

    (x,) = _require(args, "x")
    point_ops = {
        "pdf": dist.pdf,
        "logpdf": dist.log_pdf,
        "cdf": dist.cdf,
        "sf": dist.sf,
        "hazard": reliability.hazard,
        "rhr": reliability.reversed_hazard,
        "mrl": reliability.mrl,
        "eit": reliability.eit,
        "meandev": inequality.mean_deviation_about,
        "zenga": inequality.zenga,
    }
    return point_ops[fn](p, x)


def _cmd_eval(args: argparse.Namespace) -> int:
    value = _eval_value(args)
    print(f"{value:.15g}")
    return 0


def _parse_grid(spec: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must be lo:hi:count, got {spec!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise DomainError(f"bad grid {spec!r}: {exc}") from exc
    if count < 1 or (count > 1 and not lo < hi):
        raise DomainError(f"grid needs count >= 1 and lo < hi, got {spec!r}")
    return lo, hi, count


def curve_series(fn: str, p: Params, grid: str) -> CurveSeries:
    """Evaluate one curve function over a lo:hi:count grid."""
    if fn not in _X_CURVES + _U_CURVES:
        raise DomainError(f"unknown curve function {fn!r}")
    lo, hi, count = _parse_grid(grid)
    if fn in _CLAMP_LO:
        lo = max(lo, GRID_EPS)
    if fn in _CLAMP_HI:
        hi = min(hi, 1.0 - GRID_EPS)

    ops = {
        "pdf": dist.pdf,
        "logpdf": dist.log_pdf,
        "cdf": dist.cdf,
        "sf": dist.sf,
        "hazard": reliability.hazard,
        "rhr": reliability.reversed_hazard,
        "mrl": reliability.mrl,
        "eit": reliability.eit,
        "zenga": inequality.zenga,
        "quantile": dist.quantile,
        "lorenz": inequality.lorenz,
        "bonferroni": inequality.bonferroni,
    }
    op = ops[fn]
    points = []
    for i in range(count):
        x = lo if count == 1 else lo + i * (hi - lo) / (count - 1)
        points.append((x, op(p, x)))
    return CurveSeries(fn, p, points)


def _cmd_curve(args: argparse.Namespace) -> int:
    series = curve_series(args.fn, Params(args.alpha, args.beta), args.grid)
    with open(args.out, "w", newline="\n") as handle:
        handle.write(f"x,{series.name}\n")
        for x, y in series.points:
            handle.write(f"{_fmt(x)},{_fmt(y)}\n")
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    draws = dist.sample(Params(args.alpha, args.beta), args.n, args.seed)
    with open(args.out, "w", newline="\n") as handle:
        handle.write("x\n")
        for x in draws:
            handle.write(f"{_fmt(x)}\n")
    return 0


def _verify_checks(tol: float):
    """Yield (name, passed, detail) for the verification battery."""
    p_shape = Params(0.25, 1.0)
    d2 = dist.log_pdf_second_derivative(p_shape, 0.5)
    yield (
        "log-concavity counterexample",
        abs(d2 - 4.0) <= 1e-12 and d2 > 0.0,
        f"d2 log f at (0.25, 1, 0.5) = {d2!r}, expected +4.0",
    )

    star = (3.0 * 1.0 / 2.0) ** 1.0
    m1 = dist.mode(Params(3.0, 1.0))
    m2 = dist.mode(Params(1.0, 1.0))
    yield (
        "mode capped at the support edge",
        star > 1.0 and m1 == 1.0 and m2 == 0.5,
        f"stationary point {star} -> mode {m1}; mode(1,1) = {m2}",
    )

    rhr_ok = True
    detail = "reversed hazard decreasing on grid"
    for params in (Params(0.25, 1.0), Params(1.0, 1.0), Params(2.0, 3.0)):
        xs = [i / 512 for i in range(1, 512)]
        vals = [reliability.reversed_hazard(params, x) for x in xs]
        if not all(b < a for a, b in zip(vals, vals[1:])):
            rhr_ok = False
            detail = f"violated at {params}"
            break
    yield ("reversed hazard strictly decreasing", rhr_ok, detail)

    norm_ok = True
    detail = "integral of the density over (0, 1) = 1"
    for params in (Params(0.5, 0.5), Params(1.0, 1.0), Params(2.0, 3.0)):
        q = oracle.integrate(lambda t, p=params: dist.pdf(p, t), 0.0, 1.0, rel_tol=1e-12)
        if abs(q.value - 1.0) > tol:
            norm_ok = False
            detail = f"off by {q.value - 1.0:.3e} at {params}"
            break
    yield ("density normalization vs quadrature", norm_ok, detail)

    mom_ok = True
    detail = "closed-form mean vs quadrature"
    for params in (Params(0.5, 2.0), Params(1.0, 1.0), Params(2.0, 0.5)):
        closed = dist.raw_moment(params, 1)
        q = oracle.integrate(
            lambda t, p=params: t * dist.pdf(p, t), 0.0, 1.0, rel_tol=1e-12
        )
        if abs(closed - q.value) > tol * abs(closed):
            mom_ok = False
            detail = f"mismatch {closed!r} vs {q.value!r} at {params}"
            break
    yield ("first moment vs quadrature", mom_ok, detail)

    rng = np.random.Generator(np.random.Philox(key=20240917))
    for trial in range(3):
        a1 = float(rng.uniform(0.2, 2.0))
        a2 = a1 * float(rng.uniform(1.3, 3.0))
        beta = float(rng.uniform(0.4, 3.0))
        reports = common_scale_order_suite(a1, a2, beta)
        bad = [r.kind for r in reports if not r.holds]
        yield (
            f"stochastic-order suite, seeded draw {trial + 1}",
            not bad,
            f"alpha {a1:.4f} < {a2:.4f}, beta {beta:.4f}"
            + (f"; failed: {bad}" if bad else "; all orders hold"),
        )


def _cmd_verify(args: argparse.Namespace) -> int:
    tol = float(os.environ.get("UG_TOL", "1e-9"))
    failures = 0
    for name, passed, detail in _verify_checks(tol):
        tag = "PASS" if passed else "FAIL"
        if not passed:
            failures += 1
        print(f"{tag}  {name}: {detail}")
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 3
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitgompertz",
        description="Unit-Gompertz distribution calculator and verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="print one function value")
    p_eval.add_argument("--fn", required=True, choices=EVAL_FUNCTIONS)
    p_eval.add_argument("--alpha", type=float)
    p_eval.add_argument("--beta", type=float)
    p_eval.add_argument("--x", type=float, help="support point in [0, 1]")
    p_eval.add_argument("--u", type=float, help="probability level in (0, 1]")
    p_eval.add_argument("--gamma", type=float, help="Renyi order")
    p_eval.add_argument("--n", type=int, help="moment order / sample size")
    p_eval.add_argument("--j", type=int, help="order-statistic rank")
    p_eval.add_argument("--k", type=int, help="order-statistic moment order")
    p_eval.add_argument("--alpha1", type=float, help="strength shape (ssr)")
    p_eval.add_argument("--beta1", type=float, help="strength scale (ssr)")
    p_eval.add_argument("--alpha2", type=float, help="stress shape (ssr)")
    p_eval.add_argument("--beta2", type=float, help="stress scale (ssr)")
    p_eval.set_defaults(run=_cmd_eval)

    p_curve = sub.add_parser("curve", help="write a CSV of f over a grid")
    p_curve.add_argument("--fn", required=True, choices=_X_CURVES + _U_CURVES)
    p_curve.add_argument("--alpha", type=float, required=True)
    p_curve.add_argument("--beta", type=float, required=True)
    p_curve.add_argument("--grid", required=True, help="lo:hi:count")
    p_curve.add_argument("--out", required=True)
    p_curve.set_defaults(run=_cmd_curve)

    p_sample = sub.add_parser("sample", help="write a CSV of reproducible draws")
    p_sample.add_argument("--alpha", type=float, required=True)
    p_sample.add_argument("--beta", type=float, required=True)
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--out", required=True)
    p_sample.set_defaults(run=_cmd_sample)

    p_verify = sub.add_parser(
        "verify-paper",
        help="run the reference battery: shape counterexample, mode cap, "
        "monotone reversed hazard, quadrature cross-checks, order suite",
    )
    p_verify.set_defaults(run=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
