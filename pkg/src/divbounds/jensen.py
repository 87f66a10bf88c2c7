"""Jensen difference F, its upper bounds L and Z, and second-derivative comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._numeric import DomainError, SandwichReport, fsum, golden_section_max, le_with_tol, sandwich
from .generators import Generator
from .prob import Distribution


@dataclass(frozen=True)
class WeightedPoints:
    weights: Distribution
    x: tuple[float, ...]
    eta1: float
    eta2: float

    @property
    def lam(self) -> np.ndarray:
        return self.weights.array

    @property
    def points(self) -> np.ndarray:
        return np.asarray(self.x, dtype=float)


def weighted_points(
    weights: Distribution, x: Sequence[float], eta1: float | None = None, eta2: float | None = None
) -> WeightedPoints:
    """Build ``WeightedPoints``; the interval defaults to ``[min x, max x]``."""
    xs = tuple(float(v) for v in x)
    if len(xs) != weights.n:
        raise ValueError(f"length mismatch: {weights.n} weights, {len(xs)} points")
    lo, hi = min(xs), max(xs)
    eta1 = lo if eta1 is None else float(eta1)
    eta2 = hi if eta2 is None else float(eta2)
    if not (eta1 <= lo and hi <= eta2):
        raise ValueError(f"points span [{lo}, {hi}], outside [eta1, eta2] = [{eta1}, {eta2}]")
    return WeightedPoints(weights, xs, eta1, eta2)


def arithmetic_mean(wp: WeightedPoints) -> float:
    return fsum(wp.lam * wp.points)


def geometric_mean(wp: WeightedPoints) -> float:
    return math.exp(fsum(wp.lam * np.log(wp.points)))


def ag_ratio_bound(wp: WeightedPoints) -> float:
    """Upper bound on A/G from the log generator: exp((eta2 - eta1)^2 / (4 eta1 eta2))."""
    expo = (wp.eta2 - wp.eta1) ** 2 / (4.0 * wp.eta1 * wp.eta2)
    return math.exp(expo) if expo < 709.0 else math.inf


def jensen_difference(g: Generator, wp: WeightedPoints) -> float:
    lam, x = wp.lam, wp.points
    return fsum(lam * g.value(x)) - g.value(fsum(lam * x))


def l_bound(g: Generator, wp: WeightedPoints) -> float:
    lam, x = wp.lam, wp.points
    d1 = g.d1(x)
    return fsum(lam * x * d1) - fsum(lam * x) * fsum(lam * d1)


def z_bound(g: Generator, eta1: float, eta2: float) -> float:
    if eta1 == eta2:
        return 0.0
    return 0.25 * (eta2 - eta1) * (g.d1(eta2) - g.d1(eta1))


@dataclass(frozen=True)
class JensenReport:
    f_value: float
    l_value: float
    z_value: float
    chain_ok: bool


def jensen_bounds(g: Generator, wp: WeightedPoints) -> JensenReport:
    f = jensen_difference(g, wp)
    l = l_bound(g, wp)
    z = z_bound(g, wp.eta1, wp.eta2)
    ok = le_with_tol(0.0, f) and le_with_tol(f, l) and le_with_tol(l, z)
    return JensenReport(f, l, z, ok)


def two_point_gap(g: Generator, a: float, b: float, v: float, w: float) -> tuple[float, float, float]:
    """Two-point Jensen gap with weights ``v, w`` and its two upper bounds.

    Returns ``(gap, spread bound, endpoint bound)``, each nonnegative and ordered.
    """
    if v <= 0 or w <= 0:
        raise ValueError(f"weights must be positive, got v={v}, w={w}")
    if a == b:
        g.value(a)  # domain check
        return 0.0, 0.0, 0.0
    lv, lw = v / (v + w), w / (v + w)
    m = lv * a + lw * b
    fa, fb = g.value(a), g.value(b)
    da, db = g.d1(a), g.d1(b)
    lower = (lv * fa + lw * fb) - g.value(m)
    mid = (lv * a * da + lw * b * db) - m * (lv * da + lw * db)
    upper = 0.25 * (b - a) * (db - da)
    return lower, mid, upper


def compare_generators(
    g1: Generator, g2: Generator, wp: WeightedPoints, alpha: float, beta: float
) -> SandwichReport:
    """Check the sandwiches transferred from ``alpha <= g1''/g2'' <= beta``.

    The ratio bounds must hold on ``[wp.eta1, wp.eta2]``.
    """
    if beta < alpha:
        raise ValueError(f"beta={beta} < alpha={alpha}")
    r1, r2 = jensen_bounds(g1, wp), jensen_bounds(g2, wp)
    links = [
        *sandwich("F", r1.f_value, r2.f_value, alpha, beta),
        *sandwich("L-F", r1.l_value - r1.f_value, r2.l_value - r2.f_value, alpha, beta),
        *sandwich("Z-F", r1.z_value - r1.f_value, r2.z_value - r2.f_value, alpha, beta),
    ]
    values = {
        "alpha": alpha, "beta": beta,
        "F1": r1.f_value, "L1": r1.l_value, "Z1": r1.z_value,
        "F2": r2.f_value, "L2": r2.l_value, "Z2": r2.z_value,
    }
    return SandwichReport(tuple(links), values)


@dataclass(frozen=True)
class RatioExtrema:
    alpha: float
    beta: float
    arg_alpha: float
    arg_beta: float


REFINE_TOL = 1e-9


def second_ratio_extrema(
    g1: Generator, g2: Generator, interval: tuple[float, float], grid_points: int = 1025
) -> RatioExtrema:
    """Infimum and supremum of ``g1'' / g2''`` over ``interval``.

    Scans a log-spaced grid and refines every interior local extremum by
    golden-section search in log x to a relative width of 1e-9.
    """
    lo, hi = interval
    if not (0.0 < lo < hi < math.inf):
        raise DomainError(f"interval {interval} must satisfy 0 < lo < hi < inf")
    if grid_points < 64:
        raise ValueError("grid_points must be >= 64")
    u = np.linspace(math.log(lo), math.log(hi), grid_points)
    x = np.exp(u)
    x[0], x[-1] = lo, hi
    den = g2.d2(x)
    bad = np.flatnonzero(~(den > 0.0))
    if bad.size:
        raise ValueError(f"{g2.name}'' is not positive at x={x[bad[0]]!r}; ratio undefined")
    v = g1.d2(x) / den

    def ratio_at(uu: float) -> float:
        xx = math.exp(uu)
        return g1.d2(xx) / g2.d2(xx)

    def extremum(sign: float) -> tuple[float, float]:
        s = sign * v
        best_x, best = (lo, s[0]) if s[0] >= s[-1] else (hi, s[-1])
        peaks = np.flatnonzero((s[1:-1] > s[:-2]) & (s[1:-1] >= s[2:])) + 1
        for k in peaks:
            uk, sk = golden_section_max(lambda t: sign * ratio_at(t), u[k - 1], u[k + 1], REFINE_TOL)
            if sk > best:
                best_x, best = math.exp(uk), sk
        return best_x, sign * best

    arg_beta, beta = extremum(1.0)
    arg_alpha, alpha = extremum(-1.0)
    return RatioExtrema(float(alpha), float(beta), float(arg_alpha), float(arg_beta))
