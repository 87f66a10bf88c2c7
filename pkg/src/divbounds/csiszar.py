"""Csiszar f-divergences, their bound functionals, and closed-form named divergences.

All logarithms are natural.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._numeric import SandwichReport, fsum, le_with_tol, sandwich
from .generators import Generator
from .means import MeanDivergence, mean_divergence
from .prob import Distribution, check_same_size, ratio_bounds


def csiszar_divergence(g: Generator, P: Distribution, Q: Distribution) -> float:
    check_same_size(P, Q)
    q = Q.array
    return fsum(q * g.value(P.array / q))


@dataclass(frozen=True)
class DivergenceBounds:
    c: float
    e: float
    a: float
    b: float
    r: float
    R: float
    chain20_ok: bool
    chain21_ok: bool


def _e_term(g: Generator, P: Distribution, Q: Distribution) -> float:
    p, q = P.array, Q.array
    return fsum((p - q) * g.d1(p / q))


def _a_term(g: Generator, r: float, R: float) -> float:
    if r == R:
        return 0.0
    return 0.25 * (R - r) * (g.d1(R) - g.d1(r))


def _b_term(g: Generator, r: float, R: float) -> float:
    if r == R:
        return 0.0
    return ((R - 1.0) * g.value(r) + (1.0 - r) * g.value(R)) / (R - r)


def divergence_bounds(g: Generator, P: Distribution, Q: Distribution) -> DivergenceBounds:
    """C_f with its gradient bound E, its ratio-range bound A and its chord bound B.

    ``g`` must be normalized (``g(1) == 0``).
    """
    if not g.normalized:
        raise ValueError(f"generator {g.name} is not normalized: f(1) = {g.value(1.0)!r}")
    rb = ratio_bounds(P, Q)
    c = csiszar_divergence(g, P, Q)
    e = _e_term(g, P, Q)
    a = _a_term(g, rb.r, rb.R)
    b = _b_term(g, rb.r, rb.R)
    chain20 = le_with_tol(0.0, c) and le_with_tol(c, e) and le_with_tol(e, a)
    chain21 = le_with_tol(0.0, c) and le_with_tol(c, b) and le_with_tol(b, a)
    return DivergenceBounds(c, e, a, b, rb.r, rb.R, chain20, chain21)


def compare_divergences(
    g1: Generator, g2: Generator, P: Distribution, Q: Distribution, alpha: float, beta: float
) -> SandwichReport:
    """Transfer ``alpha <= g1''/g2'' <= beta`` on ``[r, R]`` to C, E-C, A-C and B-C."""
    if beta < alpha:
        raise ValueError(f"beta={beta} < alpha={alpha}")
    b1, b2 = divergence_bounds(g1, P, Q), divergence_bounds(g2, P, Q)
    links = [
        *sandwich("C", b1.c, b2.c, alpha, beta),
        *sandwich("E-C", b1.e - b1.c, b2.e - b2.c, alpha, beta),
        *sandwich("A-C", b1.a - b1.c, b2.a - b2.c, alpha, beta),
        *sandwich("B-C", b1.b - b1.c, b2.b - b2.c, alpha, beta),
    ]
    values = {"alpha": alpha, "beta": beta, "r": b1.r, "R": b1.R}
    for tag, bd in (("1", b1), ("2", b2)):
        values.update({f"C{tag}": bd.c, f"E{tag}": bd.e, f"A{tag}": bd.a, f"B{tag}": bd.b})
    return SandwichReport(tuple(links), values)


def _kl(p: np.ndarray, q: np.ndarray) -> float:
    return fsum(p * np.log(p / q))


class NamedDivergence(enum.Enum):
    KL = "kl"
    KL_REV = "klrev"
    J = "j"
    I = "i"  # noqa: E741
    T = "t"
    DELTA = "delta"
    HELLINGER = "hellinger"


def named_divergence(kind: NamedDivergence, P: Distribution, Q: Distribution) -> float:
    check_same_size(P, Q)
    p, q = P.array, Q.array
    if kind is NamedDivergence.KL:
        return _kl(p, q)
    if kind is NamedDivergence.KL_REV:
        return _kl(q, p)
    if kind is NamedDivergence.J:
        return _kl(p, q) + _kl(q, p)
    if kind is NamedDivergence.I:
        m = (p + q) / 2.0
        return 0.5 * (_kl(p, m) + _kl(q, m))
    if kind is NamedDivergence.T:
        a = (p + q) / 2.0
        return fsum(a * np.log(a / np.sqrt(p * q)))
    if kind is NamedDivergence.DELTA:
        return fsum((p - q) ** 2 / (p + q))
    # 1 - sum sqrt(pq), written as a sum of squares to avoid cancellation
    return 0.5 * fsum((np.sqrt(p) - np.sqrt(q)) ** 2)


def shannon_entropy(P: Distribution) -> float:
    p = P.array
    return -fsum(p * np.log(p))


def phi_s(s: float, P: Distribution, Q: Distribution) -> float:
    """Cressie-Read relative divergence; s=1 is KL(P||Q), s=0 is KL(Q||P)."""
    check_same_size(P, Q)
    p, q = P.array, Q.array
    if s == 0:
        return _kl(q, p)
    if s == 1:
        return _kl(p, q)
    return (fsum(p**s * q ** (1.0 - s)) - 1.0) / (s * (s - 1.0))


def w_s(s: float, P: Distribution, Q: Distribution) -> float:
    """Unified Jensen-type divergence; s=1 is the information radius I."""
    check_same_size(P, Q)
    p, q = P.array, Q.array
    if s == 0:
        return fsum(np.log((p + q) / (2.0 * np.sqrt(p * q))))
    if s == 1:
        return named_divergence(NamedDivergence.I, P, Q)
    m = (p + q) / 2.0
    return fsum((p**s + q**s) / 2.0 - m**s) / (s * (s - 1.0))


def v_s(s: float, P: Distribution, Q: Distribution) -> float:
    """Unified J-type divergence; s=1 is Jeffreys' J."""
    check_same_size(P, Q)
    p, q = P.array, Q.array
    if s == 0:
        return fsum((p - q) ** 2 / (p * q))
    if s == 1:
        return fsum((p - q) * np.log(p / q))
    return fsum((p - q) * (p ** (s - 1.0) - q ** (s - 1.0))) / (s - 1.0)


def phi_bound_terms(s: float, P: Distribution, Q: Distribution) -> tuple[float, float, float]:
    """Closed forms ``(E, A, B)`` of the bound functionals for the Cressie-Read generator."""
    check_same_size(P, Q)
    p, q = P.array, Q.array
    rb = ratio_bounds(P, Q)
    r, R = rb.r, rb.R
    if s == 1:
        e = fsum((p - q) * np.log(p / q))
        a = 0.25 * (R - r) * math.log(R / r)
    else:
        e = fsum((p - q) * (p / q) ** (s - 1.0)) / (s - 1.0)
        a = (R - r) * (R ** (s - 1.0) - r ** (s - 1.0)) / (4.0 * (s - 1.0))
    if r == R:
        return e, 0.0, 0.0
    if s == 0:
        b = ((R - 1.0) * math.log(1.0 / r) + (1.0 - r) * math.log(1.0 / R)) / (R - r)
    elif s == 1:
        b = ((R - 1.0) * r * math.log(r) + (1.0 - r) * R * math.log(R)) / (R - r)
    else:
        b = ((R - 1.0) * (r**s - 1.0) + (1.0 - r) * (R**s - 1.0)) / ((R - r) * s * (s - 1.0))
    return e, a, b


Measure = Callable[[Distribution, Distribution], float]

_PARAMETRIC = {"phi": phi_s, "w": w_s, "v": v_s}
_MEAN_MEASURES = (
    MeanDivergence.AG, MeanDivergence.AH, MeanDivergence.AN2, MeanDivergence.N2G, MeanDivergence.N2N1,
)

MEASURE_NAMES = tuple(k.value for k in NamedDivergence) + ("phi:<s>", "w:<s>", "v:<s>") + tuple(
    k.value for k in _MEAN_MEASURES
)


def get_measure(name: str) -> Measure:
    """Resolve a measure name such as ``kl``, ``phi:2`` or ``m-n2n1``."""
    key = name.strip().lower()
    head, sep, tail = key.partition(":")
    if sep and head in _PARAMETRIC:
        try:
            s = float(tail)
        except ValueError:
            raise ValueError(f"bad parameter in measure {name!r}") from None
        if not math.isfinite(s):
            raise ValueError(f"bad parameter in measure {name!r}")
        fn = _PARAMETRIC[head]
        return lambda P, Q: fn(s, P, Q)
    for kind in NamedDivergence:
        if kind.value == key:
            return lambda P, Q: named_divergence(kind, P, Q)
    for kind in _MEAN_MEASURES:
        if kind.value == key:
            return lambda P, Q: mean_divergence(kind, P, Q)
    raise ValueError(f"unknown measure {name!r}; available: {', '.join(MEASURE_NAMES)}")
