"""Binary means, power means of order t, and the mean divergence measures."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._numeric import Link, fsum, link
from .prob import Distribution, check_same_size

CHAIN_RTOL = 1e-12


def _check_positive(a: float, b: float) -> None:
    if not (a > 0 and b > 0):
        raise ValueError(f"means need a, b > 0; got a={a!r}, b={b!r}")


def power_mean(t: float, a: float, b: float) -> float:
    """Mean of order ``t``; ``t`` may be ``math.inf`` or ``-math.inf``.

    Only ``t == 0`` exactly takes the geometric branch.
    """
    _check_positive(a, b)
    if t == math.inf:
        return max(a, b)
    if t == -math.inf:
        return min(a, b)
    if t == 0:
        return math.sqrt(a * b)
    # factor out the endpoint that keeps the inner power <= 1 so nothing overflows
    big, small = (max(a, b), min(a, b)) if t > 0 else (min(a, b), max(a, b))
    return big * ((1.0 + (small / big) ** t) / 2.0) ** (1.0 / t)


class MeanKind(enum.Enum):
    H = "H"
    G = "G"
    N1 = "N1"
    N2 = "N2"
    A = "A"


MEAN_ORDER = (MeanKind.H, MeanKind.G, MeanKind.N1, MeanKind.N2, MeanKind.A)


def _mean(kind: MeanKind, a, b):
    if kind is MeanKind.H:
        return 2.0 * a * b / (a + b)
    if kind is MeanKind.G:
        return np.sqrt(a * b)
    if kind is MeanKind.N1:
        return ((np.sqrt(a) + np.sqrt(b)) / 2.0) ** 2
    if kind is MeanKind.N2:
        return (np.sqrt(a) + np.sqrt(b)) / 2.0 * np.sqrt((a + b) / 2.0)
    return (a + b) / 2.0


def binary_mean(kind: MeanKind, a: float, b: float) -> float:
    _check_positive(a, b)
    return float(_mean(kind, a, b))


@dataclass(frozen=True)
class MeanChain:
    values: dict[str, float]
    links: tuple[Link, ...]

    @property
    def ordered(self) -> bool:
        return all(lk.ok for lk in self.links)


def mean_chain(a: float, b: float) -> MeanChain:
    """H <= G <= N1 <= N2 <= A at (a, b), links checked at relative 1e-12."""
    vals = {k.value: binary_mean(k, a, b) for k in MEAN_ORDER}
    names = list(vals)
    links = tuple(
        link(f"{lo} <= {hi}", vals[lo], vals[hi], atol=0.0, rtol=CHAIN_RTOL)
        for lo, hi in zip(names, names[1:])
    )
    return MeanChain(vals, links)


def mean_sum(kind: MeanKind, P: Distribution, Q: Distribution) -> float:
    """``sum_i kind(p_i, q_i)``; the A sum is exactly 1."""
    check_same_size(P, Q)
    return fsum(_mean(kind, P.array, Q.array))


class MeanDivergence(enum.Enum):
    AG = "m-ag"
    AH = "m-ah"
    AN2 = "m-an2"
    N2G = "m-n2g"
    N2N1 = "m-n2n1"
    N1G = "m-n1g"
    AN1 = "m-an1"


def mean_divergence(kind: MeanDivergence, P: Distribution, Q: Distribution) -> float:
    check_same_size(P, Q)
    p, q = P.array, Q.array
    K = MeanKind
    if kind is MeanDivergence.AG:
        return 1.0 - fsum(_mean(K.G, p, q))
    if kind is MeanDivergence.AH:
        return 1.0 - fsum(_mean(K.H, p, q))
    if kind is MeanDivergence.AN2:
        return 1.0 - fsum(_mean(K.N2, p, q))
    if kind is MeanDivergence.AN1:
        return 1.0 - fsum(_mean(K.N1, p, q))
    if kind is MeanDivergence.N2G:
        return fsum(_mean(K.N2, p, q) - _mean(K.G, p, q))
    if kind is MeanDivergence.N2N1:
        return fsum(_mean(K.N2, p, q) - _mean(K.N1, p, q))
    return fsum(_mean(K.N1, p, q) - _mean(K.G, p, q))
