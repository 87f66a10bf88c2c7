"""Convex generator functions on (0, inf) with analytic first and second derivatives.

Every generator maps scalars or numpy arrays. The mean-divergence generators
satisfy ``q * f(p / q) = M(p, q) - m(p, q)`` for the corresponding pair of
binary means, so their f-divergence reproduces the closed-form measures in
:mod:`divbounds.means`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from ._numeric import DomainError

NORMALIZED_ATOL = 1e-14
FD_STEP = 1e-6
SELFCHECK_ATOL = 1e-6
SELFCHECK_RTOL = 1e-6
CONVEXITY_ATOL = 1e-12

Map = Callable[[np.ndarray], np.ndarray]


def _check_domain(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0.0):
        bad = arr[~(arr > 0.0)] if arr.ndim else arr
        raise DomainError(f"generators are defined on (0, inf); got {np.ravel(bad)[0]!r}")
    return arr


def _guarded(fn: Map) -> Map:
    def wrapped(x):
        arr = _check_domain(x)
        out = fn(arr)
        return float(out) if arr.ndim == 0 else out

    wrapped.__wrapped__ = fn
    return wrapped


@dataclass(frozen=True)
class Generator:
    name: str
    value: Map
    d1: Map
    d2: Map
    convex_domain: tuple[float, float] = (0.0, math.inf)

    def __call__(self, x):
        return self.value(x)

    @cached_property
    def normalized(self) -> bool:
        return abs(self.value(1.0)) <= NORMALIZED_ATOL


class Kind(enum.Enum):
    FS = "fs"
    PHI = "phi"
    AH = "ah"
    AG = "ag"
    N2N1 = "n2n1"
    N2G = "n2g"
    AN2 = "an2"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: Kind
    s: float | None = None
    # CUSTOM only
    name: str | None = None
    value: Map | None = None
    d1: Map | None = None
    d2: Map | None = None

    def __post_init__(self):
        if self.kind in (Kind.FS, Kind.PHI):
            if self.s is None or not math.isfinite(self.s):
                raise ValueError(f"{self.kind.value} needs a finite parameter s")
            if self.kind is Kind.FS and self.s > 1:
                raise ValueError(f"fs:{self.s:g} is not convex on (0, inf); need s <= 1")
        if self.kind is Kind.CUSTOM and None in (self.value, self.d1, self.d2):
            raise ValueError("a custom generator needs value, d1 and d2 maps")


def _powm1(x, s):
    # x**s - 1 without cancellation for small s
    return np.expm1(s * np.log(x))


def _fs(s: float):
    if s == 0:
        return (lambda x: -np.log(x), lambda x: -1.0 / x, lambda x: 1.0 / (x * x))
    return (
        lambda x: -_powm1(x, s) / s,
        lambda x: -(x ** (s - 1.0)),
        lambda x: (1.0 - s) * x ** (s - 2.0),
    )


def _phi(s: float):
    if s == 0:
        return (lambda x: x - 1.0 - np.log(x), lambda x: 1.0 - 1.0 / x, lambda x: 1.0 / (x * x))
    if s == 1:
        return (lambda x: 1.0 - x + x * np.log(x), np.log, lambda x: 1.0 / x)
    c = 1.0 / (s * (s - 1.0))
    return (
        lambda x: c * (_powm1(x, s) - s * (x - 1.0)),
        lambda x: _powm1(x, s - 1.0) / (s - 1.0),
        lambda x: x ** (s - 2.0),
    )


# N2(x, 1) = (sqrt(x) + 1) * sqrt(2(x + 1)) / 4 and its derivatives.
def _n2(x):
    return (np.sqrt(x) + 1.0) * np.sqrt(2.0 * (x + 1.0)) / 4.0


def _n2_d1(x):
    return (2.0 * x + 1.0 + np.sqrt(x)) / (4.0 * np.sqrt(2.0 * x * (x + 1.0)))


def _an2_d2(x):
    x32 = x * np.sqrt(x)
    return (1.0 + x32) / (8.0 * x32 * (x + 1.0) * np.sqrt(2.0 * x + 2.0))


def _n2n1_d2(x):
    x32 = x * np.sqrt(x)
    t = (2.0 * x + 2.0) ** 1.5
    return (t - 2.0 * (x32 + 1.0)) / (8.0 * x32 * t)


def _n2g_d2(x):
    x32 = x * np.sqrt(x)
    t = (2.0 * x + 2.0) ** 1.5
    return (t - x32 - 1.0) / (4.0 * x32 * t)


_MEAN_MAPS = {
    Kind.AH: (
        lambda x: (x - 1.0) ** 2 / (2.0 * (x + 1.0)),
        lambda x: (x - 1.0) * (x + 3.0) / (2.0 * (x + 1.0) ** 2),
        lambda x: 4.0 / (x + 1.0) ** 3,
    ),
    Kind.AG: (
        lambda x: 0.5 * (np.sqrt(x) - 1.0) ** 2,
        lambda x: (np.sqrt(x) - 1.0) / (2.0 * np.sqrt(x)),
        lambda x: 1.0 / (4.0 * x * np.sqrt(x)),
    ),
    # (sqrt(x)+1) in the first term, not (x+1): only this form gives N2 - N1.
    Kind.N2N1: (
        lambda x: _n2(x) - (np.sqrt(x) + 1.0) ** 2 / 4.0,
        lambda x: _n2_d1(x) - (np.sqrt(x) + 1.0) / (4.0 * np.sqrt(x)),
        _n2n1_d2,
    ),
    # -sqrt(x), not -x: only this form gives N2 - G.
    Kind.N2G: (
        lambda x: _n2(x) - np.sqrt(x),
        lambda x: _n2_d1(x) - 1.0 / (2.0 * np.sqrt(x)),
        _n2g_d2,
    ),
    Kind.AN2: (
        lambda x: (x + 1.0) / 2.0 - _n2(x),
        lambda x: 0.5 - _n2_d1(x),
        _an2_d2,
    ),
}


def spec_name(spec: GeneratorSpec) -> str:
    if spec.kind in (Kind.FS, Kind.PHI):
        return f"{spec.kind.value}:{spec.s:g}"
    if spec.kind is Kind.CUSTOM:
        return spec.name or "custom"
    return spec.kind.value


def make_generator(spec: GeneratorSpec) -> Generator:
    if spec.kind is Kind.FS:
        maps = _fs(spec.s)
    elif spec.kind is Kind.PHI:
        maps = _phi(spec.s)
    elif spec.kind is Kind.CUSTOM:
        maps = (spec.value, spec.d1, spec.d2)
    else:
        maps = _MEAN_MAPS[spec.kind]
    value, d1, d2 = (_guarded(m) for m in maps)
    return Generator(spec_name(spec), value, d1, d2)


def custom_generator(name: str, value: Map, d1: Map, d2: Map) -> Generator:
    return make_generator(GeneratorSpec(Kind.CUSTOM, name=name, value=value, d1=d1, d2=d2))


def parse_spec(name: str) -> GeneratorSpec:
    """Parse a registry string: ``fs:<s>``, ``phi:<s>``, ``ah``, ``ag``, ``n2n1``, ``n2g``, ``an2``."""
    head, sep, tail = name.strip().lower().partition(":")
    try:
        kind = Kind(head)
    except ValueError:
        raise ValueError(f"unknown generator {name!r}; available: {', '.join(GENERATOR_NAMES)}") from None
    if kind is Kind.CUSTOM:
        raise ValueError("custom generators cannot be named from a string")
    if kind in (Kind.FS, Kind.PHI):
        if not sep:
            raise ValueError(f"generator {name!r} needs a parameter, e.g. {head}:0.5")
        try:
            s = float(tail)
        except ValueError:
            raise ValueError(f"bad parameter in {name!r}") from None
        return GeneratorSpec(kind, s)
    if sep:
        raise ValueError(f"generator {head!r} takes no parameter")
    return GeneratorSpec(kind)


def get_generator(name: str) -> Generator:
    return make_generator(parse_spec(name))


GENERATOR_NAMES = ("fs:<s>", "phi:<s>", "ah", "ag", "n2n1", "n2g", "an2")

MEAN_GENERATORS = ("ah", "ag", "n2n1", "n2g", "an2")
PHI_PARAMS = (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0)
FS_PARAMS = (-1.0, 0.0, 0.5, 1.0)


def registry() -> list[Generator]:
    """The fixed catalogue exercised by the test and verification suites."""
    names = [f"fs:{s:g}" for s in FS_PARAMS] + [f"phi:{s:g}" for s in PHI_PARAMS] + list(MEAN_GENERATORS)
    return [get_generator(n) for n in names]


@dataclass(frozen=True)
class SelfCheckReport:
    generator: str
    d1_max_error: float
    d2_max_error: float
    worst_x: float
    passed: bool


def _grid(interval: tuple[float, float], grid_points: int) -> np.ndarray:
    lo, hi = interval
    if grid_points < 3:
        raise ValueError("grid_points must be >= 3")
    if not (0.0 < lo < hi < math.inf):
        raise DomainError(f"interval {interval} must satisfy 0 < lo < hi < inf")
    return np.geomspace(lo, hi, grid_points)


def derivative_selfcheck(g: Generator, interval: tuple[float, float], grid_points: int) -> SelfCheckReport:
    """Compare d1 and d2 with centered differences of value and d1 (step x * 1e-6)."""
    x = _grid(interval, grid_points)
    h = x * FD_STEP
    fd1 = (g.value(x + h) - g.value(x - h)) / (2.0 * h)
    fd2 = (g.d1(x + h) - g.d1(x - h)) / (2.0 * h)
    a1, a2 = g.d1(x), g.d2(x)
    e1, e2 = np.abs(fd1 - a1), np.abs(fd2 - a2)
    # normalized excess over the mixed tolerance; > 1 means failure
    excess = np.maximum(
        e1 / (SELFCHECK_ATOL + SELFCHECK_RTOL * np.abs(a1)),
        e2 / (SELFCHECK_ATOL + SELFCHECK_RTOL * np.abs(a2)),
    )
    worst = int(np.argmax(excess))
    return SelfCheckReport(
        g.name, float(e1.max()), float(e2.max()), float(x[worst]), bool(np.all(excess <= 1.0))
    )


def convexity_check(g: Generator, interval: tuple[float, float], grid_points: int) -> bool:
    x = _grid(interval, grid_points)
    return bool(np.all(g.d2(x) >= -CONVEXITY_ATOL))
