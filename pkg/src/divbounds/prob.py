"""Distributions on the open probability simplex, ratio bounds and seeded sampling."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np

from ._numeric import fsum

SUM_ATOL = 1e-9
SAMPLE_FLOOR = 1e-6


@dataclass(frozen=True)
class Distribution:
    """Strictly positive weights summing to one. Build with :func:`new_distribution`."""

    weights: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.weights, dtype=float)
        arr.flags.writeable = False
        return arr

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class RatioBounds:
    r: float
    R: float


def new_distribution(weights: Iterable[float], normalize: bool = False) -> Distribution:
    w = [float(x) for x in weights]
    if len(w) < 2:
        raise ValueError(f"a distribution needs at least 2 weights, got {len(w)}")
    for i, x in enumerate(w):
        if not math.isfinite(x) or x <= 0.0:
            raise ValueError(f"weight {i} is {x!r}; all weights must be finite and > 0")
    total = fsum(w)
    if normalize:
        w = [x / total for x in w]
    elif abs(total - 1.0) > SUM_ATOL:
        raise ValueError(f"weights sum to {total!r}, not 1 (pass normalize to rescale)")
    return Distribution(tuple(w))


def check_same_size(P: Distribution, Q: Distribution) -> None:
    if P.n != Q.n:
        raise ValueError(f"cardinality mismatch: {P.n} vs {Q.n}")


def ratio_bounds(P: Distribution, Q: Distribution) -> RatioBounds:
    check_same_size(P, Q)
    ratios = P.array / Q.array
    return RatioBounds(float(ratios.min()), float(ratios.max()))


def _normalized(w: np.ndarray) -> Distribution:
    return Distribution(tuple((w / fsum(w)).tolist()))


def sample_pair(n: int, seed: int) -> tuple[Distribution, Distribution]:
    """Two independent draws, uniform on the simplex, floored at 1e-6 before normalizing.

    Uses a counter-based bit generator so the pair depends only on ``(n, seed)``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rng = np.random.Generator(np.random.Philox(seed))
    w = np.maximum(rng.standard_exponential((2, n)), SAMPLE_FLOOR)
    return _normalized(w[0]), _normalized(w[1])


def sample_stress_pair(n: int, seed: int, max_ratio: float = 1e3) -> tuple[Distribution, Distribution]:
    """A pair whose coordinate ratios spread over up to ``max_ratio`` (R/r <= max_ratio)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rng = np.random.Generator(np.random.Philox(seed))
    p = np.maximum(rng.standard_exponential(n), SAMPLE_FLOOR)
    half = 0.5 * math.log(max_ratio)
    q = p * np.exp(rng.uniform(-half, half, n))
    # force the extremes so the stress actually reaches the full spread
    i, j = rng.choice(n, size=2, replace=False)
    q[i] = p[i] * math.exp(-half)
    q[j] = p[j] * math.exp(half)
    return _normalized(p), _normalized(q)


def parse_distribution(text: str, normalize: bool = False) -> Distribution:
    """Parse either a JSON array of numbers or plain text with one weight per line."""
    stripped = text.strip()
    if stripped.startswith("["):
        values = json.loads(stripped)
        if not isinstance(values, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
        ):
            raise ValueError("JSON distribution must be an array of numbers")
    else:
        values = []
        for lineno, line in enumerate(stripped.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ValueError(f"line {lineno}: cannot parse {line!r} as a number") from None
    return new_distribution(values, normalize=normalize)


def load_distribution(path: str | Path, normalize: bool = False) -> Distribution:
    return parse_distribution(Path(path).read_text(), normalize=normalize)
