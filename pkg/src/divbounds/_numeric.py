"""Shared numeric helpers: tolerant comparisons, sandwich links, golden-section search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

CHAIN_ATOL = 1e-10
CHAIN_RTOL = 1e-9

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class DomainError(ValueError):
    """Raised when a map is evaluated outside its domain."""


def fsum(values) -> float:
    """Compensated sum of an iterable or array."""
    if isinstance(values, np.ndarray):
        return math.fsum(values.tolist())
    return math.fsum(values)


def le_with_tol(lhs: float, rhs: float, atol: float = CHAIN_ATOL, rtol: float = CHAIN_RTOL) -> bool:
    return rhs - lhs >= -(atol + rtol * max(abs(lhs), abs(rhs)))


@dataclass(frozen=True)
class Link:
    """One inequality ``lhs <= rhs`` of a chain."""

    name: str
    lhs: float
    rhs: float
    ok: bool

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def link(name: str, lhs: float, rhs: float, atol: float = CHAIN_ATOL, rtol: float = CHAIN_RTOL) -> Link:
    return Link(name, float(lhs), float(rhs), le_with_tol(lhs, rhs, atol, rtol))


@dataclass(frozen=True)
class SandwichReport:
    """Links of a set of ``alpha*X2 <= X1 <= beta*X2`` sandwiches."""

    links: tuple[Link, ...]
    values: dict

    @property
    def ok(self) -> bool:
        return all(lk.ok for lk in self.links)


def sandwich(name: str, x1: float, x2: float, alpha: float, beta: float) -> list[Link]:
    return [
        link(f"{name}: alpha*lower", alpha * x2, x1),
        link(f"{name}: beta*upper", x1, beta * x2),
    ]


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-9) -> tuple[float, float]:
    """Maximize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``.

    Stops once the bracket is narrower than ``tol``.
    """
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)
