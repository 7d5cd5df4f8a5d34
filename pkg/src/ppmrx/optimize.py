"""Scalar optimization helpers: coarse grid scan plus golden-section refinement.

The objectives of interest (click multipliers, CPN error vs displacement)
decay on a unit scale in beta, so a coarse grid brackets the optimum well and
the golden-section stage narrows it down to the requested tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi


@dataclass(frozen=True)
class ScalarSearchConfig:
    """Search interval and resolution for 1-D optimization over beta >= 0."""

    lo: float = 0.0
    hi: float = 5.0
    grid_points: int = 256
    tol: float = 1e-6

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("search interval must be finite")
        if self.hi <= self.lo:
            raise ValueError(f"need hi > lo, got [{self.lo}, {self.hi}]")
        if self.grid_points < 2:
            raise ValueError("grid_points must be >= 2")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class GridConfig:
    """Logarithmically spaced grid over a positive interval."""

    lo: float = 1e-16
    hi: float = 1e16
    count: int = 1000

    def __post_init__(self):
        if self.lo <= 0.0 or self.hi <= self.lo:
            raise ValueError(f"need 0 < lo < hi, got [{self.lo}, {self.hi}]")
        if self.count < 2:
            raise ValueError("count must be >= 2")


def search_interval(alpha: float, margin: float = 5.0,
                    grid_points: int = 256, tol: float = 1e-6) -> ScalarSearchConfig:
    """Default beta search interval [0, alpha + margin]."""
    return ScalarSearchConfig(lo=0.0, hi=alpha + margin,
                              grid_points=grid_points, tol=tol)


def _golden_max(f: Callable[[float], float], a: float, b: float,
                tol: float) -> Tuple[float, float]:
    h = b - a
    c = b - _INVPHI * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    if fc > fd:
        return c, fc
    return d, fd


def maximize_scalar(f: Callable[[float], float],
                    search: ScalarSearchConfig) -> Tuple[float, float]:
    """Return (argmax, max) of ``f`` on the search interval.

    A uniform grid scan locates the basin; golden-section then refines the
    bracket formed by the grid neighbours of the best point to ``tol``.
    """
    n = search.grid_points
    step = (search.hi - search.lo) / (n - 1)
    xs = [search.lo + i * step for i in range(n)]
    ys = [f(x) for x in xs]
    i_best = max(range(n), key=ys.__getitem__)
    x_best, y_best = xs[i_best], ys[i_best]
    a = xs[max(i_best - 1, 0)]
    b = xs[min(i_best + 1, n - 1)]
    if b > a:
        x_ref, y_ref = _golden_max(f, a, b, search.tol)
        if y_ref > y_best:
            x_best, y_best = x_ref, y_ref
    return x_best, y_best


def minimize_scalar(f: Callable[[float], float],
                    search: ScalarSearchConfig) -> Tuple[float, float]:
    """Return (argmin, min) of ``f`` on the search interval."""
    x, y = maximize_scalar(lambda b: -f(b), search)
    return x, -y
