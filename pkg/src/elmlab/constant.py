"""Numerical estimate of ``C = max H(r)`` over (0, 1].

No closed form for C is known, so it is computed: a uniform scan of H
(no unimodality assumed), golden-section refinement around the best grid
point, and repeated grid doubling until the maximum stops moving.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analysis import H_func
from .errors import NoConvergence, ParamError

__all__ = ["CEstimate", "golden_section_max", "estimate_c"]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
SCAN_START = 1e-9
MAX_DOUBLINGS = 20


@dataclass(frozen=True)
class CEstimate:
    C: float
    r0: float
    grid_points: int
    refinement_delta: float


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, xtol: float = 1e-13, max_iter: int = 200
) -> tuple[float, float]:
    """Maximize ``f`` on ``[a, b]``; returns ``(x, f(x))``.

    Only a local search: the caller supplies a bracket around the maximum.
    The best point seen, endpoints included, is returned.
    """
    fa, fb = f(a), f(b)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    best = max((fa, a), (fb, b), (fc, c), (fd, d))
    for _ in range(max_iter):
        if b - a <= xtol * max(1.0, abs(a) + abs(b)):
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
            best = max(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
            best = max(best, (fd, d))
    return best[1], best[0]


def _scan_and_refine(points: int) -> tuple[float, float]:
    grid = np.linspace(SCAN_START, 1.0, points)
    values = [H_func(r) for r in grid.tolist()]
    i = int(np.argmax(values))
    lo = float(grid[max(i - 1, 0)])
    hi = float(grid[min(i + 1, points - 1)])
    r0, c = golden_section_max(H_func, lo, hi)
    if values[i] > c:
        r0, c = float(grid[i]), values[i]
    return r0, c


def estimate_c(initial_points: int = 1001, tol: float = 1e-10) -> CEstimate:
    """Estimate ``C`` and the maximizer ``r0``.

    The grid is refined by ``n -> 2n - 1`` (every old node kept) until two
    successive estimates differ by less than ``tol``.
    """
    initial_points = int(initial_points)
    if initial_points < 1001:
        raise ParamError(f"initial_points must be >= 1001, got {initial_points}")
    if not (tol > 0.0):
        raise ParamError(f"tol must be positive, got {tol!r}")

    points = initial_points
    r0, c = _scan_and_refine(points)
    for _ in range(MAX_DOUBLINGS):
        points = 2 * points - 1
        r1, c1 = _scan_and_refine(points)
        delta = abs(c1 - c)
        r0, c = r1, c1
        if delta < tol:
            return CEstimate(C=c, r0=r0, grid_points=points, refinement_delta=delta)
    raise NoConvergence(f"C estimate still moving after {MAX_DOUBLINGS} grid doublings")
