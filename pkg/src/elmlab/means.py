"""Power means of m(r) and randomized checks of the power-mean inequality.

For an order ``lam`` the forward inequality reads

    M_lam(m(x), m(y)) <= m(M_lam(x, y))

and the reverse inequality flips it.  Forward holds on all of (0, 1)^2
exactly when ``lam <= 0``; reverse exactly when ``lam >= C``, with ``C``
estimated by :func:`elmlab.constant.estimate_c`.  Between 0 and ``C``
neither direction holds, which :func:`find_counterexample` demonstrates.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Literal, Optional

import numpy as np

from .analysis import as_order
from .elliptic import m_func
from .errors import DomainError, ParamError

__all__ = [
    "SAMPLE_LO",
    "SAMPLE_HI",
    "VerificationReport",
    "power_mean",
    "inequality_gap",
    "verify_theorem",
    "find_counterexample",
    "check_equality_condition",
    "proof_F",
    "proof_G",
]

Direction = Literal["forward", "reverse"]
DIRECTIONS = ("forward", "reverse")

SAMPLE_LO = 1e-4
SAMPLE_HI = 1.0 - 1e-4
REL_TOL = 1e-11
WITNESS_MARGIN = 1e-9


def _positive(v: float, name: str) -> float:
    v = float(v)
    if not (v > 0.0 and math.isfinite(v)):
        raise DomainError(f"{name} must be positive and finite, got {v!r}")
    return v


def power_mean(order: float, x: float, y: float) -> float:
    """Power mean ``((x^lam + y^lam)/2)^(1/lam)``, geometric mean at ``lam = 0``.

    The larger argument is factored out for ``lam > 0`` and the smaller for
    ``lam < 0``, so the remaining power lies in (0, 1] and nothing
    overflows.  ``expm1``/``log1p`` keep the result accurate as ``lam -> 0``.

    >>> power_mean(1, 2.0, 4.0)
    3.0
    >>> power_mean(0, 2.0, 8.0)
    4.0
    """
    lam = as_order(order)
    x = _positive(x, "x")
    y = _positive(y, "y")
    if x == y:
        return x
    lo, hi = (x, y) if x < y else (y, x)
    if lam == 0.0:
        p = lo * hi
        if 0.0 < p < math.inf:
            return min(max(math.sqrt(p), lo), hi)
        return math.sqrt(lo) * math.sqrt(hi)
    if lam > 0.0:
        base, ratio = hi, lo / hi
    else:
        base, ratio = lo, hi / lo
    t = math.expm1(lam * math.log(ratio))
    out = base * math.exp(math.log1p(0.5 * t) / lam)
    return min(max(out, lo), hi)


def inequality_gap(order: float, x: float, y: float) -> float:
    """``m(M_lam(x, y)) - M_lam(m(x), m(y))``; non-negative when forward holds."""
    return m_func(power_mean(order, x, y)) - power_mean(order, m_func(x), m_func(y))


def _margin(lam: float, direction: str, x: float, y: float) -> tuple[float, float]:
    """Signed slack (negative means the claimed inequality fails) and its tolerance."""
    lhs = m_func(power_mean(lam, x, y))
    gap = lhs - power_mean(lam, m_func(x), m_func(y))
    tol = REL_TOL * (1.0 + abs(lhs))
    return (gap if direction == "forward" else -gap), tol


def _direction(direction: str) -> str:
    if direction not in DIRECTIONS:
        raise ParamError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    return direction


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of :func:`verify_theorem`.

    ``worst_margin`` is the smallest signed slack seen; negative values mean
    the claimed inequality failed at that pair, by that much.
    """

    order: float
    samples: int
    direction: str
    violations: int
    worst_margin: float
    witness: Optional[tuple[float, float]]
    seed: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("order")
        return d


def verify_theorem(
    order: float, direction: Direction = "forward", samples: int = 10_000, seed: int = 0
) -> VerificationReport:
    """Check the inequality at ``samples`` uniform pairs from [1e-4, 1-1e-4]^2.

    A pair counts as a violation when the claimed side loses by more than
    ``1e-11 * (1 + |m(M_lam(x, y))|)``.  The draw is fixed by ``seed``.
    """
    lam = as_order(order)
    direction = _direction(direction)
    samples = int(samples)
    if samples < 1:
        raise ParamError(f"samples must be >= 1, got {samples}")
    pairs = np.random.default_rng(seed).uniform(SAMPLE_LO, SAMPLE_HI, size=(samples, 2))

    violations = 0
    worst = math.inf
    worst_pair = None
    for x, y in pairs.tolist():
        margin, tol = _margin(lam, direction, x, y)
        if margin < -tol:
            violations += 1
        if margin < worst:
            worst, worst_pair = margin, (x, y)
    witness = worst_pair if violations else None
    return VerificationReport(lam, samples, direction, violations, worst, witness, int(seed))


def find_counterexample(
    order: float, direction: Direction = "forward", budget: int = 10_000, seed: int = 0
) -> Optional[tuple[float, float]]:
    """Search for a pair where the claimed inequality fails by more than 1e-9.

    Random restarts: each round draws a small batch, keeps the worst pair
    and coordinate-descends on the margin with steps halving from 0.1 to
    1e-6.  ``budget`` caps the number of margin evaluations.
    """
    lam = as_order(order)
    direction = _direction(direction)
    budget = int(budget)
    if budget < 1:
        raise ParamError(f"budget must be >= 1, got {budget}")
    rng = np.random.default_rng(seed)
    used = 0

    def margin(x: float, y: float) -> float:
        nonlocal used
        used += 1
        return _margin(lam, direction, x, y)[0]

    def clip(v: float) -> float:
        return min(max(v, SAMPLE_LO), SAMPLE_HI)

    while used < budget:
        batch = rng.uniform(SAMPLE_LO, SAMPLE_HI, size=(min(32, budget - used), 2))
        best, bx, by = math.inf, 0.5, 0.5
        for x, y in batch.tolist():
            v = margin(x, y)
            if v < best:
                best, bx, by = v, x, y
        step = 0.1
        while best >= -WITNESS_MARGIN and step >= 1e-6 and used < budget:
            for dx, dy in ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)):
                if used >= budget:
                    break
                nx, ny = clip(bx + dx), clip(by + dy)
                v = margin(nx, ny)
                if v < best:
                    best, bx, by = v, nx, ny
                    break
            else:
                step *= 0.5
        if best < -WITNESS_MARGIN:
            return bx, by
    return None


def check_equality_condition(order: float, x: float) -> float:
    """``|m(M_lam(x, x)) - M_lam(m(x), m(x))|``, zero up to rounding."""
    return abs(inequality_gap(order, x, x))


def _ordered_pair(x: float, y: float) -> tuple[float, float]:
    x, y = float(x), float(y)
    if not (0.0 < x <= y < 1.0):
        raise DomainError(f"need 0 < x <= y < 1, got x={x!r}, y={y!r}")
    return x, y


def proof_F(order: float, x: float, y: float) -> float:
    """``m(M_lam(x, y))^lam - (m(x)^lam + m(y)^lam) / 2`` for ``lam != 0``."""
    lam = as_order(order)
    if lam == 0.0:
        raise ParamError("proof_F is defined for nonzero order only; use proof_G")
    x, y = _ordered_pair(x, y)
    return m_func(power_mean(lam, x, y)) ** lam - 0.5 * (m_func(x) ** lam + m_func(y) ** lam)


def proof_G(x: float, y: float) -> float:
    """``m(sqrt(x y))^2 / (m(x) m(y))``."""
    x, y = _ordered_pair(x, y)
    t = m_func(power_mean(0.0, x, y))
    return t * t / (m_func(x) * m_func(y))
