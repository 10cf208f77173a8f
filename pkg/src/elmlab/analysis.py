"""Auxiliary functions built from K, E, K', E'.

``f1 .. f4`` are the classical ratios whose monotonicity and ranges feed
the power-mean argument.  ``g`` is the positive correction term, ``h`` the
function whose monotonicity decides the direction of the inequality for a
given order, and ``H`` the threshold function: ``h`` increases wherever
``H(r) > lambda`` and decreases wherever ``H(r) < lambda``.
"""

from __future__ import annotations

import math

from .elliptic import (
    HALF_PI,
    GUARD,
    ModulusLike,
    _ke,
    as_modulus,
    m_func,
    require_interior,
)
from .errors import DomainError, NonFinite, ParamError

__all__ = [
    "as_order",
    "f1",
    "f2",
    "f3",
    "f4",
    "g_func",
    "g_numerator",
    "g_numerator_direct",
    "h_func",
    "h_log_derivative",
    "H_func",
]


def _bundle(m: ModulusLike):
    """Both halves of the sweep: ``(mod, (K, E, K-E, E-r'^2K), (K', E', ...))``."""
    mod = require_interior(m)
    return mod, _ke(mod), _ke(mod.complement())


def as_order(lam: float) -> float:
    """Validate a power-mean order (any finite real)."""
    lam = float(lam)
    if not math.isfinite(lam):
        raise NonFinite(f"order must be finite, got {lam!r}")
    return lam


def f1(m: ModulusLike) -> float:
    """``r'^2 K / E``, decreasing from 1 to 0."""
    mod = require_interior(m)
    K, E, _, _ = _ke(mod)
    return mod.r_comp * mod.r_comp * K / E


def f2(m: ModulusLike) -> float:
    """``(E - r'^2 K) / r^2``, increasing from pi/4 to 1."""
    mod = require_interior(m)
    return _ke(mod)[3] / (mod.r * mod.r)


def f3(m: ModulusLike, c: float) -> float:
    """``r'^c K`` for ``c >= 1/2``; defined on [0, 1)."""
    c = float(c)
    if not c >= 0.5:
        raise ParamError(f"exponent c must be >= 1/2, got {c!r}")
    mod = as_modulus(m)
    if mod.r > 1.0 - GUARD or mod.r_comp < GUARD:
        raise DomainError(f"r = {mod.r!r} is outside [0, 1)")
    if mod.r == 0.0:
        return HALF_PI
    return mod.r_comp**c * _ke(mod)[0]


def f4(m: ModulusLike) -> float:
    """``(K - E) / (r^2 K)``, increasing from 1/2 to 1."""
    mod = require_interior(m)
    K, _, k_minus_e, _ = _ke(mod)
    return k_minus_e / (mod.r * mod.r * K)


def g_numerator(m: ModulusLike) -> float:
    """``E E' + r^2 K K' - K E'`` via the Legendre relation.

    Substituting ``pi/2 = E K' + E' K - K K'`` into the rewritten form
    ``E (E' + K') - r'^2 K K' - pi/2`` leaves
    ``(K - E)(K' - E') + K' (E - r'^2 K)``: two positive products, each
    factor taken from the AGM sweep without subtraction.
    """
    _, (_, _, d, e_minus), (K_c, _, d_c, _) = _bundle(m)
    return d * d_c + K_c * e_minus


def g_numerator_direct(m: ModulusLike) -> float:
    """``E E' + r^2 K K' - K E'`` term by term; cross-check only."""
    mod, (K, E, _, _), (K_c, E_c, _, _) = _bundle(m)
    return E * E_c + mod.r * mod.r * K * K_c - K * E_c


def _g(K, K_c, E_c, d, d_c, e_minus) -> float:
    num = d * d_c + K_c * e_minus
    den = 4.0 * E_c * K - math.pi
    return K * K_c * num / (den * den)


def g_func(m: ModulusLike) -> float:
    """``K K' (E E' + r^2 K K' - K E') / (4 E' K - pi)^2``; positive on (0, 1)."""
    _, (K, _, d, e_minus), (K_c, E_c, d_c, _) = _bundle(m)
    return _g(K, K_c, E_c, d, d_c, e_minus)


def h_func(m: ModulusLike, order: float) -> float:
    """``(4 E' K - pi) / m(r) * (m(r) / r)^lambda``.

    Raises OverflowError when the power leaves the binary64 range.
    """
    lam = as_order(order)
    mod = require_interior(m)
    K = _ke(mod)[0]
    E_c = _ke(mod.complement())[1]
    mr = m_func(mod)
    power = math.exp(lam * math.log(mr / mod.r))
    return (4.0 * E_c * K - math.pi) / mr * power


def H_func(m: ModulusLike) -> float:
    """Threshold function; ``H(0) = 0`` and ``H(1) = 1`` by definition."""
    mod = as_modulus(m)
    if mod.r == 0.0:
        return 0.0
    if mod.r_comp == 0.0:
        return 1.0
    # no interior guard: H is bounded and the formula stays finite up to the ends
    return _H(mod, _ke(mod), _ke(mod.complement()))


def _H(mod, sweep, sweep_c) -> float:
    K, _, d, e_minus = sweep
    K_c, E_c, d_c, _ = sweep_c
    den = 4.0 * E_c * K - math.pi
    mr = (2.0 / math.pi) * mod.r_comp * mod.r_comp * K * K_c
    return (1.0 + 8.0 * _g(K, K_c, E_c, d, d_c, e_minus)) / (1.0 + math.pi * mr / den)


def h_log_derivative(m: ModulusLike, order: float) -> float:
    """``h'(r) / h(r) = ((4E'K - pi)/(pi r m) + 1/r) * (H(r) - lambda)``."""
    lam = as_order(order)
    mod, sweep, sweep_c = _bundle(m)
    K, K_c, E_c = sweep[0], sweep_c[0], sweep_c[1]
    den = 4.0 * E_c * K - math.pi
    mr = (2.0 / math.pi) * mod.r_comp * mod.r_comp * K * K_c
    scale = den / (math.pi * mod.r * mr) + 1.0 / mod.r
    return scale * (_H(mod, sweep, sweep_c) - lam)
