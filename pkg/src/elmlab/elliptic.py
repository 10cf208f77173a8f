"""Complete elliptic integrals K, E by the arithmetic-geometric mean.

Everything here is a pure function of a :class:`Modulus`.  A modulus
carries both ``r`` and its complement ``r' = sqrt(1 - r^2)`` so that the
complementary integrals ``K'(r) = K(r')`` are evaluated from the exact
pair ``(r', r)`` instead of re-deriving ``r`` from a rounded ``r'``.

Besides K and E, the AGM sweep yields the differences ``K - E`` and
``E - r'^2 K`` without subtractive cancellation.  Those are what the
derivative formulas and the auxiliary functions in :mod:`elmlab.analysis`
need near r = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError, NoConvergence, NonPositiveInput

__all__ = [
    "GUARD",
    "Modulus",
    "EllipticValues",
    "agm",
    "ellint_k",
    "ellint_e",
    "elliptic_values",
    "m_func",
    "dk_dr",
    "de_dr",
    "dm_dr",
]

HALF_PI = 0.5 * math.pi

# interior operations reject r outside [GUARD, 1 - GUARD]
GUARD = 1e-12

AGM_REL_TOL = 1e-16
AGM_MAX_ITER = 64


@dataclass(frozen=True)
class Modulus:
    """A modulus ``r`` in [0, 1] together with ``r_comp = sqrt(1 - r^2)``.

    ``Modulus(r)`` computes the complement as ``sqrt((1 - r)(1 + r))``.
    Passing ``r_comp`` explicitly is meant for :meth:`complement`.
    """

    r: float
    r_comp: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        r = float(self.r)
        if not (0.0 <= r <= 1.0):
            raise DomainError(f"modulus must lie in [0, 1], got {self.r!r}")
        object.__setattr__(self, "r", r)
        if self.r_comp is None:
            object.__setattr__(self, "r_comp", math.sqrt((1.0 - r) * (1.0 + r)))
        else:
            rc = float(self.r_comp)
            if not (0.0 <= rc <= 1.0):
                raise DomainError(f"complement must lie in [0, 1], got {self.r_comp!r}")
            object.__setattr__(self, "r_comp", rc)

    def complement(self) -> "Modulus":
        """The modulus ``r'`` whose complement is ``r``, bit for bit."""
        return Modulus(self.r_comp, self.r)


ModulusLike = Union[Modulus, float]


def as_modulus(m: ModulusLike) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


def require_interior(m: ModulusLike) -> Modulus:
    """Coerce to :class:`Modulus` and enforce the interior guard."""
    m = as_modulus(m)
    if not (GUARD <= m.r and GUARD <= m.r_comp and m.r <= 1.0 - GUARD):
        raise DomainError(f"r = {m.r!r} is outside the open interval (0, 1) guard")
    return m


@dataclass(frozen=True)
class EllipticValues:
    """K, E, K', E' evaluated once at a common modulus."""

    modulus: Modulus
    K: float
    E: float
    K_comp: float
    E_comp: float

    @property
    def legendre_residual(self) -> float:
        """``E K' + E' K - K K' - pi/2``; zero in exact arithmetic."""
        return self.E * self.K_comp + self.E_comp * self.K - self.K * self.K_comp - HALF_PI


def _agm_sweep(a: float, b: float, c: float = 0.0) -> tuple[float, float]:
    """Run the AGM from (a, b) and accumulate ``sum_{n>=1} 2^(n-1) c_n^2``.

    ``c`` is c_0; later terms use ``c_{n+1} = c_n^2 / (4 a_{n+1})``, which
    equals ``(a_n - b_n) / 2`` without the subtraction.
    """
    tail = 0.0
    weight = 0.5
    gap = abs(a - b)
    for _ in range(AGM_MAX_ITER):
        if gap <= AGM_REL_TOL * a:
            return a, tail
        a_next = 0.5 * (a + b)
        b_next = math.sqrt(a * b)
        c = c * c / (4.0 * a_next)
        weight *= 2.0
        tail += weight * c * c
        a, b = a_next, b_next
        next_gap = abs(a - b)
        if next_gap >= gap:
            # rounding floor: the pair now sits within a few ulp
            return a, tail
        gap = next_gap
    raise NoConvergence(f"AGM did not converge in {AGM_MAX_ITER} iterations")


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers.

    >>> agm(4.0, 4.0)
    4.0
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise NonPositiveInput(f"agm needs finite arguments, got ({a!r}, {b!r})")
    if a <= 0.0 or b <= 0.0:
        raise NonPositiveInput(f"agm needs positive arguments, got ({a!r}, {b!r})")
    return _agm_sweep(a, b)[0]


def _ke(m: Modulus) -> tuple[float, float, float, float]:
    """Return ``(K, E, K - E, E - r'^2 K)`` for ``r' > 0``."""
    a, tail = _agm_sweep(1.0, m.r_comp, m.r)
    K = HALF_PI / a
    r2 = m.r * m.r
    s = 0.5 * r2 + tail
    return K, K * (1.0 - s), K * s, K * (0.5 * r2 - tail)


def ellint_k(m: ModulusLike) -> float:
    """Complete elliptic integral of the first kind, ``pi / (2 agm(1, r'))``."""
    m = as_modulus(m)
    if m.r_comp <= 0.0:
        raise DomainError("K(r) diverges at r = 1")
    return HALF_PI / agm(1.0, m.r_comp)


def ellint_e(m: ModulusLike) -> float:
    """Complete elliptic integral of the second kind on the closed [0, 1]."""
    m = as_modulus(m)
    if m.r_comp <= 0.0:
        return 1.0
    return _ke(m)[1]


def elliptic_values(m: ModulusLike) -> EllipticValues:
    m = require_interior(m)
    K, E, _, _ = _ke(m)
    K_comp, E_comp, _, _ = _ke(m.complement())
    return EllipticValues(m, K, E, K_comp, E_comp)


def m_func(m: ModulusLike) -> float:
    """``(2/pi) r'^2 K(r) K'(r)``, decreasing from +inf at 0 to 0 at 1."""
    m = require_interior(m)
    K = ellint_k(m)
    K_comp = ellint_k(m.complement())
    return (2.0 / math.pi) * m.r_comp * m.r_comp * K * K_comp


def dk_dr(m: ModulusLike) -> float:
    """``dK/dr = (E - r'^2 K) / (r r'^2)``."""
    m = require_interior(m)
    e_minus = _ke(m)[3]
    return e_minus / (m.r * m.r_comp * m.r_comp)


def de_dr(m: ModulusLike) -> float:
    """``dE/dr = (E - K) / r``."""
    m = require_interior(m)
    return -_ke(m)[2] / m.r


def dm_dr(m: ModulusLike) -> float:
    """``dm/dr = (pi - 4 E' K) / (pi r)``."""
    m = require_interior(m)
    K = ellint_k(m)
    E_comp = ellint_e(m.complement())
    return (math.pi - 4.0 * E_comp * K) / (math.pi * m.r)
