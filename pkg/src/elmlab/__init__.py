"""Complete elliptic integrals, the modular function m(r), and a numerical
lab for the power-mean inequality ``M_lam(m(x), m(y)) <= m(M_lam(x, y))``."""

from .analysis import H_func, f1, f2, f3, f4, g_func, h_func, h_log_derivative
from .constant import CEstimate, estimate_c
from .elliptic import (
    EllipticValues,
    Modulus,
    agm,
    de_dr,
    dk_dr,
    dm_dr,
    ellint_e,
    ellint_k,
    elliptic_values,
    m_func,
)
from .errors import DomainError, NoConvergence, NonFinite, NonPositiveInput, ParamError
from .means import (
    VerificationReport,
    check_equality_condition,
    find_counterexample,
    power_mean,
    proof_F,
    proof_G,
    verify_theorem,
)

__version__ = "0.1.0"
