"""Allometric exponent of a branching circulatory system.

Along the circulatory tree the branch count, not the tube size, grows each
generation: radius scales by ``beta = S**(-1/2)`` and length by
``gamma = S**(-1/3)``. Over ``h`` generations the blood volume and the
irrigated volume are

    V_Y     = h * pi * beta**(-2h) * r_c**2 * gamma**(-h) * l_c = h * pi * S**(4h/3) * r_c**2 * l_c
    theta_M = h * S**h * theta_c

so ``V_Y`` grows as ``theta_M**(4/3)`` and metabolism scales with mass to the
power ``a = 3/4``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _checks
from .errors import ParameterDomainError

RADIUS_EXPONENT = -0.5
LENGTH_EXPONENT = -1.0 / 3.0
KLEIBER_EXPONENT = 0.75


@dataclass(frozen=True)
class AllometryScenario:
    """Capillary constants plus the generation counts of a family of organisms."""

    S: float
    r_c: float = 1.0
    l_c: float = 1.0
    theta_c: float = 1.0
    h_range: tuple[int, ...] = field(default_factory=lambda: tuple(range(2, 21)))

    def __post_init__(self):
        object.__setattr__(self, "S", _checks.above_one(self.S, "S"))
        for name in ("r_c", "l_c", "theta_c"):
            object.__setattr__(self, name, _checks.positive(getattr(self, name), name))
        hs = tuple(_checks.integer(h, "h_range", 2) for h in self.h_range)
        if not hs:
            raise ParameterDomainError("h_range must not be empty", "h_range")
        object.__setattr__(self, "h_range", hs)

    @property
    def beta(self) -> float:
        return self.S**RADIUS_EXPONENT

    @property
    def gamma(self) -> float:
        return self.S**LENGTH_EXPONENT


def log_organism_volumes(scen: AllometryScenario, h: int) -> tuple[float, float]:
    """Natural logs of ``(V_Y, theta_M)``; never overflows."""
    h = _checks.integer(h, "h", 2)
    log_s = math.log(scen.S)
    log_beta = RADIUS_EXPONENT * log_s
    log_gamma = LENGTH_EXPONENT * log_s
    log_v = (
        math.log(h) + math.log(math.pi)
        - 2 * h * log_beta + 2 * math.log(scen.r_c)
        - h * log_gamma + math.log(scen.l_c)
    )
    log_theta = math.log(h) + h * log_s + math.log(scen.theta_c)
    return log_v, log_theta


def organism_volumes(scen: AllometryScenario, h: int) -> tuple[float, float]:
    """Circulatory volume ``V_Y`` and irrigated volume ``theta_M`` after ``h`` generations."""
    log_v, log_theta = log_organism_volumes(scen, h)
    return _checks.checked_exp(log_v, "h"), _checks.checked_exp(log_theta, "h")


def closed_form_exponent(S: float) -> float:
    """``a`` from ``1/a = log_S(beta**-2 * gamma**-1)``."""
    S = _checks.above_one(S, "S")
    beta = S**RADIUS_EXPONENT
    gamma = S**LENGTH_EXPONENT
    inverse_a = math.log(beta**-2 * gamma**-1) / math.log(S)
    return 1.0 / inverse_a


@dataclass(frozen=True)
class ExponentFit:
    """Result of :func:`fit_exponent`.

    ``a_hat`` comes from per-generation volumes (the common factor ``h``
    divided out of both sides); ``residual`` is the RMS residual of that
    log-log fit. ``raw_a_hat`` and ``raw_residual`` are the same quantities
    when the ``h`` factor is left in, which biases the slope by ``ln h``.
    """

    a_hat: float
    residual: float
    raw_a_hat: float
    raw_residual: float


def _ols(x, y):
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return slope, float(np.sqrt(np.mean(resid**2)))


def fit_exponent(scen: AllometryScenario) -> ExponentFit:
    """Least-squares estimate of ``a`` with ``V_Y ∝ theta_M**(1/a)``.

    Regresses ``ln V_Y`` on ``ln theta_M`` across ``scen.h_range`` and inverts
    the slope.
    """
    hs = sorted(set(scen.h_range))
    if len(hs) < 3:
        raise ParameterDomainError("h_range needs at least 3 distinct values", "h_range")
    logs = np.array([log_organism_volumes(scen, h) for h in hs])
    log_h = np.log(hs)
    slope, resid = _ols(logs[:, 1] - log_h, logs[:, 0] - log_h)
    raw_slope, raw_resid = _ols(logs[:, 1], logs[:, 0])
    return ExponentFit(1.0 / slope, resid, 1.0 / raw_slope, raw_resid)


def compensated_invariant(scen: AllometryScenario, h: int) -> float:
    """``ln V_Y - (4/3) ln theta_M + (1/3) ln h``, the same for every ``h``."""
    log_v, log_theta = log_organism_volumes(scen, h)
    return log_v - (4.0 / 3.0) * log_theta + math.log(h) / 3.0


def capillary_invariance_check(scen: AllometryScenario, h: int, a: float = KLEIBER_EXPONENT) -> float:
    """``beta**-2 * gamma**-1 / S**(1/a)``; equals 1 only when ``a = 3/4``.

    The ratio is the per-generation form of the capillary constraint and does
    not depend on ``h``, which is validated but otherwise unused.
    """
    _checks.integer(h, "h", 2)
    a = _checks.positive(a, "a")
    return scen.beta**-2 * scen.gamma**-1 / scen.S ** (1.0 / a)
