"""Nested cluster generations of an energy-scaled network.

A source feeding ``n = S**h`` nodes distributes its energy through ``h``
generations of nested clusters. With an energy unit ``epsilon`` the k-th
generation holds ``exp(k*epsilon)`` clusters of ``epsilon*exp(epsilon*(h-k))``
units each, so every generation carries the same total ``epsilon*exp(h*epsilon)``.

The unit model (base ``S``, energy unit 1 per step) is the special case
``epsilon = ln(S)``; see :meth:`ScalingModel.unit`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import optimize

from . import _checks
from .errors import RangeOverflowError

MAX_GENERATIONS = 10_000
MAX_SUM_GENERATIONS = 1_000


@dataclass(frozen=True)
class ScalingModel:
    """Scaling factor ``S``, generation count ``h`` and energy unit ``epsilon``."""

    S: float
    h: int
    epsilon: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "S", _checks.above_one(self.S, "S"))
        object.__setattr__(self, "h", _checks.integer(self.h, "h", 1, MAX_GENERATIONS))
        object.__setattr__(self, "epsilon", _checks.positive(self.epsilon, "epsilon"))

    @classmethod
    def unit(cls, S: float, h: int) -> "ScalingModel":
        """Unit model: ``exp(k*epsilon) == S**k`` clusters in generation k."""
        S = _checks.above_one(S, "S")
        return cls(S=S, h=h, epsilon=math.log(S))

    @property
    def n(self) -> float:
        """Node count ``S**h``."""
        return _checks.checked_exp(self.h * math.log(self.S), "h")

    @property
    def generation_total(self) -> float:
        """Energy carried by any one generation, ``epsilon * exp(h*epsilon)``."""
        return self.epsilon * _checks.checked_exp(self.h * self.epsilon, "h")


@dataclass(frozen=True)
class GenerationRow:
    k: int
    cluster_count: float
    energy_per_cluster: float
    generation_total: float


def generation_table(model: ScalingModel) -> list[GenerationRow]:
    """Per-generation cluster counts and energies for ``model``.

    Raises
    ------
    RangeOverflowError
        If ``exp(h*epsilon)`` is not representable.
    """
    h, eps = model.h, model.epsilon
    _checks.checked_exp(h * eps, "h")
    rows = []
    for k in range(1, h + 1):
        count = math.exp(k * eps)
        per_cluster = math.exp(eps * (h - k)) * eps
        rows.append(GenerationRow(k, count, per_cluster, count * per_cluster))
    return rows


def _check_sum_args(epsilon, h):
    epsilon = _checks.positive(epsilon, "epsilon")
    h = _checks.integer(h, "h", 1, MAX_SUM_GENERATIONS)
    _checks.checked_exp(h * epsilon, "h")
    return epsilon, h


def geometric_sum_G(epsilon: float, h: int) -> float:
    """Total energy in one chain of nested clusters over ``h`` generations.

    Closed form of ``sum(epsilon * exp((h - j) * epsilon) for j in 1..h)``:
    ``epsilon * (exp(h*epsilon) - 1) / (exp(epsilon) - 1)``.
    """
    epsilon, h = _check_sum_args(epsilon, h)
    return epsilon * math.expm1(h * epsilon) / math.expm1(epsilon)


def mean_energy_per_source(epsilon: float, h: int) -> float:
    """``geometric_sum_G`` divided by the source's ``exp(h*epsilon)`` units.

    Equals ``epsilon * (1 - exp(-h*epsilon)) / (exp(epsilon) - 1)`` and rises
    monotonically towards ``epsilon / (exp(epsilon) - 1)`` as ``h`` grows.
    """
    epsilon, h = _check_sum_args(epsilon, h)
    return -epsilon * math.expm1(-h * epsilon) / math.expm1(epsilon)


def mean_energy_limit(epsilon: float) -> float:
    """Infinite-generation limit ``epsilon / (exp(epsilon) - 1)``."""
    epsilon = _checks.positive(epsilon, "epsilon")
    return epsilon / math.expm1(epsilon)


def oscillator_mean(epsilon: float, kT: float) -> float:
    """Mean energy of a linear oscillator with quantum ``epsilon`` at temperature ``kT``."""
    epsilon = _checks.positive(epsilon, "epsilon")
    kT = _checks.positive(kT, "kT")
    x = epsilon / kT
    if x > _checks.MAX_EXP_ARG:
        return 0.0
    return epsilon / math.expm1(x)


def balance_ratio(S: float, h: int = 1) -> float:
    """Received rate ``1/(S**h ln S)`` over transmitted rate ``1/S**h``.

    The network is balanced (receipt equals distribution per node) when this
    is 1.
    """
    S = _checks.above_one(S, "S")
    h = _checks.integer(h, "h", 1, MAX_GENERATIONS)
    nodes = _checks.checked_exp(h * math.log(S), "h")
    received = 1.0 / (nodes * math.log(S))
    return received * nodes


def solve_optimal_base(bracket: tuple[float, float] = (2.0, 3.0), xtol: float = 1e-12) -> float:
    """Scaling factor at which ``balance_ratio`` equals 1, found by bisection."""
    return optimize.bisect(lambda S: balance_ratio(S) - 1.0, *bracket, xtol=xtol, maxiter=200)


def nested_sum_check(S: float, h: int) -> float:
    """Residual of ``sum(S**i, 1..h) - S**h - sum(S**i, 1..h-1)``.

    The node counts of generations after the first add nothing new, so the
    residual is zero up to rounding (relative to ``S**h``).
    """
    S = _checks.above_one(S, "S")
    h = _checks.integer(h, "h", 1, MAX_GENERATIONS)
    log_s = math.log(S)
    top = _checks.checked_exp(h * log_s, "h")
    if h > 1 and top * S / (S - 1) > 1.7e308:
        raise RangeOverflowError("generation sum overflows double precision", "h")
    powers = [math.exp(i * log_s) for i in range(1, h)]
    return math.fsum(powers + [top]) - top - math.fsum(powers)
