"""Sections of an isotropically radiating cone.

Moving one section outward, the absorbing volume grows by ``S``, the section
diameter by ``beta = S**(1/2)`` and its length by ``gamma = S**(1/3)``. The
transmitting volume ``beta**2 * gamma`` therefore grows by ``S**(4/3)`` per
section, and the transmit/absorb entropy ratio is exactly 4/3.

All powers are evaluated as ``exp(multiple * ln S)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _checks

TRANSMIT_EXPONENT = Fraction(4, 3)
DIAMETER_EXPONENT = Fraction(1, 2)
LENGTH_EXPONENT = Fraction(1, 3)


@dataclass(frozen=True)
class ConeGeometry:
    """First-section dimensions of a cone scaled by ``S``.

    Attributes
    ----------
    S : float
        Scaling factor, > 1.
    D1, L1 : float
        Diameter and perpendicular length of the first section.
    theta1 : float
        First absorbing volume.
    """

    S: float
    D1: float = 1.0
    L1: float = 1.0
    theta1: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "S", _checks.above_one(self.S, "S"))
        for name in ("D1", "L1", "theta1"):
            object.__setattr__(self, name, _checks.positive(getattr(self, name), name))

    @property
    def beta(self) -> float:
        return math.exp(float(DIAMETER_EXPONENT) * math.log(self.S))

    @property
    def gamma(self) -> float:
        return math.exp(float(LENGTH_EXPONENT) * math.log(self.S))

    @property
    def V1(self) -> float:
        """First transmitting volume ``D1**2 * L1``."""
        return self.D1**2 * self.L1


@dataclass(frozen=True)
class ConeSectionReport:
    k: int
    absorbing_volume: float
    transmitting_volume_ratio: float
    length_ratio: float
    diameter_ratio: float


def section_report(geom: ConeGeometry, k: int) -> ConeSectionReport:
    """Volumes and dimension ratios of section ``k + 1`` relative to section 1."""
    k = _checks.integer(k, "k", 1)
    log_s = math.log(geom.S)
    return ConeSectionReport(
        k=k,
        absorbing_volume=_checks.checked_exp(k * log_s, "k") * geom.theta1,
        transmitting_volume_ratio=_checks.checked_exp(float(TRANSMIT_EXPONENT * k) * log_s, "k"),
        length_ratio=math.exp(float(LENGTH_EXPONENT * k) * log_s),
        diameter_ratio=math.exp(float(DIAMETER_EXPONENT * k) * log_s),
    )


def entropy_ratio(S: float, k: int) -> Fraction:
    """Transmit entropy ``log_S(S**(4k/3))`` over absorb entropy ``log_S(S**k)``.

    Worked in exponent space, so the result is an exact rational.
    """
    _checks.above_one(S, "S")
    k = _checks.integer(k, "k", 1)
    transmit = (2 * DIAMETER_EXPONENT + LENGTH_EXPONENT) * k
    absorb = Fraction(k)
    return transmit / absorb


def fractal_dimension(S: float, k: int) -> float:
    """Dimension of the transmitting length measured in absorbing-length units.

    The absorbing length after ``k`` sections is ``(S**k)**(1/3)`` unit lengths
    and the transmitting length acts like ``(S**(4k/3))**(1/3)``; the ratio of
    their logarithms is 4/3 for every ``S`` and ``k``.
    """
    S = _checks.above_one(S, "S")
    k = _checks.integer(k, "k", 1)
    log_s = math.log(S)
    transmit_log_volume = (4.0 / 3.0) * k * log_s
    absorb_log_volume = k * log_s
    return (transmit_log_volume / 3.0) / (absorb_log_volume / 3.0)


def stefan_entropy_density_rate(E: float, T: float) -> float:
    """Entropy gained per unit volume, ``(4/3) E / T``."""
    E = _checks.nonnegative(E, "E")
    T = _checks.positive(T, "T")
    return (4.0 / 3.0) * E / T


@dataclass(frozen=True)
class HeatDecomposition:
    dQ: float
    internal_part: float
    emergent_part: float


def heat_decomposition(E: float, dE: float, v: float, dv: float) -> HeatDecomposition:
    """Split heat ``dQ = v dE + (4/3) E dv`` into ``d(Ev)`` and ``(1/3) E dv``.

    Arithmetic is done in the input types, so ``Fraction`` inputs give an
    exact decomposition.
    """
    _checks.nonnegative(E, "E")
    _checks.real(dE, "dE")
    _checks.positive(v, "v")
    _checks.real(dv, "dv")
    internal = v * dE + E * dv
    emergent = E * dv / 3
    return HeatDecomposition(dQ=internal + emergent, internal_part=internal, emergent_part=emergent)
