"""Entropy dating and network-value growth.

A system whose entropy rate grows as ``exp(m*t)`` reached its current rate
``H_prime`` after ``t = ln(H_prime)/m`` time units. Rates are plain numbers
per time unit (0.0283 per thousand years, not 2.83).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _checks
from .errors import InputParseError, ParameterDomainError

#: lexical divergence between related languages runs at four times growth
DIVERGENCE_TO_GROWTH = 4


@dataclass(frozen=True)
class DatingScenario:
    H_prime: float
    m: float
    time_unit: str = "ky"

    def __post_init__(self):
        H = _checks.real(self.H_prime, "H_prime")
        if H <= 1:
            raise ParameterDomainError(
                f"H_prime must be > 1 for a positive age, got {H!r}", "H_prime"
            )
        object.__setattr__(self, "H_prime", H)
        object.__setattr__(self, "m", _checks.positive(self.m, "m"))


def solve_age(scen: DatingScenario) -> float:
    """Age ``t`` solving ``exp(m*t) = H_prime``, in ``scen.time_unit``."""
    return math.log(scen.H_prime) / scen.m


def glottochronology_check(divergence_rate: float) -> float:
    """Growth rate implied by an observed lexical divergence rate."""
    divergence_rate = _checks.positive(divergence_rate, "divergence_rate")
    return divergence_rate / DIVERGENCE_TO_GROWTH


def rate_from_entropy(H_prime: float, h: float) -> float:
    """Entropy change per generation, ``m = H_prime / h``."""
    H_prime = _checks.positive(H_prime, "H_prime")
    h = _checks.positive(h, "h")
    return H_prime / h


@dataclass(frozen=True)
class ValueDelta:
    n1: int
    A: int
    m: float
    C: float
    L: float
    delta_H: float

    @property
    def n2(self) -> int:
        return self.n1 + self.A


def network_value_delta(n1: int, A: int, m: float, C: float, L: float) -> ValueDelta:
    """Gain in entropy rate, ``m*C*log_L(1 + A/n1)``, from adding ``A`` members to ``n1``."""
    n1 = _checks.integer(n1, "n1", 1)
    A = _checks.integer(A, "A", 0)
    m = _checks.positive(m, "m")
    C = _checks.positive(C, "C")
    if C > 1:
        raise ParameterDomainError(f"C must lie in (0, 1], got {C!r}", "C")
    L = _checks.above_one(L, "L")
    delta = m * C * math.log1p(A / n1) / math.log(L)
    return ValueDelta(n1, A, m, C, L, delta)


def parse_key_values(text: str, allowed) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` lines and blank lines are ignored.

    Inline ``# ...`` after a value is stripped. Unknown or repeated keys are
    errors.
    """
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise InputParseError("expected 'key = value'", lineno, "scenario")
        if key not in allowed:
            raise InputParseError(f"unknown key {key!r}", lineno, "scenario")
        if key in out:
            raise InputParseError(f"duplicate key {key!r}", lineno, "scenario")
        out[key] = value
    return out


def _number(fields, key, convert=float):
    if key not in fields:
        raise ParameterDomainError(f"scenario is missing {key!r}", key)
    try:
        return convert(fields[key])
    except ValueError:
        raise ParameterDomainError(f"{key} is not a number: {fields[key]!r}", key) from None


def parse_dating_scenario(text: str) -> DatingScenario:
    fields = parse_key_values(text, {"H_prime", "m", "time_unit"})
    return DatingScenario(
        H_prime=_number(fields, "H_prime"),
        m=_number(fields, "m"),
        time_unit=fields.get("time_unit", "ky"),
    )


def parse_value_scenario(text: str) -> dict:
    """Keyword arguments for :func:`network_value_delta` from a key/value document."""
    fields = parse_key_values(text, {"n1", "A", "m", "C", "L"})
    return {
        "n1": _number(fields, "n1", int),
        "A": _number(fields, "A", int),
        "m": _number(fields, "m"),
        "C": _number(fields, "C"),
        "L": _number(fields, "L"),
    }


def load_dating_scenario(path) -> DatingScenario:
    with open(path, encoding="utf-8") as fh:
        return parse_dating_scenario(fh.read())


def load_value_scenario(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return parse_value_scenario(fh.read())
