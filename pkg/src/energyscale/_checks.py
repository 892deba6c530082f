import math
import numbers

from .errors import ParameterDomainError, RangeOverflowError

# Largest x with exp(x) finite in IEEE double precision.
MAX_EXP_ARG = math.log(1.7976931348623157e308)


def real(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ParameterDomainError(f"{name} must be a real number, got {value!r}", name)
    value = float(value)
    if not math.isfinite(value):
        raise ParameterDomainError(f"{name} must be finite, got {value!r}", name)
    return value


def positive(value, name):
    value = real(value, name)
    if value <= 0:
        raise ParameterDomainError(f"{name} must be > 0, got {value!r}", name)
    return value


def nonnegative(value, name):
    value = real(value, name)
    if value < 0:
        raise ParameterDomainError(f"{name} must be >= 0, got {value!r}", name)
    return value


def above_one(value, name):
    value = real(value, name)
    if value <= 1:
        raise ParameterDomainError(f"{name} must be > 1, got {value!r}", name)
    return value


def integer(value, name, minimum=None, maximum=None):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        if isinstance(value, numbers.Real) and float(value).is_integer():
            value = int(value)
        else:
            raise ParameterDomainError(f"{name} must be an integer, got {value!r}", name)
    value = int(value)
    if minimum is not None and value < minimum:
        raise ParameterDomainError(f"{name} must be >= {minimum}, got {value}", name)
    if maximum is not None and value > maximum:
        raise ParameterDomainError(f"{name} must be <= {maximum}, got {value}", name)
    return value


def checked_exp(x, name):
    """exp(x), raising instead of returning inf."""
    if x > MAX_EXP_ARG:
        raise RangeOverflowError(f"exp({x:.6g}) overflows double precision", name)
    return math.exp(x)
