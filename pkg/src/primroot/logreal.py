"""Positive reals carried as their natural logarithm."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import total_ordering

LN10 = math.log(10)


@total_ordering
@dataclass(frozen=True)
class LogReal:
    """A positive real ``exp(log_value)``.

    Products and quotients are exact in the log domain; sums use log-sum-exp.
    Values such as 5e1295 that overflow a float are fine.
    """

    log_value: float

    @classmethod
    def from_value(cls, x: float | int) -> LogReal:
        if x <= 0:
            raise ValueError(f"LogReal needs a positive value, got {x}")
        # math.log accepts arbitrarily large ints
        return cls(math.log(x))

    @classmethod
    def from_log10(cls, x: float) -> LogReal:
        return cls(x * LN10)

    def __mul__(self, other: LogReal | float) -> LogReal:
        if not isinstance(other, LogReal):
            other = LogReal.from_value(other)
        return LogReal(self.log_value + other.log_value)

    __rmul__ = __mul__

    def __truediv__(self, other: LogReal | float) -> LogReal:
        if not isinstance(other, LogReal):
            other = LogReal.from_value(other)
        return LogReal(self.log_value - other.log_value)

    def __add__(self, other: LogReal | float) -> LogReal:
        if not isinstance(other, LogReal):
            other = LogReal.from_value(other)
        return LogReal(float(_logaddexp(self.log_value, other.log_value)))

    __radd__ = __add__

    def __pow__(self, exponent: float) -> LogReal:
        return LogReal(self.log_value * exponent)

    def __lt__(self, other: LogReal) -> bool:
        return self.log_value < other.log_value

    @property
    def log10(self) -> float:
        return self.log_value / LN10

    def to_float(self) -> float:
        """Plain float value; raises OverflowError when not representable."""
        return math.exp(self.log_value)

    def ceil_int(self) -> int:
        """An integer no smaller than the represented value (slightly generous)."""
        with localcontext() as ctx:
            ctx.prec = max(40, int(self.log10) + 30)
            v = Decimal(repr(self.log_value)).exp() * (1 + Decimal("1e-12"))
            return int(v.to_integral_value(rounding="ROUND_CEILING"))

    def __str__(self) -> str:
        return sci(self)


def _logaddexp(a: float, b: float) -> float:
    hi, lo = max(a, b), min(a, b)
    return hi + math.log1p(math.exp(lo - hi))


def sci(x: LogReal, digits: int = 3) -> str:
    """Scientific notation for huge values, e.g. ``5.00e1295``."""
    e = math.floor(x.log10)
    mant = 10 ** (x.log10 - e)
    if round(mant, digits - 1) >= 10:
        mant, e = mant / 10, e + 1
    return f"{mant:.{digits - 1}f}e{e}"
