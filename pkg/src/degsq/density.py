"""Density of the v for which the quasi-star graph is optimal out to the midpoint.

A vertex count v is counted as dominant when S(v, e) >= C(v, e) holds for
every 0 <= e <= m.  For v >= 5 that is q0(v) >= 0, plus the sparse family
with q0(v) < 0 but m = binom(k0,2): there the crossing radius R0 is zero
and the would-be negative window collapses to the midpoint itself (the
first such v are 21, 120, 697).  For v <= 4 every class has S = C, so
those v count as dominant by convention.  The fraction of dominant v
below t tends to 2 - sqrt(2) ~ 0.5858; the R0 = 0 family is too thin to
move the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .signs import k0_of, q0_numerator


def qs_dominant(v: int) -> bool:
    """Whether the quasi-star graph is optimal for every e up to the midpoint."""
    if v <= 4:
        return True
    if q0_numerator(v) >= 0:
        return True
    # q0 < 0 still leaves no integer e with S < C when b0 = 0: then R0 = 0,
    # and R0 > b0 >= 1/2 otherwise, so b0 = 0 is exactly the boundary case
    k0 = k0_of(v)
    return v * (v - 1) == 2 * k0 * (k0 - 1)


@dataclass(frozen=True)
class DensityReport:
    t: int
    n: int
    ratio: Fraction

    @property
    def decimal(self) -> str:
        return f"{self.n / self.t:.6f}"

    def to_json_dict(self) -> dict:
        return {"t": self.t, "n": self.n, "ratio": f"{self.n}/{self.t}", "decimal": self.decimal}


def density(t: int) -> DensityReport:
    """Count of dominant v in [1, t] and the exact ratio n/t."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    n = sum(1 for v in range(1, t + 1) if qs_dominant(v))
    return DensityReport(t=t, n=n, ratio=Fraction(n, t))


def density_rows(t: int):
    """Yield (v, q0_sign, dominant) for every v in [1, t]; the CSV body."""
    for v in range(1, t + 1):
        if v < 2:
            sign = 0
        else:
            num = q0_numerator(v)
            sign = 0 if num == 0 else (1 if num > 0 else -1)
        yield (v, sign, qs_dominant(v))
