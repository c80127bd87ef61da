"""Exact analysis of the difference S(v,e) - C(v,e) for fixed v.

The difference is piecewise linear in e with breakpoints at the binomial
coefficients binom(j,2) and their complements binom(v,2) - binom(j,2).
Its global behaviour is governed by the sign of the even integer

    q0(v) = (1 - 2*(2*k0 - 3)^2 + (2*v - 5)^2) / 4,

where k0 is the integer with binom(k0,2) <= m < binom(k0+1,2) and
m = binom(v,2)/2:

  * q0 > 0: S >= C on [0, m], equal only at e, e' in {0,1,2,3,m}, plus
    e = e0 = binom(k0,2) exactly when (2v-3)^2 - 2*(2k0-1)^2 is -1 or 7.
  * q0 < 0: S >= C up to m - R0 and C >= S from there to m, with
    R0 = 8*(m - e0)*(k0 - 2) / ((2v-5)^2 - 2*(2k0-4)^2 - 1);
    equality only at e, e' in {0,1,2,3, m-R0, m} (integral points only).
  * q0 = 0: S >= C on [0, m] with a full equality plateau e0 .. m.

The predicted equality sets above are double-checked against a direct
scan of every integer e; a profile records both and flags mismatches
instead of trusting the formulas.

All decision arithmetic is exact (integers and fractions).  The only
floats live in the one-sided envelope bounds U and L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Optional

from .errors import DenominatorZeroError, EdgeOutOfRangeError, VertexCountTooSmallError
from .extremal import check_edge_range, qc_decompose, value_C, value_S
from .partitions import binom2

Q0_POSITIVE = "Q0_POSITIVE"
Q0_ZERO = "Q0_ZERO"
Q0_NEGATIVE = "Q0_NEGATIVE"


def k0_of(v: int) -> int:
    """The integer k0 with binom(k0,2) <= binom(v,2)/2 < binom(k0+1,2)."""
    if v < 2:
        raise VertexCountTooSmallError(f"v={v} < 2")
    target = v * (v - 1)  # compare 2*k*(k-1) <= v*(v-1), all integers
    k = max(1, (1 + isqrt(1 + 2 * target)) // 2)
    while 2 * k * (k - 1) > target:
        k -= 1
    while 2 * (k + 1) * k <= target:
        k += 1
    return k


@dataclass(frozen=True)
class MidpointParams:
    v: int
    m: Fraction
    k0: int
    b0: Fraction
    e0: int
    e1: int
    f1: int
    f2: int


def midpoint_params(v: int) -> MidpointParams:
    """Midpoint m, the bracketing index k0, and the nearby breakpoints."""
    k0 = k0_of(v)
    m = Fraction(binom2(v), 2)
    e0 = binom2(k0)
    return MidpointParams(
        v=v,
        m=m,
        k0=k0,
        b0=m - e0,
        e0=e0,
        e1=binom2(k0 - 1),
        f1=binom2(v) - binom2(k0 + 1),
        f2=binom2(v) - binom2(k0 + 2),
    )


def q0_numerator(v: int) -> int:
    """4*q0(v) as an integer (always divisible by 4, in fact by 8)."""
    k0 = k0_of(v)
    return 1 - 2 * (2 * k0 - 3) ** 2 + (2 * v - 5) ** 2


def q0(v: int) -> Fraction:
    """The sign discriminant q0(v); an even integer for every v >= 2."""
    return Fraction(q0_numerator(v), 4)


def r0(v: int) -> Fraction:
    """Crossing radius R0(v): S - C vanishes at e = m - R0 when q0(v) < 0."""
    params = midpoint_params(v)
    denom = (2 * v - 5) ** 2 - 2 * (2 * params.k0 - 4) ** 2 - 1
    if denom == 0:
        raise DenominatorZeroError(f"crossing radius undefined for v={v}")
    return 8 * params.b0 * (params.k0 - 2) / denom


def diff(v: int, e: int) -> int:
    """S(v, e) - C(v, e)."""
    return value_S(v, e) - value_C(v, e)


class Segment(NamedTuple):
    lo: int
    hi: int
    slope: int
    diff_lo: int
    diff_hi: int


@dataclass(frozen=True)
class SignProfile:
    v: int
    m: Fraction
    k0: int
    q0: Fraction
    classification: Optional[str]
    r0: Optional[Fraction]
    equality_edges: tuple[int, ...]
    predicted_equality_edges: Optional[tuple[int, ...]]
    prediction_matches: Optional[bool]
    segments: tuple[Segment, ...]


def _segments(v: int) -> tuple[Segment, ...]:
    total = binom2(v)
    points = sorted({binom2(j) for j in range(1, v + 1)}
                    | {total - binom2(j) for j in range(1, v + 1)})
    segments = []
    for lo, hi in zip(points, points[1:]):
        k = qc_decompose(lo).k
        l = qc_decompose(total - lo - 1).k
        slope = ((2 * k - 3) ** 2 + (2 * l - 3) ** 2 - (2 * v - 5) ** 2 - 1) // 4
        segments.append(Segment(lo, hi, slope, diff(v, lo), diff(v, hi)))
    return tuple(segments)


def _predicted_equality(v: int, params: MidpointParams, q0_value: Fraction) -> tuple[int, ...]:
    total = binom2(v)
    pred = {e for e in (0, 1, 2, 3) if e <= total}
    if params.m.denominator == 1:
        pred.add(int(params.m))
    if q0_value > 0:
        # The e0 case follows the proof's (2k0-1) form; the theorem's
        # printed (2k0-3) form contradicts the direct scan already at v=15.
        if (2 * v - 3) ** 2 - 2 * (2 * params.k0 - 1) ** 2 in (-1, 7):
            pred.add(params.e0)
    elif q0_value < 0:
        crossing = params.m - r0(v)
        if crossing.denominator == 1:
            pred.add(int(crossing))
    else:
        pred.update(range(params.e0, math.floor(params.m) + 1))
    pred |= {total - e for e in pred}
    return tuple(sorted(pred))


def profile(v: int) -> SignProfile:
    """Full sign profile: segments, scanned and (for v >= 5) predicted zeros."""
    params = midpoint_params(v)
    q0_value = q0(v)
    scanned = tuple(e for e in range(binom2(v) + 1) if diff(v, e) == 0)

    classification = predicted = matches = r0_value = None
    if v >= 5:
        if q0_value > 0:
            classification = Q0_POSITIVE
        elif q0_value < 0:
            classification = Q0_NEGATIVE
            r0_value = r0(v)
        else:
            classification = Q0_ZERO
        predicted = _predicted_equality(v, params, q0_value)
        matches = predicted == scanned

    return SignProfile(
        v=v,
        m=params.m,
        k0=params.k0,
        q0=q0_value,
        classification=classification,
        r0=r0_value,
        equality_edges=scanned,
        predicted_equality_edges=predicted,
        prediction_matches=matches,
        segments=_segments(v),
    )


def classify(v: int) -> SignProfile:
    """Trichotomy classification by the sign of q0; requires v >= 5."""
    if v < 5:
        raise VertexCountTooSmallError(f"classification needs v >= 5, got v={v}")
    return profile(v)


def bound_U(e: int) -> float:
    """Upper envelope e*(sqrt(8e+1) - 1) for C(v, e); valid for e >= 2."""
    if e < 2:
        raise EdgeOutOfRangeError(f"U(e) needs e >= 2, got e={e}")
    return e * (math.sqrt(8 * e + 1) - 1.0)


def bound_L(e: int) -> float:
    """Lower envelope e*(sqrt(8e+1) - 1.5) for C(v, e); valid for e >= 3."""
    if e < 3:
        raise EdgeOutOfRangeError(f"L(e) needs e >= 3, got e={e}")
    return e * (math.sqrt(8 * e + 1) - 1.5)


def crossing_audit(v_max: int, v_min: int = 5, negative_q0_only: bool = True) -> dict[int, Fraction]:
    """m - R0 for every v in [v_min, v_max], exactly.

    With negative_q0_only (the default) the audit covers the regime where
    m - R0 is an actual sign crossing; integrality of the value is what
    puts that crossing on an edge count, so callers inspect .denominator.
    With negative_q0_only=False the formula is evaluated formally for all
    v, including those with q0 >= 0 where the value no longer marks a
    crossing.
    """
    audit: dict[int, Fraction] = {}
    for v in range(v_min, v_max + 1):
        if negative_q0_only and q0_numerator(v) >= 0:
            continue
        params = midpoint_params(v)
        audit[v] = params.m - r0(v)
    return audit


def profile_rows(v: int):
    """Yield (v, e, S, C, diff) for every integer e; the CSV body."""
    check_edge_range(v, 0)
    for e in range(binom2(v) + 1):
        s, c = value_S(v, e), value_C(v, e)
        yield (v, e, s, c, s - c)


def format_rational(x: Fraction) -> str:
    """Integers in plain decimal, non-integers as num/den."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sidecar_dict(prof: SignProfile) -> dict:
    """JSON-ready summary accompanying a profile CSV."""
    return {
        "v": prof.v,
        "classification": prof.classification,
        "q0": format_rational(prof.q0),
        "r0": None if prof.r0 is None else format_rational(prof.r0),
        "m": format_rational(prof.m),
        "k0": prof.k0,
        "equality_edges": list(prof.equality_edges),
        "predicted_equality_edges": (
            None if prof.predicted_equality_edges is None
            else list(prof.predicted_equality_edges)
        ),
        "prediction_matches": prof.prediction_matches,
        "segments": [{"lo": s.lo, "hi": s.hi, "slope": s.slope} for s in prof.segments],
    }
