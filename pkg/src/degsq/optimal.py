"""Complete enumeration of the optimal partitions for a class (v, e).

Every partition whose threshold graph attains the maximum P2 is one of six
candidates built from the quasi-star decomposition (k', j') and the
quasi-complete decomposition (k, j):

    1.1  (v-1, v-2, ..., k'+1, j')                 always exists
    1.2  (v-1, ..., w^, ..., k'-1), w = 2k'-j'-1    if k'+1 <= w <= v-1
    1.3  (v-1, v-2, ..., k'+1, 2, 1)                if j' = 3 and v >= 4
    2.1  (k, k-1, ..., j^, ..., 2, 1)               always exists
    2.2  (2k-j-1, k-2, k-3, ..., 2, 1)              if k+1 <= 2k-j-1 <= v-1
    2.3  (k, k-1, ..., 3)                           if j = 3 and v >= 4

The 1.x candidates share the diagonal sequence of the quasi-star and are
all optimal when S >= C; dually the 2.x candidates are optimal when
C >= S.  Distinct labels can produce equal partitions for small v or
near-empty/near-complete e, so the report deduplicates structurally while
keeping every producing label visible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .extremal import check_edge_range, qc_decompose, qs_decompose, value_C, value_S
from .partitions import p2_value

LABELS = ("1.1", "1.2", "1.3", "2.1", "2.2", "2.3")


class OptimalPartition(NamedTuple):
    parts: tuple[int, ...]
    labels: tuple[str, ...]
    p2: int


@dataclass(frozen=True)
class OptimalReport:
    v: int
    e: int
    s_value: int
    c_value: int
    candidates: dict[str, tuple[int, ...]]
    optimal: tuple[OptimalPartition, ...]

    @property
    def max_value(self) -> int:
        return max(self.s_value, self.c_value)

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "e": self.e,
            "S": self.s_value,
            "C": self.c_value,
            "max": self.max_value,
            "candidates": {label: list(parts) for label, parts in self.candidates.items()},
            "optimal": [
                {"parts": list(entry.parts), "labels": list(entry.labels), "p2": entry.p2}
                for entry in self.optimal
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def candidates(v: int, e: int) -> dict[str, tuple[int, ...]]:
    """Every candidate partition that exists for (v, e), keyed by label."""
    check_edge_range(v, e)
    k, j = qc_decompose(e)
    kp, jp = qs_decompose(v, e)
    found: dict[str, tuple[int, ...]] = {}

    if kp == v:
        found["1.1"] = ()
    else:
        found["1.1"] = tuple(range(v - 1, kp, -1)) + (jp,)
        w = 2 * kp - jp - 1
        if kp + 1 <= w <= v - 1:
            found["1.2"] = tuple(a for a in range(v - 1, kp - 2, -1) if a != w)
        if jp == 3 and v >= 4:
            found["1.3"] = tuple(range(v - 1, kp, -1)) + (2, 1)

    found["2.1"] = tuple(a for a in range(k, 0, -1) if a != j)
    w = 2 * k - j - 1
    if k + 1 <= w <= v - 1:
        found["2.2"] = (w,) + tuple(range(k - 2, 0, -1))
    if j == 3 and v >= 4:
        found["2.3"] = tuple(range(k, 2, -1))

    return found


def optimal_set(v: int, e: int) -> OptimalReport:
    """All optimal partitions for (v, e), deduplicated, with producing labels."""
    cand = candidates(v, e)
    s, c = value_S(v, e), value_C(v, e)
    winners = []
    if s >= c:
        winners.extend(label for label in LABELS if label.startswith("1.") and label in cand)
    if c >= s:
        winners.extend(label for label in LABELS if label.startswith("2.") and label in cand)

    by_parts: dict[tuple[int, ...], list[str]] = {}
    order: list[tuple[int, ...]] = []
    for label in winners:
        parts = cand[label]
        if parts not in by_parts:
            by_parts[parts] = []
            order.append(parts)
        by_parts[parts].append(label)

    optimal = tuple(
        OptimalPartition(parts, tuple(by_parts[parts]), p2_value(parts)) for parts in order
    )
    return OptimalReport(v=v, e=e, s_value=s, c_value=c, candidates=cand, optimal=optimal)


def optimal_count(v: int, e: int) -> int:
    """Number of distinct optimal partitions (1 through 6)."""
    return len(optimal_set(v, e).optimal)
