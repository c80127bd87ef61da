"""Independent brute-force checks of the closed forms and the optimal sets.

Two oracles, deliberately unrelated to the candidate formulas:

  * partition oracle: exhaust every strictly decreasing partition of e
    with parts below v and take the P2 maximum with its full argmax set
    (moderate v; the count doubles with each vertex);
  * graph oracle: exhaust every e-subset of the edge slots of the
    complete graph (tiny v), so the threshold-graph reduction itself is
    exercised, not assumed.

The graph sweep walks all edge subsets in binary-reflected Gray-code
order, toggling one edge per step and maintaining the degree vector and
P2 incrementally, which covers every e in a single pass over 2^binom(v,2)
states.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import CapExceededError
from .extremal import check_edge_range, max_p2
from .optimal import optimal_set
from .partitions import binom2, p2_value

DEFAULT_PARTITION_CAP = 16
DEFAULT_GRAPH_CAP = 7
# 2^36 edge subsets and up is out of the question no matter the config.
HARD_GRAPH_CAP = 9


def enum_distinct_partitions(v: int, e: int) -> Iterator[tuple[int, ...]]:
    """Every strictly decreasing partition of e with parts < v, lexicographically ascending."""
    check_edge_range(v, e)
    yield from _distinct(e, v - 1)


def _distinct(e: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if e == 0:
        yield ()
        return
    for a in range(1, min(max_part, e) + 1):
        # parts below a can cover at most binom(a,2) of the remainder
        if e - a <= binom2(a):
            for rest in _distinct(e - a, a - 1):
                yield (a,) + rest


@dataclass(frozen=True)
class OracleReport:
    v: int
    e: int
    brute_max: int
    closed_form_max: int
    brute_argmax: tuple[tuple[int, ...], ...]
    enum_argmax: tuple[tuple[int, ...], ...]
    agree: bool


def brute_max_partitions(v: int, e: int, cap: int = DEFAULT_PARTITION_CAP) -> OracleReport:
    """Exhaustive maximum of P2 over distinct partitions, with argmax set."""
    if v > cap:
        raise CapExceededError(f"v={v} above partition-oracle cap {cap}")
    check_edge_range(v, e)
    best = -1
    argmax: list[tuple[int, ...]] = []
    for parts in enum_distinct_partitions(v, e):
        p2 = p2_value(parts)
        if p2 > best:
            best = p2
            argmax = [parts]
        elif p2 == best:
            argmax.append(parts)
    report = optimal_set(v, e)
    brute_argmax = tuple(sorted(argmax))
    enum_argmax = tuple(sorted(entry.parts for entry in report.optimal))
    closed = max_p2(v, e)
    return OracleReport(
        v=v,
        e=e,
        brute_max=best,
        closed_form_max=closed,
        brute_argmax=brute_argmax,
        enum_argmax=enum_argmax,
        agree=(best == closed and brute_argmax == enum_argmax),
    )


@lru_cache(maxsize=8)
def _graph_maxima(v: int) -> tuple[int, ...]:
    """Maximum P2 per edge count over all labeled graphs on v vertices."""
    slots = [(a, b) for a in range(v) for b in range(a + 1, v)]
    n = len(slots)
    best = [-1] * (n + 1)
    best[0] = 0
    deg = [0] * v
    p2 = 0
    count = 0
    mask = 0
    for i in range(1, 1 << n):
        b = (i & -i).bit_length() - 1
        bit = 1 << b
        x, y = slots[b]
        mask ^= bit
        if mask & bit:
            p2 += 2 * (deg[x] + deg[y]) + 2
            deg[x] += 1
            deg[y] += 1
            count += 1
        else:
            deg[x] -= 1
            deg[y] -= 1
            p2 -= 2 * (deg[x] + deg[y]) + 2
            count -= 1
        if p2 > best[count]:
            best[count] = p2
    return tuple(best)


def brute_max_graphs(v: int, e: int, cap: int = DEFAULT_GRAPH_CAP) -> int:
    """Exhaustive maximum of P2 over ALL graphs with v vertices and e edges."""
    if v > HARD_GRAPH_CAP:
        raise CapExceededError(f"v={v} above hard graph-oracle limit {HARD_GRAPH_CAP}")
    if v > cap:
        raise CapExceededError(f"v={v} above graph-oracle cap {cap}")
    check_edge_range(v, e)
    return _graph_maxima(v)[e]


@dataclass(frozen=True)
class VerifyReport:
    checked: tuple[dict, ...]
    disagreements: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {"checked": list(self.checked), "disagreements": list(self.disagreements)}


def verify_range(
    v_max_partitions: int,
    v_max_graphs: int,
    partition_cap: int = DEFAULT_PARTITION_CAP,
    graph_cap: int = DEFAULT_GRAPH_CAP,
) -> VerifyReport:
    """Run both oracles over every class up to the given bounds.

    The returned disagreement list is expected to stay empty; any entry is
    a counterexample to the closed forms or the optimal-set enumeration.
    """
    checked = []
    disagreements = []
    for v in range(1, v_max_partitions + 1):
        for e in range(binom2(v) + 1):
            report = brute_max_partitions(v, e, cap=partition_cap)
            if not report.agree:
                disagreements.append(
                    {
                        "kind": "partitions",
                        "v": v,
                        "e": e,
                        "brute_max": report.brute_max,
                        "closed_form_max": report.closed_form_max,
                        "brute_argmax": [list(p) for p in report.brute_argmax],
                        "enum_argmax": [list(p) for p in report.enum_argmax],
                    }
                )
        checked.append({"kind": "partitions", "v": v, "classes": binom2(v) + 1})
    for v in range(1, v_max_graphs + 1):
        for e in range(binom2(v) + 1):
            brute = brute_max_graphs(v, e, cap=graph_cap)
            closed = max_p2(v, e)
            if brute != closed:
                disagreements.append(
                    {"kind": "graphs", "v": v, "e": e, "brute_max": brute, "closed_form_max": closed}
                )
        checked.append({"kind": "graphs", "v": v, "classes": binom2(v) + 1})
    return VerifyReport(checked=tuple(checked), disagreements=tuple(disagreements))
