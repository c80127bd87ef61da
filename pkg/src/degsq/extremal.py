"""Quasi-star and quasi-complete constructions and their closed-form P2 values.

For every edge count e there are unique integers (k, j) with

    e = binom(k+1, 2) - j,   1 <= j <= k,

and the quasi-complete graph QC(v, e) is the complete graph on k vertices
with the part j removed from its staircase partition.  Dually, (k', j')
with e = binom(v,2) - binom(k'+1, 2) + j' describe the quasi-star graph
QS(v, e), the complement of QC(v, e') where e' = binom(v,2) - e.  C(v, e)
and S(v, e) are their sums of squared degrees; the maximum of P2 over all
graphs with v vertices and e edges is max(C, S).
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from .errors import EdgeOutOfRangeError
from .partitions import binom2, validate_vertex_count


class QCDecomposition(NamedTuple):
    k: int
    j: int


class QSDecomposition(NamedTuple):
    kp: int
    jp: int


def check_edge_range(v: int, e: int) -> None:
    validate_vertex_count(v)
    if not 0 <= e <= binom2(v):
        raise EdgeOutOfRangeError(f"e={e} outside [0, {binom2(v)}] for v={v}")


def qc_decompose(e: int) -> QCDecomposition:
    """The unique (k, j) with e = binom(k+1,2) - j and 1 <= j <= k.

    Equivalently k is the integer with binom(k,2) <= e < binom(k+1,2);
    solved by integer square root plus local adjustment, no floats.
    """
    if e < 0:
        raise EdgeOutOfRangeError(f"e={e} is negative")
    k = max(1, (1 + isqrt(1 + 8 * e)) // 2)
    while binom2(k) > e:
        k -= 1
    while binom2(k + 1) <= e:
        k += 1
    return QCDecomposition(k, binom2(k + 1) - e)


def qs_decompose(v: int, e: int) -> QSDecomposition:
    """The unique (k', j') with e = binom(v,2) - binom(k'+1,2) + j', 1 <= j' <= k'.

    This is the quasi-complete decomposition of the complementary edge
    count e' = binom(v,2) - e.  e = 0 yields the degenerate (v, v);
    e = binom(v,2) yields (1, 1).
    """
    check_edge_range(v, e)
    k, j = qc_decompose(binom2(v) - e)
    return QSDecomposition(k, j)


def quasi_complete(v: int, e: int) -> tuple[int, ...]:
    """Partition (k, k-1, ..., j^, ..., 2, 1) of e; j^ marks the deleted part."""
    check_edge_range(v, e)
    k, j = qc_decompose(e)
    return tuple(a for a in range(k, 0, -1) if a != j)


def quasi_star(v: int, e: int) -> tuple[int, ...]:
    """Partition (v-1, v-2, ..., k'+1, j') of e; empty when e = 0."""
    check_edge_range(v, e)
    kp, jp = qs_decompose(v, e)
    if kp == v:
        return ()
    return tuple(range(v - 1, kp, -1)) + (jp,)


def value_C(v: int, e: int) -> int:
    """Sum of squared degrees of the quasi-complete graph, in closed form.

    C = j*(k-1)^2 + (k-j)*k^2 + (k-j)^2; v enters only the range check.
    """
    check_edge_range(v, e)
    k, j = qc_decompose(e)
    return j * (k - 1) ** 2 + (k - j) * k * k + (k - j) ** 2


def value_S(v: int, e: int) -> int:
    """Sum of squared degrees of the quasi-star graph: C(v, e') + (v-1)(4e - v(v-1))."""
    check_edge_range(v, e)
    return value_C(v, binom2(v) - e) + (v - 1) * (4 * e - v * (v - 1))


def max_p2(v: int, e: int) -> int:
    """Maximum of P2 over all simple graphs with v vertices and e edges."""
    return max(value_S(v, e), value_C(v, e))


def max_line_graph_edges(v: int, e: int) -> int:
    """Maximum number of edges in a line graph L(G) over the class: max P2 / 2 - e."""
    return max_p2(v, e) // 2 - e
