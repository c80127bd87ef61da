"""Distinct partitions, threshold graphs, and the diagonal-sequence evaluation of P2.

A strictly decreasing partition pi = (a_0 > a_1 > ... > a_p > 0) with all
parts below v encodes a threshold graph on v vertices: row t of the
upper-triangular adjacency matrix holds dots in columns t+1 .. t+a_t
(rows and columns 0-indexed).  P2 denotes the sum of squared vertex
degrees.  Every dot at position (i, j) contributes i + j to P2/2, so dots
on the same antidiagonal d = i + j contribute equally, and

    P2 = 2 * sum_d d * delta_d

where delta_d counts the dots on antidiagonal d (the diagonal sequence).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotStrictlyDecreasingError, PartOutOfRangeError

# P2 <= v*(v-1)^2 stays well inside exact-integer range everywhere below
# this bound; family scans never need a larger v.
MAX_VERTICES = 10**6


def binom2(n: int) -> int:
    """n choose 2, zero for n < 2."""
    return n * (n - 1) // 2 if n >= 2 else 0


def validate_vertex_count(v: int) -> None:
    if not 1 <= v <= MAX_VERTICES:
        raise PartOutOfRangeError(f"vertex count {v} outside [1, {MAX_VERTICES}]")


def make_partition(parts: Iterable[int], v: int) -> tuple[int, ...]:
    """Validate parts as a strictly decreasing partition with all parts < v.

    Returns the canonical tuple form.  The empty partition is valid and
    represents e = 0.
    """
    validate_vertex_count(v)
    pi = tuple(parts)
    for a in pi:
        if not 0 < a < v:
            raise PartOutOfRangeError(f"part {a} outside (0, {v})")
    for a, b in zip(pi, pi[1:]):
        if a <= b:
            raise NotStrictlyDecreasingError(f"parts {a} and {b} are not strictly decreasing")
    return pi


def complement_partition(parts: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Set-wise complement of the parts within {1, ..., v-1}, sorted decreasing.

    The complement partition encodes the complement graph, so its parts sum
    to binom(v,2) - e.  Applying it twice is the identity.
    """
    pi = make_partition(parts, v)
    present = set(pi)
    return tuple(a for a in range(v - 1, 0, -1) if a not in present)


@dataclass(frozen=True)
class ThresholdGraph:
    """Threshold graph on v vertices for a distinct partition of its edge count."""

    v: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", make_partition(self.parts, self.v))

    @property
    def edge_count(self) -> int:
        return sum(self.parts)


def degree_sequence(graph: ThresholdGraph) -> tuple[int, ...]:
    """Degrees of all v vertices, vertex 0 first.

    Vertex s collects a_s dots from its own row plus one dot from every
    earlier row t whose run reaches column s (a_t >= s - t).  The column
    contributions are accumulated with a difference array, so the cost is
    O(v + number of parts) rather than O(v^2).
    """
    v, parts = graph.v, graph.parts
    col = [0] * (v + 1)
    for t, a in enumerate(parts):
        col[t + 1] += 1
        col[t + a + 1] -= 1
    degrees = []
    running = 0
    for s in range(v):
        running += col[s]
        row = parts[s] if s < len(parts) else 0
        degrees.append(row + running)
    return tuple(degrees)


def diagonal_sequence(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Dot counts per antidiagonal, index 0 holding diagonal 1.

    Row t covers diagonals 2t+1 .. 2t+a_t, one dot each; trailing zero
    counts are trimmed so the last entry is positive (empty for e = 0).
    """
    if not parts:
        return ()
    top = max(2 * t + a for t, a in enumerate(parts))
    delta = [0] * (top + 2)
    for t, a in enumerate(parts):
        delta[2 * t + 1] += 1
        delta[2 * t + a + 1] -= 1
    counts = []
    running = 0
    for d in range(1, top + 1):
        running += delta[d]
        counts.append(running)
    return tuple(counts)


def p2_value(parts: tuple[int, ...]) -> int:
    """Sum of squared degrees of the threshold graph of this partition.

    Evaluates twice the sum of i + j over all dot positions (i, j); row t
    contributes 2 * sum_{u=1..a_t} (2t + u) = 4*t*a_t + a_t*(a_t + 1).
    Equals the diagonal-sequence dot product 2 * sum_d d*delta_d, and does
    not depend on v.
    """
    return sum(4 * t * a + a * (a + 1) for t, a in enumerate(parts))


def p2_from_degrees(degrees: Iterable[int]) -> int:
    """Sum of the squares of a degree sequence."""
    return sum(d * d for d in degrees)
