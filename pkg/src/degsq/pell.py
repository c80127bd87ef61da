"""Solutions of V^2 - 2 J^2 = P and the graph-class families they index.

Every constant P used here is -1 mod 8, so V and J are odd in every
positive solution and the linear maps from (V, J) to graph parameters
(v, k) always land on integers.  Solutions are generated from a fixed set
of fundamental classes by repeated multiplication with 3 + 2*sqrt(2),
i.e. (V, J) -> (3V + 4J, 2V + 3J), and merged in ascending V across
classes.

The families:

  * three: (2v-3)^2 - 2(2k-1)^2 = -1 with e = binom(k,2) gives classes
    with exactly three optimal partitions (v > 5).
  * four: (2v-1)^2 - 2(2k+1)^2 = -49 with e = m = binom(v,2)/2 gives
    classes with exactly four optimal partitions (v > 9).
  * q0 = 0: (2v-5)^2 - 2(2k-3)^2 = -1 marks the v whose sign profile has
    an equality plateau; for v > 3 the k here is forced to equal k0.
  * equality at e0: (2v-3)^2 - 2(2k-1)^2 = 7 or -1 marks the v where
    S = C already at e0 = binom(k0,2).
"""

from __future__ import annotations

import heapq
from typing import Iterator, NamedTuple

from .errors import UnsupportedPError
from .partitions import binom2
from .signs import k0_of


class PellSolution(NamedTuple):
    V: int
    J: int
    P: int


class FamilyMember(NamedTuple):
    v: int
    k: int
    e: int
    expected_optimal_count: int


FUNDAMENTAL_CLASSES = {
    -1: ((1, 1),),
    7: ((3, 1), (5, 3)),
    -9: ((3, 3),),
    -49: ((1, 5), (7, 7), (17, 13)),
}


def _class_stream(V: int, J: int) -> Iterator[tuple[int, int]]:
    while True:
        yield V, J
        V, J = 3 * V + 4 * J, 2 * V + 3 * J


def iter_pell_solutions(P: int) -> Iterator[PellSolution]:
    """All positive solutions for P, ascending in V, merged across classes."""
    if P not in FUNDAMENTAL_CLASSES:
        raise UnsupportedPError(f"no fundamental classes tabulated for P={P}")
    streams = [_class_stream(V, J) for V, J in FUNDAMENTAL_CLASSES[P]]
    heap = [(next(s), i) for i, s in enumerate(streams)]
    heapq.heapify(heap)
    last = None
    while True:
        (V, J), i = heapq.heappop(heap)
        heapq.heappush(heap, (next(streams[i]), i))
        if (V, J) != last:  # distinct classes never collide, but stay safe
            last = (V, J)
            yield PellSolution(V, J, P)


def pell_solutions(P: int, count: int) -> list[PellSolution]:
    """First `count` positive solutions of V^2 - 2 J^2 = P, ascending in V."""
    out = []
    for sol in iter_pell_solutions(P):
        out.append(sol)
        if len(out) == count:
            return out
    raise AssertionError("unreachable: solution stream is infinite")


def family_three(count: int) -> list[FamilyMember]:
    """Classes with exactly three optimal partitions: v = (V+3)/2, k = (J+1)/2, e = binom(k,2)."""
    members = []
    for V, J, _ in iter_pell_solutions(-1):
        v, k = (V + 3) // 2, (J + 1) // 2
        if v > 5:
            members.append(FamilyMember(v, k, binom2(k), 3))
            if len(members) == count:
                return members
    raise AssertionError("unreachable")


def family_four(count: int) -> list[FamilyMember]:
    """Classes with exactly four optimal partitions: v = (V+1)/2, k = (J-1)/2, e = binom(v,2)/2."""
    members = []
    for V, J, _ in iter_pell_solutions(-49):
        v, k = (V + 1) // 2, (J - 1) // 2
        if v > 9:
            members.append(FamilyMember(v, k, binom2(v) // 2, 4))
            if len(members) == count:
                return members
    raise AssertionError("unreachable")


def family_q0_zero(count: int) -> list[tuple[int, int]]:
    """(v, k) with (2v-5)^2 - 2(2k-3)^2 = -1, ascending in v.

    Both sign choices of (V, J) can give positive v and k, so small v
    appear with two k values; those duplicates are genuine solutions and
    are kept.
    """
    pairs = []
    for V, J, _ in iter_pell_solutions(-1):
        for sv in (-V, V):
            for sj in (-J, J):
                v, k = (sv + 5) // 2, (sj + 3) // 2
                if v >= 1 and k >= 1:
                    pairs.append((v, k))
        if len(pairs) >= count + 4:  # sign variants only enlarge early entries
            break
    pairs.sort()
    return pairs[:count]


def family_equality_e0(count: int) -> list[tuple[int, int, str]]:
    """(v, k, variant) with (2v-3)^2 - 2(2k-1)^2 = 7 ("P7") or -1 ("Pminus1").

    Returns the first `count` members of each variant, merged ascending
    in v.  For these v (beyond small exceptions) the difference S - C
    vanishes at e0 even though q0 > 0.
    """
    members = []
    for P, variant in ((7, "P7"), (-1, "Pminus1")):
        for V, J, _ in pell_solutions(P, count):
            members.append(((V + 3) // 2, (J + 1) // 2, variant))
    members.sort()
    return members


def verify_k_is_k0(v: int, k: int) -> bool:
    """Whether k is the midpoint index k0(v)."""
    return k == k0_of(v)
