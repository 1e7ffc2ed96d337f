"""Distance partitions of F_2^n and complete-regularity tests.

The production test for complete regularity is the equitable-partition
criterion on the distance partition. The outer distribution (the table of
|Gamma_k(v) & C| over all vertices v) is the definitional test and is only
computed on demand; it serves as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hypercube import Code, all_ones, check_length

UNREACHED = -1
# vertices per block when building the outer distribution table
_CHUNK = 1 << 16


@dataclass(frozen=True, eq=False)
class DistancePartition:
    """Cells C_0..C_rho of F_2^n by distance from a code.

    ``dist[v]`` is the distance of vertex v from the code.
    """

    code: Code
    dist: np.ndarray = field(repr=False)
    rho: int

    @property
    def n(self) -> int:
        return self.code.n

    def cell(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.dist == i)

    @property
    def cells(self) -> list[np.ndarray]:
        return [self.cell(i) for i in range(self.rho + 1)]

    @property
    def cell_sizes(self) -> list[int]:
        return np.bincount(self.dist, minlength=self.rho + 1).tolist()


@dataclass(frozen=True)
class IntersectionArray:
    n: int
    b: tuple[int, ...]  # b_0 .. b_{rho-1}
    c: tuple[int, ...]  # c_1 .. c_rho

    @property
    def rho(self) -> int:
        return len(self.c)

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.rho else 0

    def c_at(self, i: int) -> int:
        return self.c[i - 1] if i > 0 else 0

    @property
    def a(self) -> tuple[int, ...]:
        """Neighbours inside the own cell, a_0..a_rho."""
        return tuple(self.n - self.b_at(i) - self.c_at(i) for i in range(self.rho + 1))


@dataclass(frozen=True)
class EquitableFailure:
    """Two vertices of cell ``i`` with different (c, b) neighbour counts."""

    i: int
    x: int
    y: int
    x_counts: tuple[int, int]
    y_counts: tuple[int, int]


@dataclass(frozen=True)
class OuterDistribution:
    """``table[i][k]`` = |Gamma_k(v) & C| for any v in C_i."""

    table: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OuterFailure:
    """Vertices v, w of cell ``i`` with different numbers of codewords at distance ``k``."""

    i: int
    k: int
    v: int
    w: int


@dataclass(frozen=True, eq=False)
class Verdict:
    partition: DistancePartition
    array: IntersectionArray | None
    failure: EquitableFailure | None

    @property
    def regular(self) -> bool:
        return self.array is not None

    def __bool__(self) -> bool:
        return self.regular


def distance_partition(code: Code) -> DistancePartition:
    """Multi-source breadth-first search from every codeword over F_2^n."""
    n = code.n
    check_length(n)
    size = 1 << n
    dist = np.full(size, UNREACHED, dtype=np.int8)
    frontier = np.fromiter(sorted(code.words), dtype=np.int64, count=len(code))
    dist[frontier] = 0
    seen = np.zeros(size, dtype=bool)
    d = 0
    while True:
        seen[:] = False
        for b in range(n):
            seen[frontier ^ (1 << b)] = True
        seen &= dist == UNREACHED
        frontier = np.flatnonzero(seen)
        if frontier.size == 0:
            break
        d += 1
        dist[frontier] = d
    return DistancePartition(code, dist, d)


def covering_radius(code: Code) -> int:
    return distance_partition(code).rho


def neighbour_counts(part: DistancePartition) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex counts of neighbours one step closer to and one step further from the code."""
    dist = part.dist.astype(np.int16)
    verts = np.arange(dist.size)
    closer = np.zeros(dist.size, dtype=np.int16)
    further = np.zeros(dist.size, dtype=np.int16)
    for b in range(part.n):
        nd = dist[verts ^ (1 << b)]
        closer += nd == dist - 1
        further += nd == dist + 1
    return closer, further


def equitable_intersection_array(part: DistancePartition) -> IntersectionArray | EquitableFailure:
    closer, further = neighbour_counts(part)
    b, c = [], []
    for i in range(part.rho + 1):
        members = part.cell(i)
        cs, bs = closer[members], further[members]
        bad = np.flatnonzero((cs != cs[0]) | (bs != bs[0]))
        if bad.size:
            j = bad[0]
            return EquitableFailure(
                i,
                int(members[0]),
                int(members[j]),
                (int(cs[0]), int(bs[0])),
                (int(cs[j]), int(bs[j])),
            )
        if i > 0:
            c.append(int(cs[0]))
        if i < part.rho:
            b.append(int(bs[0]))
    return IntersectionArray(part.n, tuple(b), tuple(c))


def outer_distribution_table(code: Code) -> np.ndarray:
    """Array of shape (2^n, n+1): row v counts the codewords at each distance from v."""
    n = code.n
    check_length(n)
    size = 1 << n
    table = np.zeros((size, n + 1), dtype=np.int32)
    words = sorted(code.words)
    for start in range(0, size, _CHUNK):
        verts = np.arange(start, min(size, start + _CHUNK), dtype=np.int64)
        rows = np.arange(verts.size)
        block = table[start:start + verts.size]
        for w in words:
            block[rows, np.bitwise_count(verts ^ w)] += 1
    return table


def outer_distribution_check(code: Code, part: DistancePartition) -> OuterDistribution | OuterFailure:
    table = outer_distribution_table(code)
    rows = []
    for i in range(part.rho + 1):
        members = part.cell(i)
        sub = table[members]
        diff = np.argwhere(sub != sub[0])
        if diff.size:
            j, k = diff[0]
            return OuterFailure(i, int(k), int(members[0]), int(members[j]))
        rows.append(tuple(int(x) for x in sub[0]))
    return OuterDistribution(tuple(rows))


def is_completely_regular(code: Code) -> Verdict:
    part = distance_partition(code)
    result = equitable_intersection_array(part)
    if isinstance(result, IntersectionArray):
        return Verdict(part, result, None)
    return Verdict(part, None, result)


def antipodal_check(code: Code, part: DistancePartition) -> bool:
    """True iff the last cell C_rho is exactly the translate 1 + C."""
    ones = all_ones(code.n)
    last = part.cell(part.rho)
    return len(last) == len(code) and {int(v) for v in last} == {w ^ ones for w in code.words}
