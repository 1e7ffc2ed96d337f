"""Constant-weight codeword classes viewed as block designs on the points 1..n."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import InputError
from .hypercube import Code, support


@dataclass(frozen=True)
class BlockSet:
    n: int
    k: int
    blocks: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "blocks", frozenset(frozenset(b) for b in self.blocks))
        points = set(range(1, self.n + 1))
        for b in self.blocks:
            if len(b) != self.k:
                raise InputError(f"block {sorted(b)} does not have size {self.k}")
            if not b <= points:
                raise InputError(f"block {sorted(b)} is not a subset of 1..{self.n}")

    @classmethod
    def from_blocks(cls, n: int, blocks) -> BlockSet:
        blocks = [frozenset(b) for b in blocks]
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise InputError("blocks must be nonempty and of one common size")
        return cls(n, sizes.pop(), frozenset(blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def sorted_blocks(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(b)) for b in self.blocks)


@dataclass(frozen=True)
class DesignFailure:
    """Two t-subsets covered by different numbers of blocks."""

    t: int
    first: tuple[int, ...]
    first_count: int
    second: tuple[int, ...]
    second_count: int


def weight_class(code: Code, k: int) -> BlockSet:
    if not 0 <= k <= code.n:
        raise InputError(f"weight {k} out of range 0..{code.n}")
    return BlockSet(code.n, k, frozenset(support(w) for w in code.words if w.bit_count() == k))


def _check_design_question(blocks: BlockSet) -> None:
    if not 1 <= blocks.k <= blocks.n - 1:
        raise InputError(f"block size {blocks.k} is degenerate for {blocks.n} points")
    if not blocks.blocks:
        raise InputError("empty block set")


def design_lambda(blocks: BlockSet, t: int) -> int | DesignFailure:
    """lambda if every t-subset of points lies in the same number of blocks, else a witness."""
    _check_design_question(blocks)
    if not 1 <= t <= blocks.k:
        raise InputError(f"strength {t} out of range 1..{blocks.k}")
    counts = Counter()
    for b in blocks.blocks:
        counts.update(itertools.combinations(sorted(b), t))
    subsets = itertools.combinations(range(1, blocks.n + 1), t)
    first = next(subsets)
    lam = counts[first]
    for s in subsets:
        if counts[s] != lam:
            return DesignFailure(t, first, lam, s, counts[s])
    return lam


def max_strength(blocks: BlockSet) -> int:
    """Largest t with a constant t-subset count (0 if not even a 1-design)."""
    t = 0
    while t < blocks.k and isinstance(design_lambda(blocks, t + 1), int):
        t += 1
    return t


def design_parameters(blocks: BlockSet) -> tuple[int, int, int, int] | None:
    """(t, n, k, lambda) at maximal strength, or None below strength 1."""
    t = max_strength(blocks)
    if t == 0:
        return None
    return t, blocks.n, blocks.k, design_lambda(blocks, t)


def intersection_numbers(blocks: BlockSet) -> frozenset[int]:
    if len(blocks) < 2:
        raise InputError("need at least two blocks")
    return frozenset(len(a & b) for a, b in itertools.combinations(blocks.blocks, 2))


def complement_design(blocks: BlockSet) -> BlockSet:
    points = frozenset(range(1, blocks.n + 1))
    return BlockSet(blocks.n, blocks.n - blocks.k, frozenset(points - b for b in blocks.blocks))


def is_symmetric(blocks: BlockSet) -> bool:
    return len(blocks) == blocks.n
