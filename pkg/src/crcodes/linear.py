"""Binary linear codes over word-packed rows."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError, InputError
from .hypercube import Code, check_length, parse_word

K_MAX = 24

# parity-check matrix of the [7,4,3] Hamming code, rows as printed (coordinate 1 leftmost)
HAMMING_7_4_CHECKS = ("1001011", "0101110", "0010111")


def _echelon(rows: Sequence[int]) -> dict[int, int]:
    """Reduced row echelon form as {pivot bit: row}, columns taken from bit 0 upward.

    Each pivot bit is set in its own row only, so the result is unique for a given span.
    """
    rows = [r for r in rows if r]
    pivots: dict[int, int] = {}
    width = max((r.bit_length() for r in rows), default=0)
    for j in range(width):
        m = 1 << j
        idx = next((i for i, r in enumerate(rows) if r & m), None)
        if idx is None:
            continue
        pr = rows.pop(idx)
        rows = [r ^ pr if r & m else r for r in rows]
        pivots = {q: b ^ pr if b & m else b for q, b in pivots.items()}
        pivots[j] = pr
    return pivots


def row_reduce(rows: Sequence[int]) -> list[int]:
    """Reduced echelon basis of the span of ``rows``, ordered by pivot."""
    return list(_echelon(rows).values())


def kernel(rows: Sequence[int], n: int) -> list[int]:
    """Basis of {x : <x, r> = 0 for every row r}."""
    pivots = _echelon(rows)
    out = []
    for f in range(n):
        if f in pivots:
            continue
        x = 1 << f
        for p, row in pivots.items():
            if row >> f & 1:
                x |= 1 << p
        out.append(x)
    return out


def _as_words(rows, n: int | None) -> tuple[list[int], int]:
    rows = list(rows)
    if not rows:
        raise InputError("empty matrix")
    if all(isinstance(r, str) for r in rows):
        lengths = {len(r.strip()) for r in rows}
        if len(lengths) != 1:
            raise InputError("rows of unequal length")
        (m,) = lengths
        if n is not None and n != m:
            raise InputError(f"rows have length {m}, expected {n}")
        return [parse_word(r) for r in rows], m
    if n is None:
        raise InputError("length n is required for integer rows")
    if any(r < 0 or r >> n for r in rows):
        raise InputError(f"row does not fit in length {n}")
    return list(rows), n


@dataclass(frozen=True)
class LinearCode:
    n: int
    generators: tuple[int, ...]

    def __post_init__(self):
        check_length(self.n)
        reduced = tuple(row_reduce(self.generators))
        if len(reduced) != len(self.generators):
            raise InputError("generators are linearly dependent")
        object.__setattr__(self, "generators", reduced)

    @classmethod
    def from_generators(cls, rows, n: int | None = None) -> LinearCode:
        words, n = _as_words(rows, n)
        return cls(n, tuple(row_reduce(words)))

    @classmethod
    def from_parity_check(cls, rows, n: int | None = None) -> LinearCode:
        """The kernel of the given check rows; redundant rows are allowed."""
        words, n = _as_words(rows, n)
        if not row_reduce(words):
            raise InputError("parity-check matrix has rank 0")
        return cls(n, tuple(kernel(words, n)))

    @property
    def k(self) -> int:
        return len(self.generators)

    @cached_property
    def parity_checks(self) -> tuple[int, ...]:
        return tuple(kernel(self.generators, self.n))

    def dual(self) -> LinearCode:
        return LinearCode(self.n, self.parity_checks)

    def __contains__(self, v: int) -> bool:
        return all((v & h).bit_count() % 2 == 0 for h in self.parity_checks)

    def iter_words(self) -> Iterator[int]:
        """All 2^k codewords in Gray-code order (one generator added per step)."""
        if self.k > K_MAX:
            raise CapacityError(f"dimension {self.k} exceeds {K_MAX}")
        w = 0
        yield w
        for i in range(1, 1 << self.k):
            w ^= self.generators[(i & -i).bit_length() - 1]
            yield w

    def word_array(self) -> np.ndarray:
        if self.k > K_MAX:
            raise CapacityError(f"dimension {self.k} exceeds {K_MAX}")
        words = np.zeros(1, dtype=np.int64)
        for g in self.generators:
            words = np.concatenate([words, words ^ g])
        return words

    def to_code(self) -> Code:
        return Code(self.n, frozenset(self.iter_words()))

    def weight_distribution(self) -> list[int]:
        counts = np.bincount(np.bitwise_count(self.word_array()), minlength=self.n + 1)
        return [int(x) for x in counts]

    def minimum_distance(self) -> int | None:
        """Least nonzero weight; None for the zero code."""
        dist = self.weight_distribution()
        return next((w for w in range(1, self.n + 1) if dist[w]), None)

    def even_half(self) -> LinearCode:
        return even_half(self)


def external_distance(code: LinearCode) -> int:
    """Number of nonzero weights occurring in the dual code."""
    dist = code.dual().weight_distribution()
    return sum(1 for w in range(1, code.n + 1) if dist[w])


def even_half(code: LinearCode) -> LinearCode:
    """Subcode of the even-weight words."""
    odd = [g for g in code.generators if g.bit_count() % 2]
    if not odd:
        return code
    pivot = odd[0]
    gens = [g ^ pivot if g.bit_count() % 2 else g for g in code.generators if g != pivot]
    return LinearCode(code.n, tuple(gens))


def hamming_7_4() -> LinearCode:
    return LinearCode.from_parity_check(HAMMING_7_4_CHECKS)
