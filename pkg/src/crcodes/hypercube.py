"""Vertices of the binary Hamming graph and its automorphisms.

Conventions:

- A vertex of F_2^n is a Python int; coordinate 1 is the least significant bit.
- As text, a vertex is the n-character 0/1 string with coordinate 1 leftmost,
  so ``"1000000"`` is the int 1.
- An automorphism permutes coordinates first, then adds a translation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, InputError

N_MAX = 24


def check_length(n: int, n_max: int = N_MAX) -> None:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"length must be a positive integer, got {n!r}")
    if n > n_max:
        raise CapacityError(f"length {n} exceeds the bound {n_max}")


def all_ones(n: int) -> int:
    return (1 << n) - 1


def weight(v: int) -> int:
    return v.bit_count()


def support(v: int) -> frozenset[int]:
    """1-based coordinates where v is nonzero."""
    out = []
    i = 1
    while v:
        if v & 1:
            out.append(i)
        v >>= 1
        i += 1
    return frozenset(out)


def from_support(points: Iterable[int]) -> int:
    v = 0
    for p in points:
        v |= 1 << (p - 1)
    return v


def distance(u: int, v: int) -> int:
    return (u ^ v).bit_count()


def parse_word(text: str) -> int:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise InputError(f"not a 0/1 word: {text!r}")
    # leftmost character is coordinate 1, i.e. the low bit
    return int(text[::-1], 2)


def format_word(v: int, n: int) -> str:
    if v >> n:
        raise InputError(f"word {v} does not fit in length {n}")
    return format(v, f"0{n}b")[::-1]


def sphere(v: int, n: int, k: int) -> Iterator[int]:
    """Yield the vertices at distance exactly k from v, each once.

    Order is the lexicographic order of the flipped coordinate sets.
    """
    if not 0 <= k <= n:
        raise InputError(f"sphere radius {k} out of range 0..{n}")
    for flips in itertools.combinations(range(n), k):
        m = 0
        for i in flips:
            m |= 1 << i
        yield v ^ m


def permute_bits(v: int, perm: tuple[int, ...]) -> int:
    """Move bit i of v to position perm[i]."""
    out = 0
    i = 0
    while v:
        if v & 1:
            out |= 1 << perm[i]
        v >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Automorphism:
    """x -> P(x) + translation, with P moving coordinate i to perm[i] (0-based)."""

    translation: int
    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise InputError(f"not a permutation of 0..{n - 1}: {self.perm}")
        if self.translation >> n:
            raise InputError("translation longer than the permutation")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> Automorphism:
        return cls(0, tuple(range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> Automorphism:
        perm = list(range(n))
        rng.shuffle(perm)
        return cls(rng.getrandbits(n), tuple(perm))

    def __call__(self, v: int) -> int:
        return permute_bits(v, self.perm) ^ self.translation

    def compose(self, other: Automorphism) -> Automorphism:
        """The map x -> self(other(x))."""
        if other.n != self.n:
            raise InputError("automorphisms of different lengths")
        perm = tuple(self.perm[j] for j in other.perm)
        return Automorphism(permute_bits(other.translation, self.perm) ^ self.translation, perm)

    def inverse(self) -> Automorphism:
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        inv_t = tuple(inv)
        return Automorphism(permute_bits(self.translation, inv_t), inv_t)


@dataclass(frozen=True)
class Code:
    """A nonempty set of distinct words of common length n."""

    n: int
    words: frozenset[int]

    def __post_init__(self):
        check_length(self.n)
        if not isinstance(self.words, frozenset):
            object.__setattr__(self, "words", frozenset(self.words))
        if not self.words:
            raise InputError("a code must contain at least one word")
        if any(w < 0 or w >> self.n for w in self.words):
            raise InputError(f"word does not fit in length {self.n}")

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> Code:
        words = [w.strip() for w in lines]
        if not words:
            raise InputError("a code must contain at least one word")
        n = len(words[0])
        if any(len(w) != n for w in words):
            raise InputError("words of unequal length")
        return cls(n, frozenset(parse_word(w) for w in words))

    @classmethod
    def repetition(cls, n: int) -> Code:
        return cls(n, frozenset({0, all_ones(n)}))

    @classmethod
    def full_space(cls, n: int) -> Code:
        return cls(n, frozenset(range(1 << n)))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.words))

    def __contains__(self, v: int) -> bool:
        return v in self.words

    def minimum_distance(self) -> int | None:
        """Least distance between distinct codewords; None for a one-word code."""
        ws = sorted(self.words)
        if len(ws) < 2:
            return None
        return min(distance(a, b) for a, b in itertools.combinations(ws, 2))

    def translate(self, v: int) -> Code:
        return Code(self.n, frozenset(w ^ v for w in self.words))

    def complement(self) -> Code:
        """The antipodal translate 1 + C."""
        return self.translate(all_ones(self.n))

    def weight_class(self, k: int) -> list[int]:
        return sorted(w for w in self.words if w.bit_count() == k)

    def to_strings(self) -> list[str]:
        return [format_word(w, self.n) for w in sorted(self.words)]

    def __str__(self) -> str:
        return "{" + ", ".join(self.to_strings()) + "}"


def apply_code(g: Automorphism, code: Code) -> Code:
    if g.n != code.n:
        raise InputError(f"automorphism of length {g.n} applied to a code of length {code.n}")
    return Code(code.n, frozenset(g(w) for w in code.words))


def parse_code(text: str) -> Code:
    """Parse the plain-text code format: one 0/1 word per line, '#' comments and blank lines skipped."""
    words = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise InputError(f"line {lineno}: not a 0/1 word: {line!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise InputError(f"line {lineno}: length {len(line)} differs from {n}")
        words.append(line)
    if not words:
        raise InputError("no codewords found")
    check_length(n)
    if len(set(words)) != len(words):
        raise InputError("duplicate codewords")
    return Code.from_strings(words)


def read_code(path) -> Code:
    with open(path) as fh:
        return parse_code(fh.read())


def format_code(code: Code) -> str:
    return "\n".join(code.to_strings()) + "\n"
