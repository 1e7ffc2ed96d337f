"""Canonical forms of binary codes under translations and coordinate permutations.

A code is put in canonical form by (1) translating it by each of its own
codewords, so the zero word is always present, and (2) choosing coordinate
positions 1, 2, ..., n one at a time. Placing a column splits every group of
rows that agree so far into a 0-part and a 1-part. The canonical order
prefers, group by group in order, the larger 0-part. Equivalently, the sorted
list of codeword prefixes of each length is lexicographically least, compared
first on length 1, then on length 2, and so on.

All translates are searched together, one level at a time. Only the children
that tie with the best split so far survive a level. Two search states with
the same row groups and the same multiset of remaining columns have identical
futures, so they are merged. Every survivor at the last level gives a map onto
the canonical code, which yields automorphisms of that code for free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, InputError
from .hypercube import Automorphism, Code, permute_bits

CANON_N_MAX = 16


@dataclass(frozen=True)
class Labeling:
    """A canonical code together with maps sending the input code onto it."""

    code: Code
    maps: tuple[Automorphism, ...]

    def automorphisms(self) -> list[Automorphism]:
        """Automorphisms of the canonical code obtained from pairs of maps."""
        base_inv = self.maps[0].inverse()
        return [g.compose(base_inv) for g in self.maps]


def _columns(rows: list[int], n: int) -> list[int]:
    cols = []
    for j in range(n):
        cm = 0
        for i, r in enumerate(rows):
            if r >> j & 1:
                cm |= 1 << i
        cols.append(cm)
    return cols


def canonical_labeling(code: Code, n_max: int = CANON_N_MAX) -> Labeling:
    n = code.n
    if n > n_max:
        raise CapacityError(f"length {n} exceeds the canonicalization bound {n_max}")
    words = sorted(code.words)
    everyone = (1 << len(words)) - 1

    # state: (groups, remaining [(colmask, column)], translation, chosen [(colmask, column)])
    live = []
    for beta in words:
        cols = _columns([w ^ beta for w in words], n)
        live.append(((everyone,), tuple(sorted(zip(cols, range(n)))), beta, ()))

    for _ in range(n):
        best = None
        children = {}
        for groups, remaining, beta, chosen in live:
            tried = set()
            for idx, (cm, j) in enumerate(remaining):
                if cm in tried:
                    continue
                tried.add(cm)
                zeros = tuple((g & ~cm).bit_count() for g in groups)
                if best is not None and zeros < best:
                    continue
                if best is None or zeros > best:
                    best = zeros
                    children = {}
                split = []
                for g in groups:
                    lo, hi = g & ~cm, g & cm
                    if lo:
                        split.append(lo)
                    if hi:
                        split.append(hi)
                rest = remaining[:idx] + remaining[idx + 1:]
                key = (tuple(split), tuple(c for c, _ in rest))
                if key not in children:
                    children[key] = (tuple(split), rest, beta, chosen + ((cm, j),))
        live = list(children.values())

    _, _, _, chosen = live[0]
    canon = [0] * len(words)
    for p, (cm, _) in enumerate(chosen):
        for i in range(len(words)):
            if cm >> i & 1:
                canon[i] |= 1 << p
    maps = []
    for _, _, beta, path in live:
        perm = [0] * n
        for p, (_, j) in enumerate(path):
            perm[j] = p
        perm_t = tuple(perm)
        maps.append(Automorphism(permute_bits(beta, perm_t), perm_t))
    return Labeling(Code(n, frozenset(canon)), tuple(maps))


def canonical_form(code: Code, n_max: int = CANON_N_MAX) -> Code:
    return canonical_labeling(code, n_max).code


def are_equivalent(a: Code, b: Code, n_max: int = CANON_N_MAX) -> bool:
    if a.n != b.n:
        raise InputError(f"codes of different lengths {a.n} and {b.n}")
    if len(a) != len(b):
        return False
    return canonical_form(a, n_max) == canonical_form(b, n_max)
