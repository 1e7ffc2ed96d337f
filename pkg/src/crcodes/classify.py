"""Exhaustive classification of completely regular codes with large minimum distance.

Candidates are cliques of the compatibility graph whose vertices are the words
of weight >= delta_min and whose edges join words at distance >= delta_min;
each clique together with the zero word is a code of minimum distance >=
delta_min. Cliques are grown one word at a time with isomorph rejection: a
code is extended only from the canonical representative of its class, and
only by one word per orbit of that representative's automorphisms. Every
class is reached this way, because deleting any nonzero word from a code leaves
a smaller code in the search.

The search uses no bound on code size or any other structural shortcut. It
only enumerates and tests.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import CapacityError, InputError
from .equivalence import canonical_labeling
from .hypercube import Automorphism, Code, all_ones, format_code, support
from .regularity import IntersectionArray, antipodal_check, is_completely_regular

log = logging.getLogger(__name__)

CLASSIFY_N_MAX = 13
# automorphisms of a representative used to split its extension candidates into orbits
_ORBIT_GENERATORS = 64


def distance_threshold(n: int) -> int:
    """Least integer delta with delta > max(2, n/2)."""
    return max(3, n // 2 + 1)


@dataclass(frozen=True)
class ClassEntry:
    code: Code
    array: IntersectionArray
    delta: int
    rho: int

    @property
    def size(self) -> int:
        return len(self.code)


@dataclass
class ClassificationReport:
    n: int
    delta_min: int
    classes: list[ClassEntry]
    expected: list[Code]
    candidates: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def missing(self) -> list[Code]:
        found = {e.code for e in self.classes}
        return [c for c in self.expected if c not in found]

    @property
    def unexpected(self) -> list[Code]:
        expected = set(self.expected)
        return [e.code for e in self.classes if e.code not in expected]

    @property
    def passed(self) -> bool:
        return not self.missing and not self.unexpected


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"length must be a positive integer, got {n!r}")
    if n > CLASSIFY_N_MAX:
        raise CapacityError(f"length {n} exceeds the classification bound {CLASSIFY_N_MAX}")


def _compatible(pool: np.ndarray, code: Code, delta_min: int) -> np.ndarray:
    keep = np.ones(pool.size, dtype=bool)
    for w in code.words:
        keep &= np.bitwise_count(pool ^ w) >= delta_min
    return pool[keep]


def _orbit_representatives(cands: Iterable[int], gens: list[Automorphism]) -> list[int]:
    """One word per orbit of the group generated by ``gens`` (union-find)."""
    cands = [int(x) for x in cands]
    parent = {x: x for x in cands}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in cands:
            a, b = find(x), find(g(x))
            if a != b:
                parent[max(a, b)] = min(a, b)
    return sorted({find(x) for x in cands})


def _column_swaps(code: Code) -> list[Automorphism]:
    """Transpositions of coordinates that agree on every codeword."""
    n = code.n
    cols = {}
    for j in range(n):
        cm = tuple(w >> j & 1 for w in sorted(code.words))
        cols.setdefault(cm, []).append(j)
    swaps = []
    for group in cols.values():
        for a, b in zip(group, group[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            swaps.append(Automorphism(0, tuple(perm)))
    return swaps


def _extend(args) -> list[tuple[Code, list[Automorphism]]]:
    """Canonical children of one representative, with automorphism generators for each."""
    rep, gens, pool, delta_min = args
    cands = _compatible(pool, rep, delta_min)
    children = {}
    for x in _orbit_representatives(cands, gens):
        child = Code(rep.n, rep.words | {x})
        lab = canonical_labeling(child)
        if lab.code not in children:
            auts = lab.automorphisms()[:_ORBIT_GENERATORS]
            children[lab.code] = auts + _column_swaps(lab.code)
    return list(children.items())


def enumerate_candidates(n: int, delta_min: int, jobs: int = 1) -> Iterator[Code]:
    """Yield every code containing 0 with at least two words and minimum distance >= delta_min,
    once per equivalence class, as its canonical form. Codes come out in order of size."""
    _check_n(n)
    if delta_min < 1:
        raise InputError(f"delta_min must be positive, got {delta_min}")
    pool = np.array([v for v in range(1, 1 << n) if v.bit_count() >= delta_min], dtype=np.int64)
    root = Code(n, frozenset({0}))
    level = [(root, _column_swaps(root))]
    executor = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while level:
            tasks = [(rep, gens, pool, delta_min) for rep, gens in level]
            if executor is None:
                results = map(_extend, tasks)
            else:
                results = executor.map(_extend, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            seen = {}
            for children in results:
                for code, gens in children:
                    if code not in seen:
                        seen[code] = gens
            # sort so the output does not depend on worker completion order
            ordered = sorted(seen, key=lambda c: sorted(c.words))
            log.info("n=%d: %d classes of size %d", n, len(ordered), len(ordered[0]) if ordered else 0)
            yield from ordered
            level = [(c, seen[c]) for c in ordered]
    finally:
        if executor is not None:
            executor.shutdown()


def enumerate_cliques(n: int, delta_min: int) -> Iterator[Code]:
    """Every code containing 0 with >= 2 words and minimum distance >= delta_min, without
    isomorph rejection (Bron-Kerbosch style, emitting all cliques, not only maximal ones).

    Only feasible for small n; used to cross-check :func:`enumerate_candidates`.
    """
    _check_n(n)
    pool = [v for v in range(1, 1 << n) if v.bit_count() >= delta_min]
    adj = {u: {v for v in pool if (u ^ v).bit_count() >= delta_min} for u in pool}

    def grow(clique, cands):
        for i, v in enumerate(cands):
            chosen = clique + [v]
            yield Code(n, frozenset(chosen))
            yield from grow(chosen, [u for u in cands[i + 1:] if u in adj[v]])

    yield from grow([0], pool)


def expected_classes(n: int, delta_min: int) -> list[Code]:
    """Canonical forms of the classes predicted for length n: repetition code, plus H_E at n = 7."""
    from .linear import hamming_7_4

    out = []
    if n >= delta_min:
        out.append(canonical_labeling(Code.repetition(n)).code)
    if n == 7 and delta_min <= 4:
        out.append(canonical_labeling(hamming_7_4().even_half().to_code()).code)
    return out


def classify_large_distance(n: int, delta_min: int | None = None, jobs: int = 1) -> ClassificationReport:
    _check_n(n)
    threshold = distance_threshold(n)
    if delta_min is None:
        delta_min = threshold
    elif delta_min < threshold:
        raise InputError(
            f"delta_min {delta_min} is below {threshold}, the least distance with delta > max(2, n/2)"
        )
    classes = []
    count = 0
    for code in enumerate_candidates(n, delta_min, jobs):
        count += 1
        verdict = is_completely_regular(code)
        if verdict.regular:
            classes.append(ClassEntry(code, verdict.array, code.minimum_distance(), verdict.partition.rho))
    report = ClassificationReport(n, delta_min, classes, expected_classes(n, delta_min), count)
    if n % 2 == 0 and n < 6:
        report.notes.append(f"even length {n} below 6: edge case of the large-distance hypothesis")
    if n < delta_min:
        report.notes.append(f"no code of length {n} has minimum distance >= {delta_min}")
    return report


def large_distance_violations(entry: ClassEntry) -> list[str]:
    """Structural consequences expected of a completely regular code with n/2 < delta < n.

    Returns the list of failed properties (empty when all hold).
    """
    code, n, delta = entry.code, entry.code.n, entry.delta
    if not (2 * delta > n and delta < n and len(code) > 1 and 0 in code):
        return []
    bad = []
    if n % 2 == 0:
        bad.append("n is even")
    if 2 * delta != n + 1:
        bad.append("delta != (n+1)/2")
    nonzero = [w for w in code.words if w]
    if any(w.bit_count() != delta for w in nonzero):
        bad.append("C != {0} u C(delta)")
    if {(a ^ b).bit_count() for a, b in itertools.combinations(code.words, 2)} != {delta}:
        bad.append("not equidistant")
    meets = {len(support(a) & support(b)) for a, b in itertools.combinations(nonzero, 2)}
    if meets and (4 * min(meets) != n + 1 or len(meets) != 1):
        bad.append("support intersections differ from (n+1)/4")
    return bad


def antipodality_violations(entry: ClassEntry) -> list[str]:
    """Covering radius and antipodality checks for a code with delta >= 3, 0 in C, 1 not in C."""
    code = entry.code
    if not (entry.delta >= 3 and 0 in code and all_ones(code.n) not in code):
        return []
    bad = []
    if entry.rho < entry.delta - 1:
        bad.append("rho < delta - 1")
    verdict = is_completely_regular(code)
    if not antipodal_check(code, verdict.partition):
        bad.append("C_rho != 1 + C")
    return bad


def render_report(report: ClassificationReport) -> str:
    lines = [
        f"n: {report.n}",
        f"delta_min: {report.delta_min}",
        f"candidates: {report.candidates}",
        f"classes: {len(report.classes)}",
        f"expected: {len(report.expected)}",
    ]
    lines += [f"note: {note}" for note in report.notes]
    for idx, e in enumerate(report.classes, start=1):
        lines += [
            f"class: {idx}",
            f"size: {e.size}",
            f"min_distance: {e.delta}",
            f"covering_radius: {e.rho}",
            f"intersection_array_b: {' '.join(map(str, e.array.b))}",
            f"intersection_array_c: {' '.join(map(str, e.array.c))}",
        ]
        lines.append(format_code(e.code).rstrip("\n"))
    for label, codes in (("missing", report.missing), ("unexpected", report.unexpected)):
        for c in codes:
            lines.append(f"{label}: {len(c)} words")
            lines.append(format_code(c).rstrip("\n"))
    lines.append(f"verdict: {'pass' if report.passed else 'fail'}")
    return "\n".join(lines) + "\n"


def verify_theorem(n: int, delta_min: int | None = None, jobs: int = 1) -> tuple[bool, str]:
    report = classify_large_distance(n, delta_min, jobs)
    return report.passed, render_report(report)
