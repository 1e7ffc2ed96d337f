import random

import pytest

from crcodes.hypercube import Code, all_ones, from_support
from crcodes.linear import LinearCode, hamming_7_4, row_reduce

# seed for the random code corpus; changing it changes which codes are checked
CORPUS_SEED = 20240611
CORPUS_SIZE = 1000

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_code(rng: random.Random, n_max: int = 10) -> Code:
    n = rng.randint(1, n_max)
    m = rng.randint(1, min(8, 1 << n))
    return Code(n, frozenset(rng.sample(range(1 << n), m)))


def extended_hamming() -> LinearCode:
    """[8,4,4]: the Hamming code with an overall parity coordinate appended."""
    gens = [g | (g.bit_count() % 2) << 7 for g in hamming_7_4().generators]
    return LinearCode(8, tuple(gens))


def hamming_code(m: int) -> LinearCode:
    """[2^m - 1, 2^m - 1 - m, 3]: checks are the binary expansions of 1..2^m - 1."""
    n = (1 << m) - 1
    rows = [sum(((j + 1) >> i & 1) << j for j in range(n)) for i in range(m)]
    return LinearCode.from_parity_check(rows, n)


def golay_code() -> LinearCode:
    """[23,12,7]: cyclic code generated by x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1."""
    g = sum(1 << e for e in (11, 10, 6, 5, 4, 2, 0))
    return LinearCode(23, tuple(row_reduce([g << i for i in range(12)])))


def large_regular_codes() -> list[Code]:
    """Completely regular codes too big for the canonical-form corpus."""
    ham = hamming_code(4)
    return [ham.even_half().to_code(), ham.to_code(), golay_code().even_half().to_code()]


def structured_codes() -> list[Code]:
    ham = hamming_7_4()
    codes = [
        ham.to_code(),
        ham.even_half().to_code(),
        Code(3, frozenset({0b000, 0b011})),
        Code.full_space(3),
        Code.full_space(4),
        Code(5, frozenset({0})),
        extended_hamming().to_code(),
        # even-weight code of length 5
        LinearCode.from_parity_check(["11111"]).to_code(),
        # zero word plus two disjoint weight-3 words
        Code(6, frozenset({0, from_support({1, 2, 3}), from_support({4, 5, 6})})),
    ]
    codes += [Code.repetition(n) for n in range(1, 11)]
    codes += [Code(n, frozenset({0})) for n in range(1, 6)]
    codes.append(Code(6, frozenset({0, all_ones(6), 0b000111, 0b111000})))
    return codes


def corpus() -> list[Code]:
    rng = random.Random(CORPUS_SEED)
    return structured_codes() + [random_code(rng) for _ in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def hamming():
    return hamming_7_4()


@pytest.fixture(scope="session")
def half(hamming):
    return hamming.even_half().to_code()


@pytest.fixture(scope="session")
def code_corpus():
    return corpus()
