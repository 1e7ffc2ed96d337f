import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crcodes.errors import CapacityError, InputError
from crcodes.hypercube import (
    Automorphism,
    Code,
    apply_code,
    distance,
    format_code,
    format_word,
    parse_code,
    parse_word,
    sphere,
    support,
    weight,
)
from crcodes.linear import HAMMING_7_4_CHECKS

words7 = st.integers(min_value=0, max_value=127)


def hamming_kernel_oracle():
    """Words of length 7 orthogonal to every printed check row, by brute force over strings."""
    rows = HAMMING_7_4_CHECKS
    out = []
    for bits in itertools.product("01", repeat=7):
        s = "".join(bits)
        if all(sum(int(a) * int(b) for a, b in zip(s, r)) % 2 == 0 for r in rows):
            out.append(s)
    return out


def test_word_text_round_trip():
    assert parse_word("1000000") == 1
    assert format_word(1, 7) == "1000000"
    assert format_word(parse_word("1101000"), 7) == "1101000"
    with pytest.raises(InputError):
        parse_word("10a")
    with pytest.raises(InputError):
        format_word(0b1000, 3)


def test_distance_examples():
    assert distance(parse_word("0000000"), parse_word("1111111")) == 7
    assert distance(0b1011, 0b1011) == 0
    kernel = hamming_kernel_oracle()
    assert "1101000" in kernel and "0110100" in kernel
    expected = sum(a != b for a, b in zip("1101000", "0110100"))
    assert expected == 4
    assert distance(parse_word("1101000"), parse_word("0110100")) == expected


def test_weight_and_support():
    assert weight(0) == 0 and support(0) == frozenset()
    assert weight(parse_word("1111111")) == 7 and support(parse_word("1111111")) == frozenset(range(1, 8))
    v = parse_word("1110010")
    assert "1110010" in hamming_kernel_oracle()
    assert weight(v) == 4 and support(v) == {1, 2, 3, 6}


@given(words7, words7, words7)
def test_metric_axioms(u, v, w):
    assert distance(u, v) == distance(v, u)
    assert distance(u, w) <= distance(u, v) + distance(v, w)
    assert (distance(u, v) == 0) == (u == v)
    assert distance(u, v) == weight(u ^ v)
    assert weight(u) == len(support(u))


def test_apply_examples(half):
    g = Automorphism(parse_word("1111111"), tuple(range(7)))
    assert g(0) == parse_word("1111111")
    assert apply_code(Automorphism.identity(7), half) == half
    swap = Automorphism(0, (1, 0, 2, 3, 4, 5, 6))
    assert format_word(swap(parse_word("1000000")), 7) == "0100000"
    with pytest.raises(InputError):
        apply_code(Automorphism.identity(6), half)


@given(st.randoms(use_true_random=False), words7, words7)
def test_automorphisms_preserve_distance(rng, u, v):
    g = Automorphism.random(7, rng)
    assert distance(g(u), g(v)) == distance(u, v)


@given(st.randoms(use_true_random=False), words7)
def test_group_laws(rng, v):
    g, h, k = (Automorphism.random(7, rng) for _ in range(3))
    assert g.compose(h)(v) == g(h(v))
    assert g.compose(h).compose(k) == g.compose(h.compose(k))
    assert g.inverse()(g(v)) == v
    assert g.compose(g.inverse()) == Automorphism.identity(7)


def test_apply_code_keeps_size(half):
    rng = random.Random(3)
    for _ in range(20):
        assert len(apply_code(Automorphism.random(7, rng), half)) == len(half)


def test_sphere_examples():
    assert list(sphere(0, 7, 0)) == [0]
    assert list(sphere(0, 7, 7)) == [parse_word("1111111")]
    assert len(list(sphere(0b1010101, 7, 3))) == 35
    with pytest.raises(InputError):
        list(sphere(0, 7, 8))


@pytest.mark.parametrize("n", [1, 4, 7])
def test_spheres_partition_space(n):
    v = (1 << n) - 1 >> 1
    seen = []
    for k in range(n + 1):
        layer = list(sphere(v, n, k))
        assert len(layer) == len(set(layer)) == math.comb(n, k)
        assert all(distance(u, v) == k for u in layer)
        seen += layer
    assert sorted(seen) == list(range(1 << n))


def test_code_invariants():
    with pytest.raises(InputError):
        Code(3, frozenset())
    with pytest.raises(InputError):
        Code(3, frozenset({8}))
    with pytest.raises(CapacityError):
        Code(25, frozenset({0}))
    assert Code(4, frozenset({5})).minimum_distance() is None
    assert Code.repetition(5).minimum_distance() == 5


def test_code_file_format(tmp_path):
    text = "# the repetition code\n\n000\n111\n"
    code = parse_code(text)
    assert code == Code.repetition(3)
    assert parse_code(format_code(code)) == code
    with pytest.raises(InputError, match="line 3"):
        parse_code("000\n111\n11\n")
    with pytest.raises(InputError, match="line 2"):
        parse_code("000\n1x1\n")
    with pytest.raises(InputError):
        parse_code("# nothing\n")
