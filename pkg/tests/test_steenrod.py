import itertools

import pytest
from hypothesis import given, strategies as st

from ukrull import steenrod as A
from ukrull.steenrod import SqPoly

words = st.lists(st.integers(1, 9), min_size=1, max_size=4).map(tuple)


def test_named_relations():
    assert A.adem_normalize((1, 1)) == A.ZERO
    assert A.adem_normalize((2, 2)) == frozenset([(3, 1)])
    assert A.adem_normalize((2, 3)) == frozenset([(5,), (4, 1)])


def test_basis_dimensions():
    # dims of the mod 2 Steenrod algebra in degrees 0..12
    assert [len(A.admissible_basis(d)) for d in range(13)] == [1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6, 6, 7]


def test_excess_bounded_basis():
    for d in range(12):
        for w in A.admissible_basis(d, 2):
            assert A.is_admissible(w) and A.excess(w) <= 2


@given(words)
def test_normal_form_is_admissible_and_idempotent(w):
    p = A.adem_normalize(w)
    assert all(A.is_admissible(t) for t in p)
    assert all(A.degree(t) == A.degree(w) for t in p)
    again = frozenset()
    for t in p:
        again ^= A.adem_normalize(t)
    assert again == p


@given(words, words, words)
def test_associativity(a, b, c):
    x, y, z = SqPoly.word(*a), SqPoly.word(*b), SqPoly.word(*c)
    assert (x * y) * z == x * (y * z)


@given(words, words)
def test_product_of_words_is_concatenation(a, b):
    assert SqPoly.word(*a) * SqPoly.word(*b) == SqPoly.word(*(a + b))


@given(words)
def test_parse_render_round_trip(w):
    p = A.adem_normalize(w)
    assert A.parse(A.render(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        A.parse("Sq^2 * x")


def test_exhaustive_low_degrees():
    for d in range(1, 11):
        for k in range(1, 4):
            for comp in itertools.product(range(1, d + 1), repeat=k):
                if sum(comp) != d:
                    continue
                assert all(A.degree(t) == d for t in A.adem_normalize(comp))


def test_basis_counts_against_partitions():
    # admissible words of degree d <-> partitions of d into parts 2^k - 1
    top = 30
    count = [1] + [0] * top
    for part in (1, 3, 7, 15):
        for d in range(part, top + 1):
            count[d] += count[d - part]
    assert [len(A.admissible_basis(d)) for d in range(top + 1)] == count
