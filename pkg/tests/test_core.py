from collections import Counter

import pytest

from ncolour.core import (
    ColouredPart,
    Composition,
    enumerate_compositions,
    enumerate_compositions_m,
    enumerate_self_inverse,
    enumerate_self_inverse_m,
    is_self_inverse,
    iter_compositions,
    weight,
)

from .oracles import fib, raw_compositions, raw_self_inverse

C = Composition.of


def texts(comps):
    return [str(c) for c in comps]


def test_part_invariants():
    with pytest.raises(ValueError):
        ColouredPart(0, 1)
    with pytest.raises(ValueError):
        ColouredPart(3, 4)
    with pytest.raises(ValueError):
        ColouredPart(2, 0)
    with pytest.raises(ValueError):
        Composition(())


@pytest.mark.parametrize("comp, expected", [
    (C((3, 2), (1, 1)), 4),
    (C((1, 1)), 1),
    (C((2, 1), (1, 1), (2, 1)), 5),
])
def test_weight(comp, expected):
    assert weight(comp) == expected


@pytest.mark.parametrize("comp, expected", [
    (C((1, 1), (3, 2), (1, 1)), True),
    (C((2, 1), (1, 1)), False),
    (C((2, 2)), True),
    # same sizes, colours break the symmetry
    (C((2, 1), (1, 1), (2, 2)), False),
])
def test_is_self_inverse(comp, expected):
    assert is_self_inverse(comp) is expected


def test_text_and_pair_round_trip():
    c = Composition.parse("1_1 3_2 1_1")
    assert c == C((1, 1), (3, 2), (1, 1))
    assert str(c) == "1_1 3_2 1_1"
    assert Composition.from_pairs(c.to_pairs()) == c
    with pytest.raises(ValueError):
        Composition.parse("1-1")
    with pytest.raises(ValueError):
        Composition.parse("2_3")


def test_compositions_of_three_in_order():
    assert texts(enumerate_compositions(3)) == [
        "3_1", "3_2", "3_3", "2_1 1_1", "2_2 1_1", "1_1 2_1", "1_1 2_2", "1_1 1_1 1_1",
    ]


def test_small_cases():
    assert enumerate_compositions(0) == []
    assert texts(enumerate_compositions(1)) == ["1_1"]
    assert len(enumerate_compositions(5)) == 55
    assert texts(enumerate_compositions_m(3, 2)) == ["2_1 1_1", "2_2 1_1", "1_1 2_1", "1_1 2_2"]
    assert texts(enumerate_compositions_m(4, 1)) == ["4_1", "4_2", "4_3", "4_4"]
    assert len(enumerate_compositions_m(4, 2)) == 10
    assert enumerate_compositions_m(3, 4) == []
    assert enumerate_self_inverse(0) == []
    assert texts(enumerate_self_inverse(1)) == ["1_1"]


def test_self_inverse_of_five():
    assert texts(enumerate_self_inverse(5)) == [
        "5_1", "5_2", "5_3", "5_4", "5_5",
        "2_1 1_1 2_1", "2_2 1_1 2_2",
        "1_1 3_1 1_1", "1_1 3_2 1_1", "1_1 3_3 1_1",
        "1_1 1_1 1_1 1_1 1_1",
    ]


def test_self_inverse_of_four():
    assert set(texts(enumerate_self_inverse(4))) == {
        "4_1", "4_2", "4_3", "4_4", "1_1 2_1 1_1", "1_1 2_2 1_1", "2_1 2_1", "2_2 2_2",
        "1_1 1_1 1_1 1_1",
    }


def test_self_inverse_by_parts():
    assert texts(enumerate_self_inverse_m(4, 2)) == ["2_1 2_1", "2_2 2_2"]
    assert set(texts(enumerate_self_inverse_m(5, 3))) == {
        "1_1 3_1 1_1", "1_1 3_2 1_1", "1_1 3_3 1_1", "2_1 1_1 2_1", "2_2 1_1 2_2",
    }
    assert enumerate_self_inverse_m(3, 2) == []


@pytest.mark.parametrize("nu", range(0, 13))
def test_matches_raw_oracle(nu):
    comps = enumerate_compositions(nu)
    assert Counter(tuple(map(tuple, c.to_pairs())) for c in comps) == Counter(raw_compositions(nu))
    assert len(comps) == fib(2 * nu)
    for c in comps:
        assert all(1 <= p.colour <= p.size for p in c)
    si = enumerate_self_inverse(nu)
    assert Counter(si) == Counter(c for c in comps if c.is_self_inverse())
    assert sorted(tuple(map(tuple, c.to_pairs())) for c in si) == sorted(raw_self_inverse(nu))


@pytest.mark.parametrize("nu", range(1, 15))
def test_counts_and_partition_by_parts(nu):
    from math import comb

    total = 0
    if nu <= 12:
        everything = set(enumerate_compositions(nu))
    for m in range(1, nu + 1):
        by_m = enumerate_compositions_m(nu, m)
        assert len(by_m) == comb(nu + m - 1, 2 * m - 1)
        assert all(len(c) == m for c in by_m)
        assert len(set(by_m)) == len(by_m)
        total += len(by_m)
        if nu <= 12:
            assert set(by_m) <= everything
    assert total == fib(2 * nu)


@pytest.mark.parametrize("nu", range(1, 16))
def test_canonical_order_and_no_duplicates(nu):
    for comps in (enumerate_self_inverse(nu),) + ((enumerate_compositions(nu),) if nu <= 10 else ()):
        keys = [c.sort_key for c in comps]
        assert keys == sorted(keys)
        assert len(set(comps)) == len(comps)
    by_parts = [c for m in range(1, nu + 1) for c in enumerate_self_inverse_m(nu, m)]
    assert Counter(enumerate_self_inverse(nu)) == Counter(by_parts)


def test_streaming_is_lazy():
    it = iter_compositions(40)
    first = next(it)
    assert str(first) == "40_1"
