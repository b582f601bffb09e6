import pytest

from ncolour.core import enumerate_self_inverse
from ncolour.lattice import (
    B_total,
    d_count,
    endpoint,
    endpoints_ok,
    enumerate_paths,
    is_valid_path,
    no_adjacent_verticals,
    path_triangle,
    stays_below_diagonal,
)
from ncolour.sequences import SequenceId, seq

from .oracles import luc, raw_paths


def test_small_enumerations():
    assert enumerate_paths(0, 0) == ["H"]
    assert enumerate_paths(1, 1) == ["HHV", "HVH", "VHH"]
    assert len(enumerate_paths(2, 2)) == 5
    assert "VHHHV" not in enumerate_paths(2, 2)


@pytest.mark.parametrize("nu, k, expected", [(2, 1, 5), (2, 0, 1), (3, 3, 7), (3, 2, 14), (3, 1, 7)])
def test_d_count(nu, k, expected):
    assert d_count(nu, k).count == expected


@pytest.mark.parametrize("nu, expected", [(0, 1), (1, 4), (2, 11), (3, 29)])
def test_B_total(nu, expected):
    assert B_total(nu) == expected


def test_out_of_range_k():
    assert enumerate_paths(2, 3) == []
    assert d_count(2, 3).count == 0
    assert d_count(2, 9).count == 0
    assert enumerate_paths(2, -1) == []
    assert d_count(-1, 0).count == 0


@pytest.mark.parametrize("nu", range(0, 9))
def test_dp_matches_exhaustive(nu):
    for k in range(0, nu + 2):
        paths = enumerate_paths(nu, k)
        assert d_count(nu, k).count == len(paths)
        assert paths == sorted(raw_paths(2 * nu + 1, k))
        for strict in (False, True):
            assert d_count(nu, k, strict).count == len(raw_paths(2 * nu + 1, k, strict))


@pytest.mark.parametrize("nu", range(0, 9))
def test_path_predicates(nu):
    for k in range(nu + 1):
        for p in enumerate_paths(nu, k):
            assert len(p) == 2 * nu + 1
            assert endpoint(p) == (2 * nu + 1 - k, k)
            assert no_adjacent_verticals(p)
            assert endpoints_ok(p)
            assert stays_below_diagonal(p)


def test_predicates_reject():
    assert not is_valid_path("HVVH")
    assert not is_valid_path("VHV")
    assert is_valid_path("VHH")
    assert not is_valid_path("VHH", strict=True)
    assert not is_valid_path("")
    assert not stays_below_diagonal("VV")


def test_four_way_agreement():
    for nu in range(0, 11):
        assert B_total(nu) == luc(2 * nu + 1) == seq(SequenceId.A, nu)
    for nu in range(0, 7):
        assert B_total(nu) == len(enumerate_self_inverse(2 * nu + 1))


def test_strict_reading_is_wrong():
    assert B_total(1, strict=True) == 2
    assert B_total(1, strict=True) != luc(3)
    assert enumerate_paths(1, 1, strict=True) == ["HVH"]


def test_triangle_rows():
    assert [r.count for r in path_triangle(4)] == [1, 9, 27, 30, 9]
