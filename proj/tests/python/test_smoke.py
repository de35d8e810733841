"""Smoke tests of the python bindings against pinned exact values."""

from fractions import Fraction

import pytest

import gmtkit


def test_w_two_point_anchors():
    assert gmtkit.w_two_point(5, 5, 1, 2, 0) == 3850
    assert gmtkit.w_two_point(5, 5, 1, 1, 1) == 6725
    assert gmtkit.w_two_point(5, 4, 1, 3, 0) == 96
    assert gmtkit.w_two_point(5, 5, 1, 0, 0) == 0  # off the selection line
    assert gmtkit.w_two_point(5, 5, 2, 2, 0) == 3589125
    assert gmtkit.w_d1_closed(5, 5, 2, 0) == 3850


def test_ring_queries():
    assert gmtkit.socle_degree(5, 2) == 13
    assert gmtkit.graded_dim(3, 1, 2) == 3
    assert gmtkit.graded_dim(5, 2, 13) == 1
    assert gmtkit.graded_dim(5, 2, 14) == 0
    assert gmtkit.ring_integrate(5, 1, {(4, 4): 1}) == 1
    assert gmtkit.ring_integrate(5, 1, {(5, 3): 1}) == 0


def test_ek_poly():
    assert gmtkit.ek_poly(2) == {(2, 1): 4, (1, 2): 4}
    e5 = gmtkit.ek_poly(5)
    assert e5[(2, 4)] == Fraction(25 * 154)


def test_partitions():
    parts = gmtkit.enumerate_partitions(5)
    assert len(parts) == 7
    assert parts[0] == [1, 1, 1, 1, 1]
    assert gmtkit.multiplicity(1, [1, 1, 2]) == 2
    assert gmtkit.symmetry_factor([1, 1, 2, 2, 2]) == Fraction(1, 12)


def test_mirror_map():
    mm = gmtkit.mirror_map(5, 2)
    assert mm["w0"] == [1, 120, 113400]
    assert mm["w1"] == [0, 770, 810225]
    assert mm["t"] == [0, 770, 717825]
    assert gmtkit.check_w_mirror_identity(5, 2)


def test_gw_and_routes():
    table = gmtkit.gw_invariants(5, 5, 1)
    assert table[(1, 1)] == 2875
    assert table[(2, 0)] == 0
    assert gmtkit.gw_invariants(5, 5, 2)[(1, 1)] == Fraction(4876875, 2)

    w = {d: gmtkit.w_two_point(5, 5, d, 1, 1) for d in (1, 2)}
    route = gmtkit.cy_series_route(5, w, 2)
    assert route[1] == 2875
    assert route[2] == Fraction(4876875, 2)

    assert gmtkit.vsc(5, 5, 1, 2) == 1345
    assert gmtkit.general_type_d1(5, 6, 2) == gmtkit.gw_invariants(5, 6, 1)[(1, 0)]


def test_instanton_numbers():
    n = gmtkit.instanton_numbers(2)
    assert n[1] == 2875
    assert n[2] == 609250


def test_verify():
    report = gmtkit.verify_gmt_identity(5, 5, 2)
    assert report["ok"]
    assert all(row["residual"] == "0" for row in report["rows"])


def test_needs_correlator():
    with pytest.raises(gmtkit.NeedsCorrelatorError):
        gmtkit.gw_invariants(7, 8, 2)


def test_user_correlator_table(tmp_path):
    table = tmp_path / "correlators.json"
    table.write_text(
        '{"schema":"gmt-correlators/1","entries":['
        '{"N":7,"k":8,"d":1,"insertions":[1,1,2],"value":"7/2"}]}'
    )
    got = gmtkit.gw_invariants(7, 8, 2, str(table))[(1, 1)]
    w11 = gmtkit.w_two_point(7, 8, 2, 1, 1)
    w_sub = gmtkit.w_two_point(7, 8, 2, 2, 0)
    w_factor = gmtkit.w_two_point(7, 8, 1, 3, 0) / 8
    assert got == w11 - w_sub - Fraction(7, 2) * w_factor
    assert gmtkit.verify_gmt_identity(7, 8, 2, str(table))["ok"]
