"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import specred


def test_version():
    assert specred.__version__


def test_cubic_coefficients():
    assert specred.cubic(7, 110) == [550, -116, -5, 1]
    assert specred.cubic(2, 3) == [0, -4, 0, 1]


def test_counts_and_redundancy():
    assert specred.b_count(4, 3) == 13
    assert specred.c_count(4, 3) == 12
    assert specred.redundancy(4, 3) == Fraction(13, 12)
    assert specred.c_count(3, 8) == 17
    assert specred.redundancy(2, 5) == 1


def test_spectral_radius_payload():
    radius = specred.spectral_radius(9, 99)
    assert radius["exact"] == "11"
    assert radius["decimal"] == "11.000000"
    # exact defining data always rides along with the decimal
    root5 = specred.spectral_radius(2, 4, digits=4)
    assert root5["minpoly"] == ["0", "-5", "0", "1"]
    assert root5["decimal"] == "2.2361"


def test_graph6_round_trip():
    text = specred.build_pineapple(4, 3)
    info = specred.graph_info(text)
    assert info["n"] == 7
    assert info["connected"] is True
    assert info["graph6"] == text
    with pytest.raises(specred.ParseError):
        specred.graph_info("~nope")


def test_spectrum_report():
    report = specred.spectrum("D?{")  # 4-pendant star: elementary, so b = c = n
    assert report["b"] == 5
    assert report["c"] == 5
    assert report["redundancy"]["exact"] == "1"
    p43 = specred.spectrum(specred.build_pineapple(4, 3))
    assert p43["b"] == 13
    assert p43["c"] == 12
    assert len(p43["collisions"]) == 1


def test_guard_error_surfaces():
    with pytest.raises(specred.GuardError):
        specred.spectrum(specred.build_pineapple(5, 7), max_n=10)


def test_two_common_catalog():
    pairs = specred.two_common(22)
    wanted = [p for p in pairs if (p["p1"], p["p2"]) in (
        ({"alpha": 16, "beta": 44}, {"alpha": 8, "beta": 220}),
        ({"alpha": 8, "beta": 220}, {"alpha": 16, "beta": 44}),
    )]
    assert len(wanted) == 1
    assert wanted[0]["shared_poly"]["coefficients"] == ["88", "-21", "1"]
    assert wanted[0]["kind"] == "two-common-largest"


def test_one_common_catalog():
    pairs = specred.one_common(11)
    by_params = {(p["p1"]["alpha"], p["p1"]["beta"], p["p2"]["alpha"], p["p2"]["beta"]): p for p in pairs}
    radius_pair = by_params[(7, 110, 9, 99)]
    assert radius_pair["kind"] == "one-common-radius"
    assert radius_pair["shared"][0]["value"]["exact"] == "11"
    other = by_params[(17, 165, 19, 154)]
    assert other["kind"] == "one-common-non-radius"


def test_integer_radius_pair():
    pair = specred.integer_radius_pair(5)
    params = {(pair["p1"]["alpha"], pair["p1"]["beta"]), (pair["p2"]["alpha"], pair["p2"]["beta"])}
    assert params == {(6, 0), (5, 15)}
    assert pair["kind"] == "one-common-radius"
