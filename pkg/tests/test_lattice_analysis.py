from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference_lattices import column_lattice_drawing
from twistcong.cong_finite import build_lattice
from twistcong.lattice_analysis import (
    atoms, chain_lattice, coatoms, covers_of, distributive_law_holds, find_diamond, find_pentagon, is_distributive,
    is_isomorphic, is_lower_semimodular, is_modular, is_upper_semimodular, lattice_from_order, modular_law_holds,
    property_report, to_csv, to_dot, to_json,
)


def pentagon():
    # 0 < a < b < 1, c incomparable with a and b
    order = {("0", x) for x in "abc1"} | {("a", "b"), ("a", "1"), ("b", "1"), ("c", "1")}
    return lattice_from_order(["0", "a", "b", "c", "1"], lambda x, y: x == y or (x, y) in order)


def diamond():
    order = {("0", x) for x in "abc1"} | {(x, "1") for x in "abc"}
    return lattice_from_order(["0", "a", "b", "c", "1"], lambda x, y: x == y or (x, y) in order)


def boolean(k):
    subsets = [frozenset(s) for r in range(k + 1) for s in itertools.combinations(range(k), r)]
    return lattice_from_order(subsets, lambda a, b: a <= b)


class TestSmallLattices:
    def test_pentagon(self):
        lat = pentagon()
        assert find_pentagon(lat) is not None
        assert not is_modular(lat) and not modular_law_holds(lat)
        assert not is_upper_semimodular(lat) and not is_lower_semimodular(lat)

    def test_diamond(self):
        lat = diamond()
        assert find_pentagon(lat) is None and find_diamond(lat) is not None
        assert is_modular(lat) and modular_law_holds(lat)
        assert not is_distributive(lat) and not distributive_law_holds(lat)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_boolean_is_distributive(self, k):
        lat = boolean(k)
        assert is_distributive(lat) and distributive_law_holds(lat)
        assert is_upper_semimodular(lat) and is_lower_semimodular(lat)
        assert len(atoms(lat)) == len(coatoms(lat)) == k

    @given(st.integers(1, 12))
    def test_chain(self, k):
        lat = chain_lattice([str(i) for i in range(k)])
        assert len(lat.covers) == k - 1
        assert is_distributive(lat)
        assert all(lat.meet[x][y] == min(x, y) and lat.join[x][y] == max(x, y)
                   for x in range(k) for y in range(k))

    def test_not_a_lattice(self):
        with pytest.raises(ValueError):
            lattice_from_order(["a", "b"], lambda x, y: x == y)

    def test_covers_of(self):
        lat = diamond()
        assert covers_of(lat, 0) == [1, 2, 3]

    def test_isomorphism(self):
        assert is_isomorphic(diamond(), diamond())
        assert not is_isomorphic(diamond(), pentagon())


class TestExport:
    def test_dot(self):
        text = to_dot(diamond())
        assert text.startswith("digraph lattice {") and text.count("->") == 6

    def test_json_and_csv(self):
        lat = chain_lattice(["x", "y"])
        assert '"size": 2' in to_json(lat)
        assert to_csv(lat).splitlines()[:3] == ["meet,0,1", "0,0,0", "1,0,1"]

    def test_deterministic(self):
        assert to_dot(build_lattice(2, 1)) == to_dot(build_lattice(2, 1))


class TestCongruenceLattices:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_d0_matches_drawing(self, n):
        lat = build_lattice(n, 0)
        assert is_isomorphic(lat, column_lattice_drawing(n))
        assert is_distributive(lat)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_d0_size(self, n):
        assert build_lattice(n, 0).size == 3 * n + 4

    @pytest.mark.parametrize("n,d", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
    def test_modular_not_distributive(self, n, d):
        report = property_report(build_lattice(n, d))
        assert report["modular"] and not report["distributive"]
        assert report["pentagon_witness"] is None and report["diamond_witness"] is not None
        assert len(report["atoms"]) == len(report["coatoms"]) == 1

    @pytest.mark.parametrize("n,d", [(1, 2), (2, 1), (3, 1)])
    def test_modular_hence_semimodular(self, n, d):
        lat = build_lattice(n, d)
        assert is_upper_semimodular(lat) and is_lower_semimodular(lat)

    def test_n0_chain(self):
        lat = build_lattice(0, 3)
        assert lat.size == 5 and len(lat.covers) == 4
