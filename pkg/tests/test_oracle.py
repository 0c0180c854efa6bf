from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from twistcong.cong_finite import FCMatrix, build_lattice, delta_fc, fcong_leq, universal_fc
from twistcong.lattice_analysis import is_isomorphic
from twistcong.oracle_bruteforce import (
    ExtensionalCongruence, all_congruences, closure_by_index, compose3, compose3_relations, congruence_closure, ext_join, ext_leq, ext_meet,
    fc_to_extensional, is_compatible, match_to_fc, monoid,
)
from twistcong.partition_core import all_partitions, hat
from twistcong.symbols import DELTA, MU, R
from twistcong.twisted_monoid import Pair, elements_of


def jonsson_pair():
    sigma = FCMatrix.from_rows([[DELTA, R], [DELTA, R], [DELTA, DELTA]])
    tau = FCMatrix.from_rows([[MU, R], [DELTA, MU], [DELTA, DELTA]])
    return sigma, tau


class TestClosure:
    def test_empty_seeds_give_diagonal(self):
        c = congruence_closure(2, 1, [])
        assert len(set(c.classes)) == monoid(2, 1).size

    def test_all_pairs_give_universal(self):
        el = elements_of(1, 1)
        c = congruence_closure(1, 1, [(a, b) for a in el for b in el])
        assert set(c.classes) == {0}

    def test_outputs_are_congruences(self):
        mon = monoid(2, 1)
        rng = random.Random(0)
        for _ in range(40):
            seeds = [(rng.randrange(mon.size), rng.randrange(mon.size)) for _ in range(rng.randint(1, 3))]
            assert is_compatible(mon, closure_by_index(mon, seeds))

    def test_incompatible_equivalence_detected(self):
        mon = monoid(1, 1)
        classes = [0] * mon.size
        classes[0] = 1
        assert not is_compatible(mon, ExtensionalCongruence(1, 1, tuple(classes)))

    def test_closure_is_least(self):
        """Every congruence containing the seed contains its closure."""
        lat = all_congruences(1, 2)
        mon = monoid(1, 2)
        for x, y in itertools.combinations(range(mon.size), 2):
            p = closure_by_index(mon, [(x, y)])
            for c in lat.elements:
                if c.related(x, y):
                    assert ext_leq(p, c)


class TestAllCongruences:
    @pytest.mark.parametrize("n,d,size", [(1, 0, 3), (1, 1, 7), (1, 2, 14), (2, 0, 9), (2, 1, 43)])
    def test_size(self, n, d, size):
        assert all_congruences(n, d).size == size

    @pytest.mark.parametrize("n,d", [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)])
    def test_matches_symbolic_lattice(self, n, d):
        ext = all_congruences(n, d)
        sym = build_lattice(n, d)
        mats = [match_to_fc(c) for c in ext.elements]
        assert sorted(m.label() for m in mats) == sorted(m.label() for m in sym.elements)
        for (c1, m1), (c2, m2) in itertools.product(zip(ext.elements, mats), repeat=2):
            assert ext_leq(c1, c2) == fcong_leq(m1, m2)
        assert is_isomorphic(ext, sym)

    def test_meet_and_join_closed(self):
        ext = all_congruences(1, 2)
        mon = monoid(1, 2)
        found = {c.classes for c in ext.elements}
        for a, b in itertools.product(ext.elements, repeat=2):
            assert ext_join(mon, a, b).classes in found
            assert ext_meet(a, b).classes in found


class TestMatching:
    def test_diagonal_and_universal(self):
        assert match_to_fc(congruence_closure(2, 1, [])) == delta_fc(2, 1)
        el = elements_of(2, 1)
        assert match_to_fc(congruence_closure(2, 1, [(el[0], e) for e in el])) == universal_fc(2, 1)

    def test_round_trip(self):
        for m in build_lattice(2, 1).elements:
            assert match_to_fc(fc_to_extensional(m)) == m


class TestComposition:
    def test_jonsson_condition_fails(self):
        sigma, tau = (fc_to_extensional(m) for m in jonsson_pair())
        assert not compose3(sigma, tau)
        sts, tst = compose3_relations(sigma, tau)
        mon = monoid(2, 1)
        rank1 = [p for p in all_partitions(2) if p.rank == 1]
        a = rank1[0]
        b = next(p for p in rank1 if hat(p) != hat(a))
        x, y = mon.index[Pair(0, hat(a))], mon.index[Pair(0, hat(b))]
        assert tst[x, y] and not sts[x, y]

    def test_equal_arguments(self):
        sigma, _ = (fc_to_extensional(m) for m in jonsson_pair())
        assert compose3(sigma, sigma)

    def test_diagonal_argument(self):
        _, tau = (fc_to_extensional(m) for m in jonsson_pair())
        delta = fc_to_extensional(delta_fc(2, 1))
        assert compose3(delta, tau)
        left, right = compose3_relations(delta, tau)
        assert np.array_equal(right, tau.relation_matrix())
