from __future__ import annotations

import random

import pytest
from conftest import WORKED_ALPHA, WORKED_BETA, WORKED_PRODUCT

from twistcong.partition_core import Green, all_partitions, identity, make_partition, singletons
from twistcong.twisted_monoid import (
    GridIndex, Pair, Zero, element_from_json, elements_of, grid_index, in_ideal, t_green, t_mul_d, t_mul_infinite,
)


class TestInfiniteProduct:
    def test_identity(self):
        e = Pair(0, identity(3))
        assert t_mul_infinite(e, e) == e
        x = Pair(4, WORKED_ALPHA)
        assert t_mul_infinite(x, Pair(0, identity(6))) == x

    def test_worked_columns(self):
        assert t_mul_infinite(Pair(1, WORKED_ALPHA), Pair(2, WORKED_BETA)) == Pair(4, WORKED_PRODUCT)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            t_mul_infinite(Zero(2), Pair(0, identity(2)))


class TestFiniteProduct:
    def test_floating_component_overflows_at_d0(self):
        s = singletons(2)
        assert t_mul_d(Pair(0, s), Pair(0, s), 0) == Zero(2)

    def test_column_sum_overflow(self):
        for a in all_partitions(2):
            for b in all_partitions(2):
                assert t_mul_d(Pair(1, a), Pair(1, b), 1) == Zero(2)

    def test_worked_product_at_d4(self):
        assert t_mul_d(Pair(1, WORKED_ALPHA), Pair(2, WORKED_BETA), 4) == Pair(4, WORKED_PRODUCT)

    def test_column_above_d_rejected(self):
        with pytest.raises(ValueError):
            t_mul_d(Pair(3, identity(2)), Pair(0, identity(2)), 2)

    @pytest.mark.parametrize("n, d", [(2, 1), (2, 2), (3, 1)])
    def test_associative_and_zero_absorbing(self, n, d):
        rng = random.Random(n * 10 + d)
        elems = elements_of(n, d)
        for _ in range(1000):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert t_mul_d(t_mul_d(a, b, d), c, d) == t_mul_d(a, t_mul_d(b, c, d), d)
            assert t_mul_d(a, Zero(n), d) == Zero(n) == t_mul_d(Zero(n), a, d)


class TestGreenAndGrid:
    def test_columns_separate_classes(self):
        for rel in Green:
            assert not t_green(rel, Pair(2, WORKED_ALPHA), Pair(3, WORKED_ALPHA))
            assert t_green(rel, Pair(2, WORKED_ALPHA), Pair(2, WORKED_ALPHA))

    def test_zero_only_related_to_zero(self):
        assert t_green(Green.D, Zero(2), Zero(2))
        assert not t_green(Green.D, Zero(2), Pair(0, identity(2)))

    def test_d_classes_of_p21(self):
        elems = elements_of(2, 1)
        assert len(elems) == 31
        classes: list[list] = []
        for x in elems:
            for cls in classes:
                if t_green(Green.D, cls[0], x):
                    cls.append(x)
                    break
            else:
                classes.append([x])
        assert len(classes) == 7
        grids = {frozenset(grid_index(x) for x in cls) for cls in classes if not isinstance(cls[0], Zero)}
        assert grids == {frozenset({GridIndex(q, i)}) for q in range(3) for i in range(2)}

    def test_grid_index(self):
        assert grid_index(Pair(0, identity(2))) == GridIndex(2, 0)
        assert grid_index(Pair(3, singletons(2))) == GridIndex(0, 3)
        assert grid_index(Pair(1, WORKED_ALPHA)) == GridIndex(1, 1)
        with pytest.raises(ValueError):
            grid_index(Zero(2))


class TestIdeals:
    def test_examples(self):
        rank1 = make_partition(2, [[1, -1], [2], [-2]])
        assert in_ideal(Pair(3, rank1), 1, 2)
        assert not in_ideal(Pair(1, identity(2)), 1, 2)
        assert in_ideal(Zero(2), 2, 0)

    def test_union_of_three_principal_ideals(self):
        corners = [(0, 0), (1, 2), (3, 3)]

        def member(x):
            return any(in_ideal(x, q, i) for q, i in corners)

        base = {q: make_partition(4, [[k, -k] for k in range(1, q + 1)]
                                  + [[p] for k in range(q + 1, 5) for p in (k, -k)]) for q in range(5)}
        assert member(Pair(3, base[2]))
        assert not member(Pair(1, base[1]))

    def test_ideal_order_matches_grid_order(self):
        for q in range(3):
            for i in range(3):
                for r in range(3):
                    for j in range(3):
                        x = Pair(j, make_partition(2, [[k, -k] for k in range(1, r + 1)]
                                                   + [[p] for k in range(r + 1, 3) for p in (k, -k)]))
                        assert in_ideal(x, q, i) == (r <= q and j >= i)


class TestElements:
    @pytest.mark.parametrize("n, d, size", [(1, 1, 5), (2, 1, 31), (2, 2, 46)])
    def test_sizes(self, n, d, size):
        assert len(elements_of(n, d)) == size

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            elements_of(3, 20, cap=100)

    def test_json(self):
        x = Pair(2, WORKED_ALPHA)
        assert element_from_json(x.to_json()) == x
        assert element_from_json({"zero": True}, 3) == Zero(3)
