from __future__ import annotations

import csv
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistcong.cong_finite import enumerate_fc
from twistcong.enumeration import (
    a_array, a_closed, column_label, count_closed, count_gf, count_recursion, gf_coefficients, gf_denominator,
    k_of_n, table, table_csv,
)
from twistcong.symbols import DELTA, MU, R

TABLE = Path(__file__).parent / "data" / "count_grid.csv"


def printed_table() -> list[list[int]]:
    with TABLE.open() as fh:
        rows = list(csv.reader(fh))
    return [[int(v) for v in row[1:]] for row in rows[1:]]


def test_closed_form_matches_printed_grid():
    assert table(10, 10) == printed_table()


def test_csv_layout_is_byte_identical():
    assert table_csv(10, 10) == TABLE.read_text()


def test_one_by_one_grid():
    assert table_csv(0, 0) == "n\\d,0\n0,2\n"


@pytest.mark.parametrize("n,d,value", [(2, 1, 43), (3, 2, 329), (4, 4, 12806), (10, 10, 6189136484)])
def test_anchor_values(n, d, value):
    assert count_closed(n, d) == count_recursion(n, d) == count_gf(n, d) == value


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(0, 5))
def test_four_way_agreement(n, d):
    assert count_closed(n, d) == count_recursion(n, d) == count_gf(n, d) == len(enumerate_fc(n, d))


def test_gf_matches_closed_form_beyond_the_table():
    coeffs = gf_coefficients(14, 14)
    assert all(coeffs[n][d] == count_closed(n, d) for n in range(15) for d in range(15))


def test_gf_denominator_constant_is_unit():
    assert abs(gf_denominator()[(0, 0)]) == 1


def test_gf_budget():
    with pytest.raises(ValueError):
        gf_coefficients(41, 0)


@given(st.integers(0, 25), st.integers(1, 25))
def test_pascal_identity(k, d):
    if k >= 1:
        assert a_array(k, d) == a_array(k - 1, d) + a_array(k, d - 1)
    assert a_array(k, d) == a_closed(k, d)


def test_array_rows_give_counts():
    for n in range(2, 11):
        for d in range(11):
            assert a_array(k_of_n(n), d) == count_closed(n, d)


def test_d_zero_is_linear_from_four():
    assert [count_closed(n, 0) for n in range(4, 11)] == [3 * n + 4 for n in range(4, 11)]


@pytest.mark.parametrize("n,degree", [(1, 2), (2, 4), (3, 7), (4, 11), (5, 14)])
def test_polynomial_degree_in_d(n, degree):
    """Finite differences of order degree+1 vanish, and order degree does not."""
    values = [count_closed(n, d) for d in range(degree + 6)]
    for _ in range(degree):
        values = [b - a for a, b in zip(values, values[1:])]
    assert len(set(values)) == 1 and values[0] > 0


def test_n_zero_is_a_chain_count():
    assert [count_recursion(0, d) for d in range(6)] == [2, 3, 4, 5, 6, 7]


def test_negative_arguments_rejected():
    for f in (count_closed, count_recursion, count_gf):
        with pytest.raises(ValueError):
            f(-1, 0)


def test_column_labels():
    assert column_label([DELTA, DELTA, DELTA]) == "Delta"
    assert column_label([R, MU, DELTA]) == "mu"
    assert column_label([R, R, DELTA]) == "R1"
    with pytest.raises(ValueError):
        column_label([MU, DELTA])
