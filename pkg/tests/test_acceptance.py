"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion in the terminal summary.

A criterion that cannot be met is reported as FAIL and marked as an expected
failure (strict), so the suite stays green only while the failure is exactly
the documented one.
"""

from __future__ import annotations

import csv
import itertools
import random
import time
from pathlib import Path

import pytest

from conftest import WORKED_ALPHA, WORKED_BETA, WORKED_PRODUCT
from reference_lattices import column_lattice_drawing
from twistcong.cong_finite import (
    FCMatrix, build_lattice, enumerate_fc, fc_generating_set, member_classes, principal_fc, principal_matrices,
)
from twistcong.cong_infinite import (
    Congruence, antichain_member, base_partition, cg_contains, cgx_contains, coatom, cong_eq, cong_leq, cyclic_coatom, delta_pair,
    drawn_order, exceptional_row, exceptional_sublattices, rank_one_sublattices, generation_bound, order_of, principal_cpair, random_element,
    rank_split_coatom, sample_congruences, strictly_smaller, universal,
)
from twistcong.enumeration import count_closed, count_gf, count_recursion
from twistcong.lattice_analysis import atoms, coatoms, find_diamond, find_pentagon, is_distributive, is_isomorphic
from twistcong.oracle_bruteforce import (
    all_congruences, compose3, compose3_relations, congruence_closure, ext_leq, fc_to_extensional, match_to_fc,
    monoid,
)
from twistcong.partition_core import Permutation, all_partitions, apply_pd, hat, multiply
from twistcong.symbols import DELTA, MU, R, group_entries
from twistcong.twisted_monoid import Pair, elements_of, t_mul_infinite

TABLE = Path(__file__).parent / "data" / "count_grid.csv"
RESULTS: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    RESULTS[criterion] = (ok, detail)


def test_criterion_1_count_grid():
    with TABLE.open() as fh:
        printed = [[int(v) for v in row[1:]] for row in list(csv.reader(fh))[1:]]
    start = time.perf_counter()
    computed = [[count_closed(n, d) for d in range(11)] for n in range(11)]
    elapsed = time.perf_counter() - start
    ok = computed == printed and elapsed < 1
    record(1, ok, f"121 values exact, {elapsed:.3f}s")
    assert ok


def test_criterion_2_four_way_counts():
    start = time.perf_counter()
    bad = [(n, d) for n in range(1, 5) for d in range(5)
           if not count_closed(n, d) == count_recursion(n, d) == count_gf(n, d) == len(enumerate_fc(n, d))]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record(2, ok, f"20 instances, disagreements {bad}, {elapsed:.2f}s")
    assert ok


def test_criterion_3_oracle_lattices():
    start = time.perf_counter()
    sizes = {}
    iso = True
    for (n, d), expected in {(1, 0): 3, (1, 1): 7, (1, 2): 14, (2, 0): 9, (2, 1): 43}.items():
        ext = all_congruences(n, d)
        sym = build_lattice(n, d)
        sizes[(n, d)] = ext.size
        mats = [match_to_fc(c) for c in ext.elements]
        bijective = len(set(mats)) == ext.size == sym.size and set(mats) == set(sym.elements)
        order_kept = all(ext_leq(c1, c2) == sym.leq(sym.index(m1), sym.index(m2))
                         for (c1, m1), (c2, m2) in itertools.product(zip(ext.elements, mats), repeat=2))
        iso = iso and expected == ext.size and bijective and order_kept
    elapsed = time.perf_counter() - start
    ok = iso and elapsed < 300
    record(3, ok, f"sizes {sizes}, {elapsed:.1f}s")
    assert ok


def test_criterion_4_principal_congruences():
    mismatches = 0
    checked = 0
    for n, d in ((2, 1), (1, 2)):
        mon = monoid(n, d)
        for a, b in itertools.product(mon.elements, repeat=2):
            checked += 1
            if member_classes(principal_fc(a, b, n, d), mon.elements) != congruence_closure(n, d, [(a, b)]).classes:
                mismatches += 1
    ok = mismatches == 0
    record(4, ok, f"{checked} ordered pairs, {mismatches} mismatches")
    assert ok


def _r_s2(n: int) -> FCMatrix:
    col = [R, R, group_entries(2)[-1]] + [DELTA] * (n - 2)
    return FCMatrix.from_rows([[e] for e in col])


def test_criterion_5_generation():
    worst = 0
    for n, d in ((2, 1), (2, 2)):
        for m in enumerate_fc(n, d):
            omega = fc_generating_set(m)
            worst = max(worst, len(omega))
            assert len(omega) <= generation_bound(2) == 5
            assert match_to_fc(congruence_closure(n, d, omega)) == m
    for n in (2, 3, 4):
        mats = enumerate_fc(n, 0)
        principal = principal_matrices(n, 0)
        if n <= 3:  # cross-check the symbolic witnesses against every element pair
            el = elements_of(n, 0)
            assert principal == {principal_fc(a, b, n, 0) for k, a in enumerate(el) for b in el[k:]}
        assert [m for m in mats if m not in principal] == [_r_s2(n)]
        assert len(fc_generating_set(_r_s2(n))) == 2
    omega = fc_generating_set(_r_s2(2))
    assert match_to_fc(congruence_closure(2, 0, omega)) == _r_s2(2)
    record(5, True, f"largest generating set {worst} <= 5; R_S2 the only non-principal, 2 pairs, n = 2..4")


def test_criterion_6_lattice_properties():
    start = time.perf_counter()
    for n in (4, 5):
        lat = build_lattice(n, 0)
        assert lat.size == 3 * n + 4 and is_distributive(lat)
        assert is_isomorphic(lat, column_lattice_drawing(n))
        assert len(atoms(lat)) == len(coatoms(lat)) == 1
    for n, d in ((1, 1), (1, 2), (2, 1), (2, 2), (3, 1)):
        lat = build_lattice(n, d)
        assert find_pentagon(lat) is None and find_diamond(lat) is not None
        assert len(atoms(lat)) == len(coatoms(lat)) == 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 60
    record(6, ok, f"d = 0 distributive and matching the drawing; d > 0 modular, not distributive; {elapsed:.1f}s")
    assert ok


def test_criterion_7_jonsson():
    sigma = fc_to_extensional(FCMatrix.from_rows([[DELTA, R], [DELTA, R], [DELTA, DELTA]]))
    tau = fc_to_extensional(FCMatrix.from_rows([[MU, R], [DELTA, MU], [DELTA, DELTA]]))
    sts, tst = compose3_relations(sigma, tau)
    mon = monoid(2, 1)
    rank1 = [p for p in all_partitions(2) if p.rank == 1]
    witnesses = [(a, b) for a, b in itertools.permutations(rank1, 2) if hat(a) != hat(b)]
    one_sided = all(tst[mon.index[Pair(0, hat(a))], mon.index[Pair(0, hat(b))]]
                    and not sts[mon.index[Pair(0, hat(a))], mon.index[Pair(0, hat(b))]] for a, b in witnesses)
    ok = not compose3(sigma, tau) and one_sided
    record(7, ok, f"compositions differ; witness on one side for all {len(witnesses)} choices")
    assert ok


def _exceptional_pairs(count: int, rng: random.Random):
    out = []
    while len(out) < count:
        n = rng.choice([2, 3, 4])
        q = rng.randint(2, n)
        alpha = base_partition(n, q)
        beta = apply_pd(alpha, Permutation.from_cycles(q, (1, 2)))
        i = rng.randint(0, 4)
        out.append((Pair(i, alpha), Pair(i + rng.randint(1, 4), beta)))
    return out


def _coatom_escapes(rng: random.Random, count: int):
    """Principal congruences of random non-universal pairs that are not below coatom(n)."""
    escapes = []
    tried = 0
    while tried < count:
        n = rng.choice([1, 2, 3, 4])
        a, b = random_element(n, rng), random_element(n, rng)
        p = principal_cpair(a, b)
        if cong_eq(p, universal(n)):
            continue
        tried += 1
        if not cong_leq(p, coatom(n)):
            escapes.append((n, a, b))
    return escapes


def _other_coatoms(n: int) -> list[Congruence]:
    extra = [cyclic_coatom(p) for p in (2, 3, 5, 7, 11, 13)] if n == 1 else []
    return [rank_split_coatom(n)] + extra


def test_criterion_8_infinite_structure():
    start = time.perf_counter()
    for sub in exceptional_sublattices(2) + exceptional_sublattices(3) + rank_one_sublattices():
        assert order_of(sub) == drawn_order(sub)
    chain = [antichain_member(l) for l in range(2, 9)]
    assert not any(cong_leq(s, t) for s, t in itertools.permutations(chain, 2))
    rng = random.Random(8)
    for a, b in _exceptional_pairs(50, rng):
        s = principal_cpair(a, b)
        q = exceptional_row(s.pair)
        t = s.pair.theta[q]
        alpha = base_partition(a.n, q)
        x, y = Pair(t.m, alpha), Pair(t.m + t.d // 2, apply_pd(alpha, Permutation.from_cycles(q, (1, 2))))
        assert s.exceptional and cgx_contains(s.pair, x, y) and not cg_contains(s.pair, x, y)
    smaller = 0
    for n in (1, 2, 3):
        delta = Congruence(delta_pair(n))
        for s in sample_congruences(n, 80, seed=800 + n):
            if smaller == 100 or cong_eq(s, delta):
                continue
            t = strictly_smaller(s)
            assert cong_leq(t, s) and not cong_leq(s, t) and not cong_leq(t, delta)
            smaller += 1
    assert smaller == 100
    elapsed = time.perf_counter() - start
    assert elapsed < 30
    RESULTS[8] = (True, f"diamonds and pentagons, antichain, 50 cgx witnesses, 100 strict shrinks in {elapsed:.1f}s")


@pytest.mark.xfail(strict=True, reason="coatom(n) is not the only coatom; see the escape detail")
def test_criterion_8_coatom_containment():
    escapes = _coatom_escapes(random.Random(2024), 200)
    ok = not escapes
    structure_ok, structure = RESULTS.get(8, (False, "structure clauses not run"))
    if escapes:
        n, a, b = escapes[0]
        other = all(any(cong_leq(principal_cpair(x, y), c) for c in _other_coatoms(m)) for m, x, y in escapes)
        detail = (f"{structure}; coatom clause FAILS: {len(escapes)}/200 principal congruences escape coatom(n) "
                  f"(first: n={n}, {a} ~ {b}); each lies below a different coatom: {other}")
    else:
        detail = f"{structure}; coatom contains all 200 principal congruences"
    record(8, structure_ok and ok, detail)
    assert ok


def test_criterion_9_diagram_arithmetic():
    bell = {0: 1, 1: 2, 2: 15, 3: 203}
    assert all(len(all_partitions(n)) == bell[n] for n in range(4))
    rng = random.Random(9)
    for _ in range(1000):
        n = rng.randint(1, 4)
        a, b, c = (random_element(n, rng) for _ in range(3))
        assert t_mul_infinite(t_mul_infinite(a, b), c) == t_mul_infinite(a, t_mul_infinite(b, c))
    assert multiply(WORKED_ALPHA, WORKED_BETA) == (WORKED_PRODUCT, 1)
    record(9, True, "|P_n| = B(2n) for n <= 3; 1000 associative triples; worked product with 1 floating component")
