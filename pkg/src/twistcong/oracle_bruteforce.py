"""Ground-truth congruences of small P^Phi_{n,d}, computed on the explicit multiplication table."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .cong_finite import FCMatrix, member_classes
from .lattice_analysis import FiniteLattice, lattice_from_order
from .partition_core import Green, green, normal_closure, pd
from .symbols import DELTA, MU, MU_DOWN, MU_UP, R, CEntry
from .twisted_monoid import Pair, TwistedElement, Zero, elements_of, t_mul_d


class Monoid:
    """An explicit finite monoid: element list, index map and multiplication table."""

    def __init__(self, n: int, d: int, cap: int | None = None):
        self.n, self.d = n, d
        self.elements: list[TwistedElement] = elements_of(n, d, cap)
        self.index = {e: k for k, e in enumerate(self.elements)}
        size = len(self.elements)
        table = np.empty((size, size), dtype=np.int32)
        for x, a in enumerate(self.elements):
            for y, b in enumerate(self.elements):
                table[x, y] = self.index[t_mul_d(a, b, d)]
        self.table = table

    @property
    def size(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=16)
def monoid(n: int, d: int) -> Monoid:
    return Monoid(n, d)


@dataclass(frozen=True)
class ExtensionalCongruence:
    """Class labels over the monoid's element list, numbered by first occurrence."""

    n: int
    d: int
    classes: tuple[int, ...]

    def related(self, x: int, y: int) -> bool:
        return self.classes[x] == self.classes[y]

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for k, c in enumerate(self.classes):
            out.setdefault(c, []).append(k)
        return list(out.values())

    def relation_matrix(self) -> np.ndarray:
        c = np.asarray(self.classes)
        return c[:, None] == c[None, :]

    def to_json(self) -> list[list[int]]:
        return self.blocks()


def _normalize(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def _closure(mon: Monoid, parent: list[int], seeds: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    table = mon.table
    queue = deque()
    for x, y in seeds:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            queue.append((x, y))
    while queue:
        x, y = queue.popleft()
        for left, right in ((table[:, x], table[:, y]), (table[x, :], table[y, :])):
            for u, v in zip(left.tolist(), right.tolist()):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    queue.append((u, v))
    return _normalize([find(x) for x in range(mon.size)])


def congruence_closure(n: int, d: int, seeds: Iterable[tuple[TwistedElement, TwistedElement]]) -> ExtensionalCongruence:
    """Least congruence containing the seed pairs (given as elements)."""
    mon = monoid(n, d)
    pairs = [(mon.index[a], mon.index[b]) for a, b in seeds]
    return ExtensionalCongruence(n, d, _closure(mon, list(range(mon.size)), pairs))


def closure_by_index(mon: Monoid, pairs: Iterable[tuple[int, int]]) -> ExtensionalCongruence:
    return ExtensionalCongruence(mon.n, mon.d, _closure(mon, list(range(mon.size)), pairs))


def ext_join(mon: Monoid, c1: ExtensionalCongruence, c2: ExtensionalCongruence) -> ExtensionalCongruence:
    seeds = []
    for c in (c1, c2):
        first: dict[int, int] = {}
        for k, label in enumerate(c.classes):
            if label in first:
                seeds.append((first[label], k))
            else:
                first[label] = k
    return closure_by_index(mon, seeds)


def ext_meet(c1: ExtensionalCongruence, c2: ExtensionalCongruence) -> ExtensionalCongruence:
    return ExtensionalCongruence(c1.n, c1.d, _normalize(list(zip(c1.classes, c2.classes))))  # type: ignore[arg-type]


def ext_leq(c1: ExtensionalCongruence, c2: ExtensionalCongruence) -> bool:
    """Every c1-class lies inside a c2-class."""
    image: dict[int, int] = {}
    for a, b in zip(c1.classes, c2.classes):
        if image.setdefault(a, b) != b:
            return False
    return True


def is_compatible(mon: Monoid, c: ExtensionalCongruence) -> bool:
    """Whether the partition into classes is stable under left and right translations.

    Each member is compared with the first member of its class.
    """
    cls = np.asarray(c.classes)
    by_class: dict[int, int] = {}
    for x, label in enumerate(c.classes):
        if label in by_class:
            y = by_class[label]
            if not (np.array_equal(cls[mon.table[:, x]], cls[mon.table[:, y]])
                    and np.array_equal(cls[mon.table[x, :]], cls[mon.table[y, :]])):
                return False
        else:
            by_class[label] = x
    return True


@lru_cache(maxsize=8)
def principal_congruences(n: int, d: int) -> dict[tuple[int, int], ExtensionalCongruence]:
    mon = monoid(n, d)
    return {(x, y): closure_by_index(mon, [(x, y)]) for x in range(mon.size) for y in range(x, mon.size)}


@lru_cache(maxsize=8)
def all_congruences(n: int, d: int) -> FiniteLattice:
    """Every congruence, as joins of principal ones; ordered by refinement."""
    mon = monoid(n, d)
    found: dict[tuple[int, ...], ExtensionalCongruence] = {}
    for c in principal_congruences(n, d).values():
        found.setdefault(c.classes, c)
    frontier = list(found.values())
    principal = list(found.values())
    while frontier:
        fresh = []
        for c in frontier:
            for p in principal:
                j = ext_join(mon, c, p)
                if j.classes not in found:
                    found[j.classes] = j
                    fresh.append(j)
        frontier = fresh
    elements = sorted(found.values(), key=lambda c: (len(set(c.classes)) * -1, c.classes))
    return lattice_from_order(elements, ext_leq, [str(k) for k in range(len(elements))])


# -- reading off a matrix ---------------------------------------------------------------------


def match_to_fc(c: ExtensionalCongruence) -> FCMatrix:
    """Read the fC-matrix off an extensional congruence, then verify by re-expansion."""
    n, d = c.n, c.d
    mon = monoid(n, d)
    zero_class = c.classes[mon.index[Zero(n)]]
    cells: dict[tuple[int, int], list[int]] = {}
    for k, e in enumerate(mon.elements):
        if isinstance(e, Pair):
            cells.setdefault((e.alpha.rank, e.i), []).append(k)
    class_cells: dict[int, set[tuple[int, int]]] = {}
    for cell, members in cells.items():
        for k in members:
            class_cells.setdefault(c.classes[k], set()).add(cell)

    rows = [[DELTA] * (d + 1) for _ in range(n + 1)]
    for (q, i), members in cells.items():
        if any(c.classes[k] == zero_class for k in members):
            rows[q][i] = R
            continue
        inner = [(mon.elements[x], mon.elements[y]) for a, x in enumerate(members)
                 for y in members[a + 1:] if c.classes[x] == c.classes[y]]
        crosses = any(len(class_cells[c.classes[k]]) > 1 for k in members)
        if q >= 2:
            if inner:
                groups = {normal_closure(pd(a.alpha, b.alpha)) for a, b in inner}  # type: ignore[union-attr]
                top = max(groups, key=lambda g: g.label)
                rows[q][i] = CEntry("N", top)
            continue
        if not inner:
            rows[q][i] = MU if crosses else DELTA
            continue
        if all(green(Green.R, a.alpha, b.alpha) for a, b in inner):  # type: ignore[union-attr]
            rows[q][i] = MU_UP
        elif all(green(Green.L, a.alpha, b.alpha) for a, b in inner):  # type: ignore[union-attr]
            rows[q][i] = MU_DOWN
        else:
            rows[q][i] = MU
    m = FCMatrix.from_rows(rows)
    if member_classes(m, mon.elements) != c.classes:
        raise AssertionError(f"no fC-matrix reproduces this congruence (read {m.label()})")
    return m


def fc_to_extensional(m: FCMatrix) -> ExtensionalCongruence:
    mon = monoid(m.n, m.d)
    return ExtensionalCongruence(m.n, m.d, member_classes(m, mon.elements))


# -- relational composition ---------------------------------------------------------------------


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int32) @ b.astype(np.int32)) > 0


def compose3_relations(c1: ExtensionalCongruence, c2: ExtensionalCongruence) -> tuple[np.ndarray, np.ndarray]:
    s, t = c1.relation_matrix(), c2.relation_matrix()
    return _compose(_compose(s, t), s), _compose(_compose(t, s), t)


def compose3(c1: ExtensionalCongruence, c2: ExtensionalCongruence) -> bool:
    """Whether c1 o c2 o c1 equals c2 o c1 o c2 as relations."""
    left, right = compose3_relations(c1, c2)
    return bool(np.array_equal(left, right))
