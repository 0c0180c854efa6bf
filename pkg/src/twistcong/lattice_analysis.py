"""Finite lattices: construction from an order, property checks, forbidden sublattices, export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence


@dataclass
class FiniteLattice:
    """A finite lattice on ``elements`` with order, covers and meet/join tables by index.

    ``up[x]`` and ``down[x]`` are bitmasks of the elements above/below x (inclusive).
    """

    elements: list
    up: list[int]
    down: list[int]
    covers: list[tuple[int, int]] = field(default_factory=list)
    meet: list[list[int]] = field(default_factory=list)
    join: list[list[int]] = field(default_factory=list)
    labels: list[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.elements)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def index(self, element: Hashable) -> int:
        return self.elements.index(element)

    @property
    def bottom(self) -> int:
        return min(range(self.size), key=lambda x: _popcount(self.down[x]))

    @property
    def top(self) -> int:
        return max(range(self.size), key=lambda x: _popcount(self.down[x]))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int) -> list[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def lattice_from_order(elements: Sequence, leq: Callable[[object, object], bool],
                       labels: Sequence[str] | None = None) -> FiniteLattice:
    """Build covers and meet/join tables; raises if the order is not a lattice."""
    size = len(elements)
    up = [0] * size
    down = [0] * size
    for x in range(size):
        for y in range(size):
            if x == y or leq(elements[x], elements[y]):
                up[x] |= 1 << y
                down[y] |= 1 << x
    for x in range(size):
        for y in range(x + 1, size):
            if up[x] >> y & 1 and up[y] >> x & 1:
                raise ValueError(f"order is not antisymmetric at {elements[x]} and {elements[y]}")
    return _finish(list(elements), up, down, list(labels) if labels else [str(e) for e in elements])


def _finish(elements: list, up: list[int], down: list[int], labels: list[str]) -> FiniteLattice:
    size = len(elements)
    height = [_popcount(d) for d in down]
    depth = [_popcount(u) for u in up]
    covers = []
    for x in range(size):
        strict_up = up[x] & ~(1 << x)
        for y in _bits(strict_up):
            between = strict_up & down[y] & ~(1 << y)
            if not between:
                covers.append((x, y))
    meet = [[0] * size for _ in range(size)]
    join = [[0] * size for _ in range(size)]
    for x in range(size):
        for y in range(x, size):
            lower = down[x] & down[y]
            upper = up[x] & up[y]
            if not lower or not upper:
                raise ValueError("order is not a lattice (missing bound)")
            m = max(_bits(lower), key=lambda z: height[z])
            j = max(_bits(upper), key=lambda z: depth[z])
            if lower & ~down[m] or upper & ~up[j]:
                raise ValueError(f"order is not a lattice at {labels[x]}, {labels[y]}")
            meet[x][y] = meet[y][x] = m
            join[x][y] = join[y][x] = j
    return FiniteLattice(elements, up, down, covers, meet, join, labels)


def chain_lattice(labels: Sequence[str]) -> FiniteLattice:
    elements = list(labels)
    return lattice_from_order(list(range(len(elements))), lambda a, b: a <= b, elements)


# -- properties ---------------------------------------------------------------------


def atoms(lat: FiniteLattice) -> list[int]:
    b = lat.bottom
    return sorted(y for (x, y) in lat.covers if x == b)


def coatoms(lat: FiniteLattice) -> list[int]:
    t = lat.top
    return sorted(x for (x, y) in lat.covers if y == t)


def covers_of(lat: FiniteLattice, x: int) -> list[int]:
    """Elements covering x."""
    return sorted(y for (a, y) in lat.covers if a == x)


def find_pentagon(lat: FiniteLattice) -> tuple[int, int, int, int, int] | None:
    """Return ``(bottom, a, b, c, top)`` with a < b, c incomparable to both, forming N5."""
    size = lat.size
    mt, jn = lat.meet, lat.join
    for c in range(size):
        for a in range(size):
            if lat.leq(a, c) or lat.leq(c, a):
                continue
            lo, hi = mt[a][c], jn[a][c]
            # b ranges over the elements strictly above a, below hi, incomparable to c
            for b in _bits(lat.up[a] & lat.down[hi]):
                if b == a or b == hi or lat.leq(c, b) or lat.leq(b, c):
                    continue
                if mt[b][c] == lo and jn[b][c] == hi:
                    return (lo, a, b, c, hi)
    return None


def find_diamond(lat: FiniteLattice) -> tuple[int, int, int, int, int] | None:
    """Return ``(bottom, x, y, z, top)`` forming an M3 sublattice."""
    size = lat.size
    mt, jn = lat.meet, lat.join
    for x in range(size):
        for y in range(x + 1, size):
            if lat.leq(x, y) or lat.leq(y, x):
                continue
            lo, hi = mt[x][y], jn[x][y]
            for z in _bits(lat.up[lo] & lat.down[hi]):
                if z <= y or z in (lo, hi):
                    continue
                if (mt[x][z] == lo and mt[y][z] == lo and jn[x][z] == hi and jn[y][z] == hi):
                    return (lo, x, y, z, hi)
    return None


def is_modular(lat: FiniteLattice) -> bool:
    return find_pentagon(lat) is None


def is_distributive(lat: FiniteLattice) -> bool:
    return find_pentagon(lat) is None and find_diamond(lat) is None


def modular_law_holds(lat: FiniteLattice) -> bool:
    """Direct check of a <= b  =>  a v (c ^ b) = (a v c) ^ b."""
    mt, jn = lat.meet, lat.join
    r = range(lat.size)
    return all(jn[a][mt[c][b]] == mt[jn[a][c]][b]
               for a in r for b in r if lat.leq(a, b) for c in r)


def distributive_law_holds(lat: FiniteLattice) -> bool:
    mt, jn = lat.meet, lat.join
    r = range(lat.size)
    return all(mt[a][jn[b][c]] == jn[mt[a][b]][mt[a][c]] for a in r for b in r for c in r)


def is_upper_semimodular(lat: FiniteLattice) -> bool:
    cov = set(lat.covers)
    r = range(lat.size)
    return all((b, lat.join[a][b]) in cov
               for a in r for b in r if (lat.meet[a][b], a) in cov)


def is_lower_semimodular(lat: FiniteLattice) -> bool:
    cov = set(lat.covers)
    r = range(lat.size)
    return all((lat.meet[a][b], b) in cov
               for a in r for b in r if (a, lat.join[a][b]) in cov)


def property_report(lat: FiniteLattice) -> dict:
    pent = find_pentagon(lat)
    dia = find_diamond(lat)

    def named(w):
        return None if w is None else [lat.labels[k] for k in w]

    return {
        "size": lat.size,
        "atoms": [lat.labels[k] for k in atoms(lat)],
        "coatoms": [lat.labels[k] for k in coatoms(lat)],
        "modular": pent is None,
        "distributive": pent is None and dia is None,
        "upper_semimodular": is_upper_semimodular(lat),
        "lower_semimodular": is_lower_semimodular(lat),
        "pentagon_witness": named(pent),
        "diamond_witness": named(dia),
    }


def is_isomorphic(l1: FiniteLattice, l2: FiniteLattice) -> bool:
    """Order isomorphism test via networkx digraph matching on the Hasse diagrams."""
    import networkx as nx

    if l1.size != l2.size or len(l1.covers) != len(l2.covers):
        return False
    g1 = nx.DiGraph(l1.covers)
    g1.add_nodes_from(range(l1.size))
    g2 = nx.DiGraph(l2.covers)
    g2.add_nodes_from(range(l2.size))
    return nx.is_isomorphic(g1, g2)


# -- export ------------------------------------------------------------------------------


def to_dot(lat: FiniteLattice, name: str = "lattice") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for k, label in enumerate(lat.labels):
        text = label.replace('"', '\\"').replace("\n", "\\n")
        lines.append(f'  n{k} [label="{text}"];')
    for x, y in lat.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(lat: FiniteLattice, elements_json: Sequence | None = None) -> str:
    payload = {
        "size": lat.size,
        "elements": list(elements_json) if elements_json is not None else lat.labels,
        "covers": [list(c) for c in lat.covers],
    }
    return json.dumps(payload, indent=2) + "\n"


def to_csv(lat: FiniteLattice) -> str:
    """Meet table followed by join table, each headed by element indices."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for name, table in (("meet", lat.meet), ("join", lat.join)):
        w.writerow([name] + list(range(lat.size)))
        for k, row in enumerate(table):
            w.writerow([k] + row)
    return buf.getvalue()
