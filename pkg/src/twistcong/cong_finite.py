"""Congruences of the finite d-twisted partition monoids via finitary C-matrices.

An :class:`FCMatrix` has rows ``0..n`` (row q describes rank-q elements) and
columns ``0..d``.  Rows 0 and 1 are recognized jointly against the four
finitary row types; higher rows are runs of Delta, then nontrivial normal
subgroups increasing left to right, then R.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple

from .cong_infinite import base_partition, group_generator, rank1_partner
from .lattice_analysis import FiniteLattice, chain_lattice, lattice_from_order
from .partition_core import Green, apply_pd, green, hat, normal_closure, pd, subgroup_contains
from .symbols import DELTA, MU, MU_DOWN, MU_UP, R, CEntry, entry_join, entry_leq, entry_meet, group_entries, parse_entry
from .twisted_monoid import Pair, TwistedElement, Zero

DEFAULT_FC_CAP = 10**7

ZETAS = (DELTA, MU_UP, MU_DOWN, MU)


class RowType(NamedTuple):
    """Parameters of rows 0 and 1; unused parameters are None."""

    tag: str  # "fRT1" .. "fRT4"
    k: int | None = None
    i: int | None = None
    l: int | None = None
    zeta: CEntry | None = None


@dataclass(frozen=True)
class FCMatrix:
    n: int
    d: int
    grid: tuple[tuple[CEntry, ...], ...]  # grid[q][i]

    def entry(self, q: int, i: int) -> CEntry:
        return self.grid[q][i]

    def min_row(self, q: int) -> int:
        """First column holding R in row q, or d+1 when there is none."""
        for i, e in enumerate(self.grid[q]):
            if e == R:
                return i
        return self.d + 1

    @cached_property
    def row_type(self) -> RowType | None:
        return _low_row_types(self.d, self.n == 1).get((self.grid[0], self.grid[1]))

    def mu_in(self) -> tuple[int, int] | None:
        rt = self.row_type
        if rt is None:
            return None
        if rt.tag == "fRT2":
            return rt.i, rt.i + 1  # type: ignore[operator]
        if rt.tag == "fRT4":
            return rt.k - 1, rt.l - 1  # type: ignore[operator]
        return None

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "grid": [[str(e) for e in row] for row in self.grid]}

    @classmethod
    def from_json(cls, data: dict) -> "FCMatrix":
        grid = tuple(tuple(parse_entry(e) for e in row) for row in data["grid"])
        return cls(int(data["n"]), int(data["d"]), grid)

    @classmethod
    def from_rows(cls, rows: list[list[CEntry]]) -> "FCMatrix":
        return cls(len(rows) - 1, len(rows[0]) - 1, tuple(tuple(r) for r in rows))

    def label(self) -> str:
        """Compact text, top row first, columns separated by spaces."""
        return "/".join(" ".join(e.short() for e in row) for row in reversed(self.grid))

    def __str__(self) -> str:
        return self.label()


# -- row types of rows 0 and 1 ----------------------------------------------------------


def _rows_fRT1(d: int, k: int) -> tuple[list[CEntry], list[CEntry]]:
    row = [DELTA] * k + [R] * (d + 1 - k)
    return row, list(row)


def _rows_fRT2(d: int, i: int, k: int, zeta: CEntry):
    row0 = [DELTA] * i + [MU] * (k - i) + [R] * (d + 1 - k)
    row1 = [DELTA] * i + [zeta] + [MU] * (k - i) + [R] * (d - k)
    return row0, row1


def _rows_fRT3(d: int, k: int, l: int, zeta: CEntry):
    row0 = [DELTA] * k + [R] * (d + 1 - k)
    row1 = [DELTA] * (l - 1) + [zeta] + [R] * (d + 1 - l)
    return row0, row1


def _rows_fRT4(d: int, k: int, l: int):
    row0 = [DELTA] * (k - 1) + [MU] + [R] * (d + 1 - k)
    row1 = [DELTA] * (l - 1) + [MU] + [R] * (d + 1 - l)
    return row0, row1


def low_row_candidates(d: int, n_is_one: bool = False) -> Iterator[tuple[RowType, list[CEntry], list[CEntry]]]:
    """Every admissible (rows 0, 1) pair in a fixed order.

    When n = 1 the symbols mu_up, mu_down collapse to Delta and an unmatched
    row-1 mu is indistinguishable from Delta, so zeta is restricted to Delta.
    """
    zetas = (DELTA,) if n_is_one else ZETAS
    for k in range(d + 2):
        yield (RowType("fRT1", k=k), *_rows_fRT1(d, k))
    for i in range(d + 1):
        for k in range(i + 1, d + 1):
            for z in zetas:
                yield (RowType("fRT2", k=k, i=i, zeta=z), *_rows_fRT2(d, i, k, z))
    for k in range(d + 2):
        for l in range(k + 1, d + 2):
            for z in zetas:
                yield (RowType("fRT3", k=k, l=l, zeta=z), *_rows_fRT3(d, k, l, z))
    for k in range(1, d + 1):
        for l in range(k + 2, d + 2):
            yield (RowType("fRT4", k=k, l=l), *_rows_fRT4(d, k, l))


@lru_cache(maxsize=None)
def _low_row_types(d: int, n_is_one: bool) -> dict:
    table = {}
    for rt, r0, r1 in low_row_candidates(d, n_is_one):
        key = (tuple(r0), tuple(r1))
        if key in table:
            raise AssertionError(f"row types overlap: {table[key]} and {rt}")
        table[key] = rt
    return table


def _upper_row_ok(q: int, row: tuple[CEntry, ...]) -> str | None:
    """Check one row q >= 2 against the Delta / increasing-N / R shape."""
    stage = 0  # 0: Delta run, 1: N run, 2: R run
    prev = None
    for c, e in enumerate(row):
        if e == DELTA:
            if stage > 0:
                return f"column {c}: Delta after a non-Delta entry"
        elif e.is_n:
            if e.group.q != q:  # type: ignore[union-attr]
                return f"column {c}: {e} does not belong to S_{q}"
            if stage == 2:
                return f"column {c}: normal subgroup after R"
            if prev is not None and prev.is_n and not entry_leq(prev, e):
                return f"column {c}: normal subgroups must increase"
            stage = 1
        elif e == R:
            stage = 2
        else:
            return f"column {c}: symbol {e} not allowed in row {q}"
        prev = e
    return None


def validate_fc(m: FCMatrix) -> list[str]:
    """Return the list of violations; empty means the matrix is a valid fC-matrix."""
    problems: list[str] = []
    if m.n < 1:
        return ["n must be at least 1 (n = 0 has no matrix description)"]
    if len(m.grid) != m.n + 1 or any(len(row) != m.d + 1 for row in m.grid):
        return [f"grid must be {m.n + 1} x {m.d + 1}"]
    for q, row in enumerate(m.grid):
        for c, e in enumerate(row):
            if e.kind in ("lam", "rho"):
                problems.append(f"row {q}, column {c}: lam/rho do not occur in finitary matrices")
    if problems:
        return problems
    if m.row_type is None:
        if m.n == 1 and any(e in (MU_UP, MU_DOWN) for e in m.grid[1]):
            problems.append("rows 0-1: for n = 1 use Delta in place of mu_up/mu_down")
        else:
            problems.append("rows 0-1: do not match any finitary row type")
    for q in range(2, m.n + 1):
        msg = _upper_row_ok(q, m.grid[q])
        if msg:
            problems.append(f"row {q}, {msg}")
    for q in range(1, m.n + 1):
        for c in range(m.d + 1):
            e, below = m.grid[q][c], m.grid[q - 1][c]
            if e.is_n and (below in (DELTA, MU_UP, MU_DOWN) or below.is_n):
                problems.append(f"row {q}, column {c}: N-symbol directly above {below}")
            if e == R and below != R:
                problems.append(f"row {q}, column {c}: R not directly above R")
    return problems


def is_valid_fc(m: FCMatrix) -> bool:
    return not validate_fc(m)


# -- membership ------------------------------------------------------------------------


def fcg_contains(m: FCMatrix, a: TwistedElement, b: TwistedElement) -> bool:
    if isinstance(a, Zero) and isinstance(b, Zero):
        return True
    if isinstance(a, Zero) or isinstance(b, Zero):
        x = b if isinstance(a, Zero) else a
        return m.grid[x.alpha.rank][x.i] == R  # type: ignore[union-attr]
    q, r = a.alpha.rank, b.alpha.rank
    e, f = m.grid[q][a.i], m.grid[r][b.i]
    if e != f:
        return False
    if e == R:
        return True
    if e == DELTA:
        return a == b
    if e.is_n:
        return a.i == b.i and green(Green.H, a.alpha, b.alpha) and subgroup_contains(e.group, pd(a.alpha, b.alpha))
    if hat(a.alpha) != hat(b.alpha):
        return False
    if e == MU_DOWN:
        return green(Green.L, a.alpha, b.alpha)
    if e == MU_UP:
        return green(Green.R, a.alpha, b.alpha)
    # mu
    return (q, a.i) == (r, b.i) or a.i - b.i == m.min_row(q) - m.min_row(r)


def member_classes(m: FCMatrix, elements: list[TwistedElement]) -> tuple[int, ...]:
    """Class labels of cg(M) on ``elements`` (first-occurrence numbering)."""
    labels = [-1] * len(elements)
    reps: list[int] = []
    for x, el in enumerate(elements):
        for cls, rep in enumerate(reps):
            if fcg_contains(m, elements[rep], el):
                labels[x] = cls
                break
        else:
            labels[x] = len(reps)
            reps.append(x)
    return tuple(labels)


def matched_pairs(m: FCMatrix) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Matched mu entries as ((0, i), (1, j)) coordinates."""
    shift = m.min_row(1) - m.min_row(0)
    out = []
    for i in range(m.d + 1):
        j = i + shift
        if m.grid[0][i] == MU and 0 <= j <= m.d and m.grid[1][j] == MU:
            out.append(((0, i), (1, j)))
    return out


# -- order ---------------------------------------------------------------------------


def fc_entry_leq(m1: FCMatrix, m2: FCMatrix) -> bool:
    return all(entry_leq(a, b) for r1, r2 in zip(m1.grid, m2.grid) for a, b in zip(r1, r2))


def fcong_leq(m1: FCMatrix, m2: FCMatrix) -> bool:
    """cg(m1) is contained in cg(m2)."""
    if (m1.n, m1.d) != (m2.n, m2.d):
        raise ValueError("matrices for different monoids")
    if not fc_entry_leq(m1, m2):
        return False
    mu1 = m1.mu_in()
    if mu1 is None:
        return True
    if m2.min_row(0) <= mu1[0] and m2.min_row(1) <= mu1[1]:
        return True
    return m2.mu_in() is not None and (
        m2.min_row(1) - m2.min_row(0) == m1.min_row(1) - m1.min_row(0))


# -- enumeration ----------------------------------------------------------------------


def _n_chains(q: int, length: int) -> list[tuple[CEntry, ...]]:
    """Weakly increasing sequences of nontrivial normal subgroups of S_q."""
    groups = group_entries(q)
    return [tuple(groups[k] for k in combo)
            for combo in itertools.combinations_with_replacement(range(len(groups)), length)]


def _upper_rows(q: int, d: int, below: tuple[CEntry, ...]) -> Iterator[tuple[CEntry, ...]]:
    for i in range(d + 2):
        for k in range(i, d + 2):
            if any(below[c] != R for c in range(k, d + 1)):
                continue
            if any(below[c] in (DELTA, MU_UP, MU_DOWN) or below[c].is_n for c in range(i, k)):
                continue
            for chain in _n_chains(q, k - i):
                yield tuple([DELTA] * i) + chain + tuple([R] * (d + 1 - k))


def fc_cap() -> int:
    return int(os.environ.get("TWISTCONG_CAP", DEFAULT_FC_CAP))


def iter_fc(n: int, d: int) -> Iterator[FCMatrix]:
    if n < 1:
        raise ValueError("P^Phi_{0,d} has no matrix description; use build_lattice(0, d)")

    def extend(rows: list[tuple[CEntry, ...]]) -> Iterator[FCMatrix]:
        q = len(rows)
        if q > n:
            yield FCMatrix(n, d, tuple(rows))
            return
        for row in _upper_rows(q, d, rows[-1]):
            yield from extend(rows + [row])

    for _, r0, r1 in low_row_candidates(d, n == 1):
        yield from extend([tuple(r0), tuple(r1)])


def enumerate_fc(n: int, d: int, cap: int | None = None) -> list[FCMatrix]:
    from .enumeration import count_closed

    limit = fc_cap() if cap is None else cap
    expected = count_closed(n, d)
    if expected > limit:
        raise ValueError(f"{expected} matrices exceed the enumeration cap {limit}")
    return list(iter_fc(n, d))


# -- named matrices -----------------------------------------------------------------------


def _blank(n: int, d: int) -> list[list[CEntry]]:
    return [[DELTA] * (d + 1) for _ in range(n + 1)]


def delta_fc(n: int, d: int) -> FCMatrix:
    return FCMatrix.from_rows(_blank(n, d))


def universal_fc(n: int, d: int) -> FCMatrix:
    return FCMatrix.from_rows([[R] * (d + 1) for _ in range(n + 1)])


def atom_fc(n: int, d: int) -> FCMatrix:
    rows = _blank(n, d)
    rows[0][d] = R
    return FCMatrix.from_rows(rows)


def coatom_fc(n: int, d: int) -> FCMatrix:
    """Everything R except column 0 of the top row (S_n, or Delta when n = 1)."""
    rows = [[R] * (d + 1) for _ in range(n + 1)]
    rows[n][0] = group_entries(n)[-1] if n >= 2 else DELTA
    return FCMatrix.from_rows(rows)


def rees_fc(n: int, d: int, corners: list[tuple[int, int]]) -> FCMatrix:
    """Rees congruence of the union of the ideals I_{qi} for (q, i) in corners."""
    rows = _blank(n, d)
    for q, i in corners:
        for r in range(q + 1):
            for c in range(i, d + 1):
                rows[r][c] = R
    return FCMatrix.from_rows(rows)


# -- principal congruences --------------------------------------------------------------------


def _rank_col(x: Pair) -> tuple[int, int]:
    return x.alpha.rank, x.i


def principal_fc(a: TwistedElement, b: TwistedElement, n: int, d: int) -> FCMatrix:
    """The fC-matrix of the congruence generated by the single pair (a, b)."""
    if isinstance(a, Zero) and isinstance(b, Zero):
        return delta_fc(n, d)
    if isinstance(a, Zero) or isinstance(b, Zero):
        x = b if isinstance(a, Zero) else a
        return rees_fc(n, d, [_rank_col(x)])  # type: ignore[arg-type]
    (q, i), (r, j) = _rank_col(a), _rank_col(b)
    if q < r or (q == r and i > j):
        a, b = b, a
        (q, i), (r, j) = (r, j), (q, i)
    al, be = a.alpha, b.alpha
    if a == b:
        return delta_fc(n, d)
    h_rel = i == j and green(Green.H, al, be)
    rees = rees_fc(n, d, [(q, i), (r, j)])
    if q >= 2 and not h_rel:
        return rees
    if q == r and q <= 1 and (i != j or hat(al) != hat(be)):
        return rees
    if q == 1 and r == 0 and (j >= i or hat(al) != be):
        return rees
    rows = _blank(n, d)
    if q >= 3:
        group = normal_closure(pd(al, be))
        for c in range(i, d + 1):
            rows[q][c] = CEntry("N", group)
            for s in range(q):
                rows[s][c] = R
        return FCMatrix.from_rows(rows)
    if q == 2:
        for c in range(i, d + 1):
            rows[2][c] = CEntry("N", normal_closure(pd(al, be)))
            rows[1][c] = MU
            rows[0][c] = MU
        rows[0][d] = R
        return FCMatrix.from_rows(rows)
    if q == 1 and r == 1:
        if green(Green.R, al, be):
            zeta = MU_UP
        elif green(Green.L, al, be):
            zeta = MU_DOWN
        else:
            zeta = MU
        if n == 1:
            zeta = DELTA
        rows[1][i] = zeta
        for c in range(i + 1, d + 1):
            rows[1][c] = MU
        for c in range(i, d + 1):
            rows[0][c] = MU
        rows[0][d] = R
        return FCMatrix.from_rows(rows)
    # q = 1, r = 0, hat(alpha) = beta, i > j
    if i == j + 1:
        for c in range(i, d + 1):
            rows[1][c] = MU
        for c in range(j, d + 1):
            rows[0][c] = MU
        rows[0][d] = R
        return FCMatrix.from_rows(rows)
    rows[0][j] = MU
    for c in range(j + 1, d + 1):
        rows[0][c] = R
    rows[1][i] = MU
    for c in range(i + 1, d + 1):
        rows[1][c] = R
    return FCMatrix.from_rows(rows)


# -- lattice ---------------------------------------------------------------------------------


@lru_cache(maxsize=32)
def build_lattice(n: int, d: int) -> FiniteLattice:
    if n == 0:
        return chain_lattice(_n0_labels(d))
    mats = enumerate_fc(n, d)
    return lattice_from_order(mats, fcong_leq, [m.label() for m in mats])


def _n0_labels(d: int) -> list[str]:
    # bottom: diagonal; then Rees congruences collapsing {k..d} plus zero, k = d, ..., 0
    return ["Delta"] + [f"Rees>={k}" for k in range(d, -1, -1)]


def _lattice_index(n: int, d: int) -> dict[FCMatrix, int]:
    lat = build_lattice(n, d)
    return {m: k for k, m in enumerate(lat.elements)}


def fc_meet(m1: FCMatrix, m2: FCMatrix) -> FCMatrix:
    n, d = m1.n, m1.d
    rows = [[entry_meet(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(m1.grid, m2.grid)]
    partner1 = dict(matched_pairs(m1))
    partner2 = dict(matched_pairs(m2))
    for c in range(d + 1):
        if m1.grid[0][c] == MU and m2.grid[0][c] == MU and partner1.get((0, c)) != partner2.get((0, c)):
            rows[0][c] = DELTA
    # A mu in row 0 (or in row 1 when n = 1) restricts to the diagonal of its D-class, so it
    # only survives if its cross-class link survives in both operands; try demoting to Delta.
    ambiguous_rows = (0, 1) if n == 1 else (0,)
    open_cells = [(q, c) for q in ambiguous_rows for c in range(d + 1) if rows[q][c] == MU]
    if len(open_cells) > 12:
        return _lattice_bound(m1, m2, lower=True)
    best = None
    for choice in itertools.product((False, True), repeat=len(open_cells)):
        trial = [list(r) for r in rows]
        for (q, c), down in zip(open_cells, choice):
            if down:
                trial[q][c] = DELTA
        cand = FCMatrix.from_rows(trial)
        if not is_valid_fc(cand) or not (fcong_leq(cand, m1) and fcong_leq(cand, m2)):
            continue
        if best is None or fcong_leq(best, cand):
            best = cand
    if best is not None:
        return best
    return _lattice_bound(m1, m2, lower=True)


def fc_join(m1: FCMatrix, m2: FCMatrix) -> FCMatrix:
    d = m1.d
    rows = [[entry_join(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(m1.grid, m2.grid)]
    low = (DELTA, MU_UP, MU_DOWN, MU)
    open_cells = [(q, c) for q in (0, 1) for c in range(d + 1)
                  if m1.grid[q][c] in low and m2.grid[q][c] in low and MU in (m1.grid[q][c], m2.grid[q][c])]
    if len(open_cells) > 12:
        return _lattice_bound(m1, m2, lower=False)
    best = None
    for choice in itertools.product((False, True), repeat=len(open_cells)):
        trial = [list(r) for r in rows]
        for (q, c), up in zip(open_cells, choice):
            if up:
                trial[q][c] = R
        cand = FCMatrix.from_rows(trial)
        if not is_valid_fc(cand) or not (fcong_leq(m1, cand) and fcong_leq(m2, cand)):
            continue
        if best is None or fcong_leq(cand, best):
            best = cand
    if best is not None:
        return best
    return _lattice_bound(m1, m2, lower=False)


def _lattice_bound(m1: FCMatrix, m2: FCMatrix, lower: bool) -> FCMatrix:
    lat = build_lattice(m1.n, m1.d)
    idx = _lattice_index(m1.n, m1.d)
    table = lat.meet if lower else lat.join
    return lat.elements[table[idx[m1]][idx[m2]]]


def join_all(mats: list[FCMatrix], n: int, d: int) -> FCMatrix:
    acc = delta_fc(n, d)
    for m in mats:
        acc = fc_join(acc, m)
    return acc


# -- generating sets -------------------------------------------------------------------------


def fc_ideal_corners(m: FCMatrix) -> list[tuple[int, int]]:
    """Incomparable corners (q, i) of the ideal formed by the R entries, top row first."""
    corners = []
    best = m.d + 1
    for q in range(m.n, -1, -1):
        st = m.min_row(q)
        if st < best:
            corners.append((q, st))
            best = st
    return corners


def _low_fc_pairs(m: FCMatrix) -> list[tuple[Pair, Pair]]:
    rt = m.row_type
    if rt is None:
        raise ValueError("invalid fC-matrix")
    n = m.n
    a1 = base_partition(n, 1)
    if rt.tag == "fRT2":
        if rt.zeta == DELTA:
            return [(Pair(rt.i + 1, a1), Pair(rt.i, hat(a1)))]  # type: ignore[operator]
        return [(Pair(rt.i, a1), Pair(rt.i, rank1_partner(n, rt.zeta)))]  # type: ignore[arg-type]
    if rt.tag == "fRT3" and rt.zeta != DELTA:
        return [(Pair(rt.l - 1, a1), Pair(rt.l - 1, rank1_partner(n, rt.zeta)))]  # type: ignore[operator,arg-type]
    if rt.tag == "fRT4":
        return [(Pair(rt.l - 1, a1), Pair(rt.k - 1, hat(a1)))]  # type: ignore[operator]
    return []


def fc_generating_set(m: FCMatrix) -> list[tuple[TwistedElement, TwistedElement]]:
    """A generating set from Rees corners, the low-row symbols and one pair per distinct N-symbol.

    Redundant pairs are dropped (latest first) using the symbolic join of
    principal matrices, so the result is irredundant in that order.
    """
    if not is_valid_fc(m):
        raise ValueError("invalid fC-matrix: " + "; ".join(validate_fc(m)))
    n, d = m.n, m.d
    omega: list[tuple[TwistedElement, TwistedElement]] = []
    for q, i in fc_ideal_corners(m):
        omega.append((Pair(i, base_partition(n, q)), Zero(n)))
    omega += _low_fc_pairs(m)
    seen: set[CEntry] = set()
    for q in range(2, n + 1):
        for c in range(d + 1):
            e = m.grid[q][c]
            if e.is_n and e not in seen:
                seen.add(e)
                alpha = base_partition(n, q)
                omega.append((Pair(c, alpha), Pair(c, apply_pd(alpha, group_generator(q, e)))))
    if generated_fc(omega, n, d) != m:
        raise AssertionError(f"construction does not generate {m.label()}")
    k = len(omega) - 1
    while k >= 0:
        trial = omega[:k] + omega[k + 1:]
        if generated_fc(trial, n, d) == m:
            omega = trial
        k -= 1
    return omega


def generated_fc(pairs: list[tuple[TwistedElement, TwistedElement]], n: int, d: int) -> FCMatrix:
    """The fC-matrix of the congruence generated by ``pairs`` (join of principal matrices)."""
    return join_all([principal_fc(a, b, n, d) for a, b in pairs], n, d)


def principal_witnesses(n: int, d: int) -> list[tuple[TwistedElement, TwistedElement]]:
    """One element pair per case and parameter choice of the principal classification.

    Principal congruences are invariant under multiplying both entries by
    units on either side and depend only on ranks, columns and the relation
    type of the pair, so these witnesses realise every principal congruence.
    """
    out: list[tuple[TwistedElement, TwistedElement]] = [(Zero(n), Zero(n))]
    cells = [(q, i) for q in range(n + 1) for i in range(d + 1)]
    for q, i in cells:
        out.append((Pair(i, base_partition(n, q)), Zero(n)))
    for (q, i), (r, j) in itertools.combinations(cells, 2):
        out.append((Pair(i, base_partition(n, q)), Pair(j, base_partition(n, r))))
    for q in range(2, n + 1):
        alpha = base_partition(n, q)
        for e in group_entries(q):
            for i in range(d + 1):
                out.append((Pair(i, alpha), Pair(i, apply_pd(alpha, group_generator(q, e)))))
    if n >= 1:
        a1 = base_partition(n, 1)
        for i in range(d + 1):
            if n >= 2:
                for zeta in (MU_UP, MU_DOWN, MU):
                    out.append((Pair(i, a1), Pair(i, rank1_partner(n, zeta))))
            for j in range(i):
                out.append((Pair(i, a1), Pair(j, hat(a1))))
            if n >= 2:
                # a rank-zero partner whose hat differs gives the Rees congruence of both ideals
                for j in range(d + 1):
                    out.append((Pair(i, a1), Pair(j, rank1_partner(n, R))))
    return out


def principal_matrices(n: int, d: int) -> set[FCMatrix]:
    return {principal_fc(a, b, n, d) for a, b in principal_witnesses(n, d)}
