"""Congruences of the infinite twisted partition monoid P^Phi_n, described symbolically.

A congruence is a :class:`Congruence`: a :class:`CPair` (a chain of congruences
on the naturals plus an infinite matrix of entry symbols) together with a flag
selecting the exceptional variant.  Rows of the matrix are eventually constant
and are stored as a finite prefix plus a repeating limit symbol.

Rows 0 and 1 are classified jointly into the seven low row types RT1..RT7;
each higher row is RT8 (all Delta), RT9 (Delta, then a weakly increasing run
of N-symbols forever) or RT10 (Delta, N-symbols, then R).
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .nat_cong import TRIVIAL, NatCong, min_of, nc_contains, nc_join, nc_leq
from .partition_core import (
    Green, NormalLabel, NormalSubgroup, Partition, Permutation, _from_blocks_unchecked,
    apply_pd, green, hat, normal_closure, pd, subgroup_contains,
)
from .symbols import (
    DELTA, LAM, MU, MU_DOWN, MU_UP, RHO, R, CEntry, entry_join, entry_leq, group_entries, parse_entry,
)
from .twisted_monoid import Pair, TwistedElement

ZETAS = (DELTA, MU_UP, MU_DOWN, MU)
XI_WIDE = (MU, RHO, LAM, R)


# -- rows and pairs ---------------------------------------------------------------------


@dataclass(frozen=True)
class CRow:
    """An eventually constant row: ``prefix`` then ``limit`` forever (canonical form)."""

    prefix: tuple[CEntry, ...]
    limit: CEntry

    def __post_init__(self) -> None:
        prefix = tuple(self.prefix)
        while prefix and prefix[-1] == self.limit:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def const(cls, e: CEntry) -> "CRow":
        return cls((), e)

    @classmethod
    def runs(cls, *runs: tuple[CEntry, int], then: CEntry) -> "CRow":
        """Build from (symbol, length) runs followed by the limit."""
        return cls(tuple(e for e, k in runs for _ in range(k)), then)

    def at(self, c: int) -> CEntry:
        return self.prefix[c] if c < len(self.prefix) else self.limit

    def first_not(self, e: CEntry) -> int | None:
        """First column whose entry differs from ``e`` (None when the row is constantly e)."""
        for c, x in enumerate(self.prefix):
            if x != e:
                return c
        return None if self.limit == e else len(self.prefix)

    def first(self, e: CEntry) -> int | None:
        for c, x in enumerate(self.prefix):
            if x == e:
                return c
        return len(self.prefix) if self.limit == e else None

    def is_const(self, e: CEntry) -> bool:
        return not self.prefix and self.limit == e

    def to_json(self) -> dict:
        return {"prefix": [str(e) for e in self.prefix], "limit": str(self.limit)}

    @classmethod
    def from_json(cls, data: dict) -> "CRow":
        return cls(tuple(parse_entry(e) for e in data["prefix"]), parse_entry(data["limit"]))

    def label(self) -> str:
        return " ".join([e.short() for e in self.prefix] + [self.limit.short() + "*"])


@dataclass(frozen=True)
class CPair:
    """A C-chain ``theta[0..n]`` and a C-matrix with rows ``rows[0..n]`` (row 0 at the bottom)."""

    n: int
    theta: tuple[NatCong, ...]
    rows: tuple[CRow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", tuple(self.theta))
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.n < 1:
            raise ValueError("C-pairs need n >= 1")
        if len(self.theta) != self.n + 1 or len(self.rows) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} congruences and rows")

    def entry(self, q: int, c: int) -> CEntry:
        return self.rows[q].at(c)

    @property
    def width(self) -> int:
        """Columns past which every row is constant."""
        return max(len(r.prefix) for r in self.rows)

    def to_json(self) -> dict:
        return {"n": self.n, "theta": [t.to_json() for t in self.theta],
                "rows": [r.to_json() for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "CPair":
        return cls(int(data["n"]), tuple(NatCong.from_json(t) for t in data["theta"]),
                   tuple(CRow.from_json(r) for r in data["rows"]))

    def label(self) -> str:
        return " / ".join(f"{r.label()} {t}" for r, t in zip(reversed(self.rows), reversed(self.theta)))


@dataclass(frozen=True)
class Congruence:
    """``cg(pair)``, or ``cgx(pair)`` when ``exceptional`` is set."""

    pair: CPair
    exceptional: bool = False

    @property
    def n(self) -> int:
        return self.pair.n

    def to_json(self) -> dict:
        return {**self.pair.to_json(), "exceptional": self.exceptional}

    @classmethod
    def from_json(cls, data: dict) -> "Congruence":
        return cls(CPair.from_json(data), bool(data.get("exceptional", False)))

    def label(self) -> str:
        return ("cgx " if self.exceptional else "cg ") + self.pair.label()


def make_pair(n: int, rows: Sequence[CRow], theta: Sequence[NatCong] | None = None) -> CPair:
    """Pad missing upper rows with Delta and missing congruences with the diagonal."""
    rows = list(rows) + [CRow.const(DELTA)] * (n + 1 - len(rows))
    theta = list(theta or []) + [TRIVIAL] * (n + 1 - len(theta or []))
    return CPair(n, tuple(theta), tuple(rows))


def delta_pair(n: int) -> CPair:
    return make_pair(n, [])


# -- row types --------------------------------------------------------------------------


class LowType(NamedTuple):
    """Type of rows 0 and 1 with its parameters; unused ones stay None."""

    tag: str
    i: int | None = None
    m: int | None = None
    l: int | None = None
    d: int | None = None
    zeta: CEntry | None = None
    xi: CEntry | None = None


def _row(*runs: tuple[CEntry, int], then: CEntry) -> CRow:
    return CRow.runs(*runs, then=then)


def _xi_ok(xi: CEntry, d: int) -> bool:
    return xi in XI_WIDE if d == 1 else xi == MU


def low_type(p: CPair) -> LowType | None:
    """Classify rows 0 and 1 against RT1..RT7 (None when no type fits)."""
    r0, r1 = p.rows[0], p.rows[1]
    t0, t1 = p.theta[0], p.theta[1]
    if r0.is_const(DELTA) and r1.is_const(DELTA):
        return LowType("RT1")
    f0 = r0.first_not(DELTA)
    if f0 is None:
        return None
    if t0.is_trivial and t1.is_trivial:
        i, zeta = f0, r1.at(f0)
        if zeta in ZETAS and r0 == _row((DELTA, i), then=MU) and r1 == _row((DELTA, i), (zeta, 1), then=MU):
            return LowType("RT2", i=i, zeta=zeta)
        return None
    if r1.is_const(DELTA):
        m, xi = f0, r0.limit
        if xi in (RHO, LAM, R) and r0 == _row((DELTA, m), then=xi) and t0 == NatCong(m, 1):
            return LowType("RT3", m=m, xi=xi)
        return None
    if t0.is_trivial or t1.is_trivial or t0.d != t1.d:
        return None
    m, l, d = t0.m, t1.m, t0.d
    xi = r0.limit
    assert m is not None and l is not None and d is not None
    if not _xi_ok(xi, d) or r1.limit != xi:
        return None
    if l == m and r0 == _row((DELTA, m), then=xi) and r1 == r0:
        return LowType("RT4", m=m, d=d, xi=xi)
    if l == m + 1 and f0 < m:
        i, zeta = f0, r1.at(f0)
        if (zeta in ZETAS and r0 == _row((DELTA, i), (MU, m - i), then=xi)
                and r1 == _row((DELTA, i), (zeta, 1), (MU, m - i), then=xi)):
            return LowType("RT5", i=i, m=m, d=d, zeta=zeta, xi=xi)
    if m < l and r0 == _row((DELTA, m), then=xi):
        zeta = r1.at(l - 1)
        if zeta in ZETAS and r1 == _row((DELTA, l - 1), (zeta, 1), then=xi):
            return LowType("RT6", m=m, l=l, d=d, zeta=zeta, xi=xi)
    if 0 < m < l - 1 and (l - 1 - m) % d == 0:
        if r0 == _row((DELTA, m - 1), (MU, 1), then=xi) and r1 == _row((DELTA, l - 1), (MU, 1), then=xi):
            return LowType("RT7", m=m, l=l, d=d, xi=xi)
    return None


def upper_type(p: CPair, q: int) -> str | None:
    """Classify row q >= 2 as RT8, RT9 or RT10."""
    row, theta = p.rows[q], p.theta[q]
    if row.is_const(DELTA):
        return "RT8"
    i = row.first_not(DELTA)
    assert i is not None
    body = list(row.prefix[i:]) + [row.limit]
    if row.limit == R:
        run = body[:-1]
        if any(not e.is_n for e in run):
            return None
        if not _increasing_groups(run, q):
            return None
        m = len(row.prefix)
        return "RT10" if theta == NatCong(m, 1) else None
    if not _increasing_groups(body, q):
        return None
    return "RT9" if min_of(theta) >= len(row.prefix) else None


def _increasing_groups(entries: list[CEntry], q: int) -> bool:
    if any(not e.is_n or e.group.q != q for e in entries):  # type: ignore[union-attr]
        return False
    return all(entry_leq(a, b) for a, b in zip(entries, entries[1:]))


def mu_in(p: CPair) -> tuple[int, int] | None:
    """(muin_0, muin_1) for types RT2, RT5 and RT7; None otherwise."""
    t = low_type(p)
    if t is None:
        return None
    if t.tag in ("RT2", "RT5"):
        return t.i, t.i + 1  # type: ignore[operator,return-value]
    if t.tag == "RT7":
        return t.m - 1, t.l - 1  # type: ignore[operator,return-value]
    return None


# -- validation ---------------------------------------------------------------------------


N1_ENTRIES = (DELTA, MU, R)


def validate_cpair(p: CPair) -> list[str]:
    """Every violated condition, as readable messages; empty when valid."""
    errs: list[str] = []
    for q in range(p.n):
        if not nc_leq(p.theta[q + 1], p.theta[q]):
            errs.append(f"chain: theta_{q + 1}={p.theta[q + 1]} is not inside theta_{q}={p.theta[q]}")
    width = p.width + 1
    for q, row in enumerate(p.rows):
        for c in range(width):
            e = row.at(c)
            if e.is_n and (q < 2 or e.group.q != q):  # type: ignore[union-attr]
                errs.append(f"row {q}, column {c}: symbol {e} does not belong in this row")
            if q >= 2 and not (e in (DELTA, R) or e.is_n):
                errs.append(f"row {q}, column {c}: symbol {e} not allowed above row 1")
            if p.n == 1 and e not in N1_ENTRIES:
                errs.append(f"row {q}, column {c}: n=1 matrices use only D, mu, R (found {e})")
            if c and not entry_leq(row.at(c - 1), e):
                errs.append(f"row {q}, column {c}: row decreases ({row.at(c - 1)} then {e})")
    low = low_type(p)
    if low is None:
        errs.append("rows 0-1: no low row type RT1-RT7 fits the rows and theta_0, theta_1")
    elif p.n == 1 and low.zeta not in (None, DELTA):
        errs.append("rows 0-1: n=1 matrices take zeta = D (an unmatched mu acts as D)")
    for q in range(2, p.n + 1):
        if upper_type(p, q) is None:
            errs.append(f"row {q}: no upper row type RT8-RT10 fits the row and theta_{q}")
    for q in range(1, p.n + 1):
        for c in range(width):
            e, below = p.entry(q, c), p.entry(q - 1, c)
            if e.is_n and (below in (DELTA, MU_UP, MU_DOWN) or below.is_n):
                errs.append(f"verticality: row {q}, column {c}: {e} sits above {below}")
            if e == R and below != R:
                errs.append(f"verticality: row {q}, column {c}: R sits above {below}")
    return errs


def is_valid(p: CPair) -> bool:
    return not validate_cpair(p)


def validate_congruence(s: Congruence) -> list[str]:
    errs = validate_cpair(s.pair)
    if s.exceptional and not errs and exceptional_row(s.pair) is None:
        errs.append("exceptional flag set on a C-pair with no exceptional row")
    return errs


# -- exceptional pairs ----------------------------------------------------------------------


def _alt(q: int) -> CEntry:
    return CEntry("N", NormalSubgroup(q, NormalLabel.ALTERNATING))


def exceptional_row(p: CPair) -> int | None:
    for q in range(2, p.n + 1):
        t = p.theta[q]
        if t.is_trivial or t.d % 2:  # type: ignore[operator]
            continue
        m, half = t.m, t.d // 2  # type: ignore[operator]
        if q > 2 and p.entry(q, m) == _alt(q):  # type: ignore[arg-type]
            return q
        if (q == 2 and p.entry(2, m) == DELTA and p.entry(1, m) in XI_WIDE  # type: ignore[arg-type]
                and nc_leq(NatCong(m, half), p.theta[1])):  # type: ignore[arg-type]
            return q
    return None


def theta_tilde(p: CPair) -> NatCong:
    q = exceptional_row(p)
    if q is None:
        raise ValueError("not an exceptional C-pair")
    t = p.theta[q]
    return NatCong(t.m, t.d // 2)  # type: ignore[operator]


# -- membership ---------------------------------------------------------------------------


def _check_elements(p: CPair, a: TwistedElement, b: TwistedElement) -> tuple[Pair, Pair]:
    if not isinstance(a, Pair) or not isinstance(b, Pair):
        raise ValueError("P^Phi_n has no zero element")
    if a.n != p.n or b.n != p.n:
        raise ValueError("element and C-pair have different n")
    return a, b


def cg_contains(p: CPair, a: TwistedElement, b: TwistedElement) -> bool:
    a, b = _check_elements(p, a, b)
    if a == b:
        return True
    al, be, i, j = a.alpha, b.alpha, a.i, b.i
    q, r = al.rank, be.rank
    e, f = p.entry(q, i), p.entry(r, j)
    if e != f:
        return False
    if e == R:
        return True
    if e == DELTA:
        return al == be and nc_contains(p.theta[q], i, j)
    if e.is_n:
        return (nc_contains(p.theta[q], i, j) and green(Green.H, al, be)
                and subgroup_contains(e.group, pd(al, be)))  # type: ignore[arg-type]
    ha, hb = hat(al), hat(be)
    if e == LAM:
        return green(Green.L, ha, hb)
    if e == RHO:
        return green(Green.R, ha, hb)
    if ha != hb:
        return False
    if e == MU_DOWN:
        return green(Green.L, al, be)
    if e == MU_UP:
        return green(Green.R, al, be)
    if q == r:
        return nc_contains(p.theta[q], i, j)
    if not nc_contains(p.theta[0], i + r, j + q):
        return False
    mq, mr = min_of(p.theta[q]), min_of(p.theta[r])
    return (i < mq and j < mr) or (i >= mq and j >= mr)


def cgx_contains(p: CPair, a: TwistedElement, b: TwistedElement) -> bool:
    q = exceptional_row(p)
    if q is None:
        raise ValueError("cgx is only defined for exceptional C-pairs")
    if cg_contains(p, a, b):
        return True
    a, b = _check_elements(p, a, b)
    if a.alpha.rank != q or not green(Green.H, a.alpha, b.alpha):
        return False
    tt = theta_tilde(p)
    return (nc_contains(tt, a.i, b.i) and not nc_contains(p.theta[q], a.i, b.i)
            and pd(a.alpha, b.alpha).sign() == -1)


def contains(s: Congruence, a: TwistedElement, b: TwistedElement) -> bool:
    return cgx_contains(s.pair, a, b) if s.exceptional else cg_contains(s.pair, a, b)


# -- order ----------------------------------------------------------------------------------


def pair_entry_leq(p1: CPair, p2: CPair) -> bool:
    """Entrywise order on chains and matrices."""
    if p1.n != p2.n:
        raise ValueError("C-pairs for different n")
    if not all(nc_leq(t1, t2) for t1, t2 in zip(p1.theta, p2.theta)):
        return False
    width = max(p1.width, p2.width) + 1
    return all(entry_leq(r1.at(c), r2.at(c)) for r1, r2 in zip(p1.rows, p2.rows) for c in range(width))


def cg_leq(p1: CPair, p2: CPair) -> bool:
    """cg(p1) is contained in cg(p2)."""
    if not pair_entry_leq(p1, p2):
        return False
    mu1 = mu_in(p1)
    if mu1 is None:
        return True
    if min_of(p2.theta[0]) <= mu1[0] and min_of(p2.theta[1]) <= mu1[1]:
        return True
    mu2 = mu_in(p2)
    return mu2 is not None and mu2[1] - mu2[0] == mu1[1] - mu1[0]


def _per(t: NatCong) -> float:
    return math.inf if t.is_trivial else t.d  # type: ignore[return-value]


def _window(p: CPair) -> tuple[int, int]:
    """Threshold past which rows and chain are periodic, and a common period."""
    live = [t for t in p.theta if not t.is_trivial]
    threshold = max([len(r.prefix) for r in p.rows] + [t.m for t in live] + [0])  # type: ignore[misc]
    period = math.lcm(*[t.d for t in live]) if live else 1  # type: ignore[misc]
    return threshold, period


@lru_cache(maxsize=4096)
def _n1_labels(s: Congruence, width: int) -> tuple[int, ...]:
    """Class labels of s restricted to columns below ``width`` (n = 1, ranks 1 then 0 per column)."""
    elems = [Pair(i, base_partition(1, q)) for i in range(width) for q in (1, 0)]
    labels: list[int] = []
    reps: list[Pair] = []
    for x in elems:
        for k, r in enumerate(reps):
            if contains(s, r, x):
                labels.append(k)
                break
        else:
            labels.append(len(reps))
            reps.append(x)
    return tuple(labels)


def _n1_leq(s1: Congruence, s2: Congruence) -> bool:
    """Extensional inclusion for n = 1, where distinct C-pairs can name the same congruence.

    Membership only depends on columns through thresholds and residues, so any
    witness can be shifted into a window of a few periods past the thresholds.
    """
    (t1, l1), (t2, l2) = _window(s1.pair), _window(s2.pair)
    width = max(t1, t2) + 3 * math.lcm(l1, l2) + 2
    lab1, lab2 = _n1_labels(s1, width), _n1_labels(s2, width)
    image: dict[int, int] = {}
    return all(image.setdefault(a, b) == b for a, b in zip(lab1, lab2))


def cong_leq(s1: Congruence, s2: Congruence) -> bool:
    """Inclusion of congruences, covering the four exceptional/plain combinations."""
    p1, p2 = s1.pair, s2.pair
    if p1.n == 1 and p2.n == 1:
        return _n1_leq(s1, s2)
    if not cg_leq(p1, p2):
        return False
    if not s1.exceptional:
        return True
    q1 = exceptional_row(p1)
    assert q1 is not None
    if not s2.exceptional:
        per1, per2 = _per(p1.theta[q1]), _per(p2.theta[q1])
        if per2 == math.inf or per1 % (2 * per2):
            return False
        start = p2.theta[q1].m
        full = CEntry("N", NormalSubgroup(q1, NormalLabel.FULL))
        return all(p2.entry(q1, c) in (full, R) for c in range(start, max(start, p2.width) + 1))  # type: ignore[arg-type]
    q2 = exceptional_row(p2)
    if q1 == q2:
        ratio, rem = divmod(p1.theta[q1].d, p2.theta[q1].d)  # type: ignore[operator]
        return rem == 0 and ratio % 2 == 1
    return True


def cong_eq(s1: Congruence, s2: Congruence) -> bool:
    """Canonical form plus flag; for n = 1 equality is extensional."""
    if s1.n == 1 and s2.n == 1:
        return _n1_leq(s1, s2) and _n1_leq(s2, s1)
    return s1 == s2


# -- principal congruences --------------------------------------------------------------------


def _rees(n: int, corners: Iterable[tuple[int, int]]) -> CPair:
    """Rees congruence of the union of the ideals I_{qi}; theta_s = (m_s, m_s+1) on rows with R."""
    starts: list[int | None] = [None] * (n + 1)
    for q, i in corners:
        for s in range(q + 1):
            starts[s] = i if starts[s] is None else min(starts[s], i)  # type: ignore[type-var]
    rows = [CRow.const(DELTA) if st is None else _row((DELTA, st), then=R) for st in starts]
    theta = [TRIVIAL if st is None else NatCong(st, 1) for st in starts]
    return CPair(n, tuple(theta), tuple(rows))


def _with_low(n: int, row0: CRow, row1: CRow, t0: NatCong, t1: NatCong, upper: dict[int, tuple[CRow, NatCong]] | None = None) -> CPair:
    rows = [row0, row1] + [CRow.const(DELTA)] * (n - 1)
    theta = [t0, t1] + [TRIVIAL] * (n - 1)
    for q, (row, t) in (upper or {}).items():
        rows[q], theta[q] = row, t
    return CPair(n, tuple(theta[: n + 1]), tuple(rows[: n + 1]))


def _group_rows(n: int, q: int, i: int, top: CEntry, top_theta: NatCong) -> CPair:
    """Row q: Delta^i then ``top``; rows below: Delta^i then R with (i, i+1)."""
    rows = [CRow.const(DELTA)] * (n + 1)
    theta = [TRIVIAL] * (n + 1)
    for s in range(q):
        rows[s], theta[s] = _row((DELTA, i), then=R), NatCong(i, 1)
    rows[q], theta[q] = _row((DELTA, i), then=top), top_theta
    return CPair(n, tuple(theta), tuple(rows))


def _hat_relation_symbol(x: Partition, y: Partition) -> CEntry:
    """lambda, rho or R according to how hat x and hat y are related (they must differ)."""
    hx, hy = hat(x), hat(y)
    if green(Green.L, hx, hy):
        return LAM
    if green(Green.R, hx, hy):
        return RHO
    return R


def principal_case(a: Pair, b: Pair) -> tuple[int, Pair, Pair]:
    """Case number 1..16 after normalizing to rank a >= rank b (and i <= j on equal ranks)."""
    q, r = a.alpha.rank, b.alpha.rank
    if q < r or (q == r and a.i > b.i):
        a, b = b, a
        q, r = r, q
    al, be, i, j = a.alpha, b.alpha, a.i, b.i
    if a == b:
        return 1, a, b
    if al == be:
        return 2, a, b
    if q >= 2:
        if not green(Green.H, al, be):
            return 3, a, b
        if i == j:
            return (4 if q >= 3 else 7), a, b
        if q == 2:
            return 8, a, b
        return (5 if pd(al, be).sign() == 1 else 6), a, b
    if q == 1:
        if hat(al) == hat(be):
            if r == 1:
                return (12 if i == j else 13), a, b
            if i <= j:
                return 14, a, b
            return (15 if i == j + 1 else 16), a, b
        return (9 if (r == 1 or i <= j) else 10), a, b
    return 11, a, b


def principal_cpair(a: TwistedElement, b: TwistedElement) -> Congruence:
    """The congruence generated by the single pair (a, b)."""
    if not isinstance(a, Pair) or not isinstance(b, Pair):
        raise ValueError("P^Phi_n has no zero element")
    if a.n != b.n:
        raise ValueError("elements over different n")
    n = a.n
    case, a, b = principal_case(a, b)
    al, be, i, j = a.alpha, b.alpha, a.i, b.i
    q, r = al.rank, be.rank
    if case == 1:
        return Congruence(delta_pair(n))
    if case == 2:
        t = NatCong(i, j - i)
        return Congruence(make_pair(n, [], [t] * (q + 1)))
    if case == 3:
        return Congruence(_rees(n, [(q, i), (r, j)]))
    if case == 4:
        return Congruence(_group_rows(n, q, i, CEntry("N", normal_closure(pd(al, be))), TRIVIAL))
    if case == 5:
        return Congruence(_group_rows(n, q, i, CEntry("N", normal_closure(pd(al, be))), NatCong(i, j - i)))
    if case == 6:
        return Congruence(_group_rows(n, q, i, _alt(q), NatCong(i, 2 * (j - i))), exceptional=True)
    if case == 7:
        low = _row((DELTA, i), then=MU)
        top = _row((DELTA, i), then=CEntry("N", normal_closure(pd(al, be))))
        return Congruence(_with_low(n, low, low, TRIVIAL, TRIVIAL, {2: (top, TRIVIAL)}))
    if case == 8:
        d = j - i
        low = _row((DELTA, i), then=MU)
        t = NatCong(i, d)
        return Congruence(_with_low(n, low, low, t, t, {2: (CRow.const(DELTA), NatCong(i, 2 * d))}),
                          exceptional=True)
    if case in (9, 10):
        xi = _hat_relation_symbol(al, be)
        j0 = j if case == 10 else i
        return Congruence(_with_low(n, _row((DELTA, j0), then=xi), _row((DELTA, i), then=xi),
                                    NatCong(j0, 1), NatCong(i, 1)))
    if case == 11:
        xi = _hat_relation_symbol(al, be)
        return Congruence(_with_low(n, _row((DELTA, i), then=xi), CRow.const(DELTA), NatCong(i, 1), TRIVIAL))
    if case == 12:
        zeta = MU_UP if green(Green.R, al, be) else MU_DOWN if green(Green.L, al, be) else MU
        return Congruence(_rt2(n, i, zeta))
    if case == 13:
        row = _row((DELTA, i), then=MU)
        t = NatCong(i, j - i)
        return Congruence(_with_low(n, row, row, t, t))
    if case == 14:
        row = _row((DELTA, i), then=MU)
        t = NatCong(i, j + 1 - i)
        return Congruence(_with_low(n, row, row, t, t))
    if case == 15:
        return Congruence(_rt2(n, j, DELTA))
    # case 16
    d = i - j - 1
    return Congruence(_with_low(n, _row((DELTA, j), then=MU), _row((DELTA, i), then=MU),
                                NatCong(j + 1, d), NatCong(i + 1, d)))


def _rt2(n: int, i: int, zeta: CEntry) -> CPair:
    return _with_low(n, _row((DELTA, i), then=MU), _row((DELTA, i), (zeta, 1), then=MU), TRIVIAL, TRIVIAL)


# -- named congruences ------------------------------------------------------------------------


def coatom(n: int) -> Congruence:
    """A coatom: the units of column 0 form one class and everything else another."""
    if n < 1:
        raise ValueError("n must be at least 1")
    nabla = NatCong(0, 1)
    top_symbol = group_entries(n)[-1] if n >= 2 else DELTA
    rows = [CRow.const(R)] * n + [_row((top_symbol, 1), then=R)]
    theta = [nabla] * n + [NatCong(1, 1)]
    return Congruence(CPair(n, tuple(theta), tuple(rows)))


def rank_split_coatom(n: int) -> Congruence:
    """Another coatom: all top-rank elements in one class, all lower-rank elements in the other.

    Top-rank elements multiply to top-rank elements and the lower ranks form an
    ideal, so this two-class relation is a congruence, and any two-class
    congruence is maximal.  It differs from :func:`coatom`, so the coatom is not unique.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    nabla = NatCong(0, 1)
    top_symbol = group_entries(n)[-1] if n >= 2 else DELTA
    rows = [CRow.const(R)] * n + [CRow.const(top_symbol)]
    return Congruence(CPair(n, (nabla,) * (n + 1), tuple(rows)))


def cyclic_coatom(p: int) -> Congruence:
    """For n = 1: the kernel of the map onto the cyclic group of order p.

    Send (i, id) to i and (i, hat id) to i + 1 modulo p.  The quotient is a
    group, so the congruences above this one are those of the cyclic group;
    for prime p that leaves only the universal congruence, and distinct
    primes give pairwise incomparable coatoms.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    theta = NatCong(0, p)
    return Congruence(CPair(1, (theta, theta), (CRow.const(MU), CRow.const(MU))))


def universal(n: int) -> Congruence:
    return Congruence(CPair(n, (NatCong(0, 1),) * (n + 1), (CRow.const(R),) * (n + 1)))


def antichain_member(l: int, n: int = 2) -> Congruence:
    """Member l >= 2 of an infinite antichain of congruences."""
    if l < 2:
        raise ValueError("antichain members are indexed from 2")
    row0 = CRow.const(MU)
    row1 = _row((DELTA, l - 1), then=MU)
    return Congruence(_with_low(n, row0, row1, NatCong(1, 1), NatCong(l, 1)))


# -- a strictly smaller nontrivial congruence -------------------------------------------------


def strictly_smaller(s: Congruence) -> Congruence:
    """Some tau with Delta < tau < s (the lattice has no atoms)."""
    if s.pair == delta_pair(s.n):
        raise ValueError("the trivial congruence has nothing strictly below it")
    tau = _shrink_step(s)
    # for n = 1 a step can land on another name for the same congruence; step again
    while cong_eq(tau, s):
        tau = _shrink_step(tau)
    return tau


def _shrink_step(s: Congruence) -> Congruence:
    p = s.pair
    if s.exceptional:
        return Congruence(p)
    nontrivial = [q for q, t in enumerate(p.theta) if not t.is_trivial]
    if nontrivial:
        q = max(nontrivial)
        if any(not row.is_const(DELTA) for row in p.rows):
            return Congruence(CPair(p.n, p.theta, (CRow.const(DELTA),) * (p.n + 1)))
        t = p.theta[q]
        theta = list(p.theta)
        theta[q] = NatCong(t.m, 2 * t.d)  # type: ignore[arg-type,operator]
        return Congruence(replace(p, theta=tuple(theta)))
    low = low_type(p)
    if low is None or low.tag != "RT2":
        raise ValueError("a nontrivial congruence with trivial chain must have type RT2")
    zeta = low.zeta if low.zeta is not None else DELTA
    i = low.i + 1  # type: ignore[operator]
    rows = list(_rt2(p.n, i, zeta).rows)
    return Congruence(CPair(p.n, p.theta, tuple(rows)))


# -- sample partitions used as witnesses --------------------------------------------------------


def base_partition(n: int, q: int) -> Partition:
    """Transversals {k, k'} for k <= q, singletons elsewhere."""
    blocks: list[tuple[int, ...]] = [(k, -k) for k in range(1, q + 1)]
    blocks += [(p,) for k in range(q + 1, n + 1) for p in (k, -k)]
    return _from_blocks_unchecked(n, blocks)


def _rest(n: int, start: int) -> list[tuple[int, ...]]:
    return [(p,) for k in range(start, n + 1) for p in (k, -k)]


def _p(n: int, blocks: list[tuple[int, ...]]) -> Partition:
    return _from_blocks_unchecked(n, blocks + _rest(n, 3))


def group_generator(q: int, entry: CEntry) -> Permutation:
    """A permutation whose normal closure in S_q is the group of ``entry``."""
    label = entry.group.label  # type: ignore[union-attr]
    if label is NormalLabel.FULL:
        return Permutation.from_cycles(q, (1, 2))
    if label is NormalLabel.KLEIN4:
        return Permutation.from_cycles(q, (1, 2), (3, 4))
    return Permutation.from_cycles(q, (1, 2, 3))


def rank1_partner(n: int, kind: CEntry) -> Partition:
    """A partner for base_partition(n, 1).

    The pair falls in mu_1 minus (mu_up or mu_down) for mu, in mu_up or
    mu_down (minus the diagonal) for those symbols, and in lambda_1, rho_1 or
    R_{I_1} (with distinct hats) for lam, rho and R.  Needs n >= 2.
    """
    if n < 2:
        raise ValueError("rank-one witnesses need n >= 2")
    table = {
        MU: [(1,), (-1,), (2, -2)],
        MU_UP: [(1, -2), (2,), (-1,)],
        MU_DOWN: [(2, -1), (1,), (-2,)],
        LAM: [(1, 2), (-1,), (-2,)],
        RHO: [(1,), (2,), (-1, -2)],
        R: [(1, 2), (-1, -2)],
    }
    return _p(n, table[kind])  # type: ignore[arg-type]


def rank0_partner(n: int, kind: CEntry) -> Partition:
    """A partner for base_partition(n, 0) in lambda_0, rho_0 or R_{I_0} minus the others."""
    return rank1_partner(n, kind)


# -- generating sets ------------------------------------------------------------------------------


def generation_bound(n: int) -> int:
    return math.ceil(5 * n / 2)


def ideal_corners(p: CPair) -> list[tuple[int, int]]:
    """Incomparable corners (q, i) of the ideal I(sigma) formed by the R entries, top row first."""
    starts = {q: row.first(R) for q, row in enumerate(p.rows)}
    corners = []
    for q in range(p.n, -1, -1):
        st = starts[q]
        if st is None:
            continue
        if any(starts[h] is not None and starts[h] <= st for h in range(q + 1, p.n + 1)):  # type: ignore[operator]
            continue
        corners.append((q, st))
    return corners


def _el(i: int, alpha: Partition) -> Pair:
    return Pair(i, alpha)


def _rees_pair(n: int, c1: tuple[int, int], c2: tuple[int, int] | None) -> list[tuple[Pair, Pair]]:
    (q1, i1) = c1
    if c2 is not None:
        q2, i2 = c2
        if q1 >= 2:
            return [(_el(i1, base_partition(n, q1)), _el(i2, base_partition(n, q2)))]
        if n >= 2:
            return [(_el(i1, base_partition(n, 1)), _el(i2, rank1_partner(n, R)))]
        return _rees_pair(n, c1, None) + _rees_pair(n, c2, None)
    if q1 >= 2:
        return [(_el(i1, base_partition(n, q1)), _el(i1, base_partition(n, 0)))]
    if n >= 2:
        return [(_el(i1, base_partition(n, q1)), _el(i1, rank1_partner(n, R)))]
    # n = 1: no rank-one or rank-zero pair generates the ideal outright
    if q1 == 1:
        return [(_el(i1, base_partition(1, 1)), _el(i1, base_partition(1, 0)))]
    return [(_el(i1, base_partition(1, 0)), _el(i1 + 1, base_partition(1, 0)))]


def generating_set(s: Congruence) -> list[tuple[Pair, Pair]]:
    """A generating set built from Rees corners, chain fixers, low-row fixers and N-symbol fixers."""
    p, n = s.pair, s.pair.n
    xrow = exceptional_row(p) if s.exceptional else None
    # Step 1: Rees corners two at a time
    corners = ideal_corners(p)
    omega1: list[tuple[Pair, Pair]] = []
    for k in range(0, len(corners), 2):
        omega1 += _rees_pair(n, corners[k], corners[k + 1] if k + 1 < len(corners) else None)
    top = max((q for q, _ in corners), default=-1)
    # Step 2: chain entries above the ideal
    omega2: list[tuple[Pair, Pair]] = []
    theta0_fixer = None
    for q in range(top + 1, n + 1):
        t = p.theta[q]
        if t.is_trivial:
            continue
        alpha = base_partition(n, q)
        if q == xrow:
            half = t.d // 2  # type: ignore[operator]
            beta = apply_pd(alpha, Permutation.from_cycles(q, (1, 2)))
            omega2.append((_el(t.m, alpha), _el(t.m + half, beta)))  # type: ignore[operator]
        else:
            pair = (_el(t.m, alpha), _el(t.m + t.d, alpha))  # type: ignore[operator]
            omega2.append(pair)
            if q == 0:
                theta0_fixer = pair
    # Step 3: entries of rows 0 and 1 other than Delta and R
    omega3 = _low_fixers(p, n)
    if theta0_fixer is not None and any(tag == 11 for tag, _ in omega3):
        omega2.remove(theta0_fixer)
    # Step 4: one pair per distinct N-symbol
    omega4: list[tuple[Pair, Pair]] = []
    seen: set[CEntry] = set()
    for q in range(2, n + 1):
        for c in range(p.width + 1):
            e = p.entry(q, c)
            if e.is_n and e not in seen:
                seen.add(e)
                alpha = base_partition(n, q)
                omega4.append((_el(c, alpha), _el(c, apply_pd(alpha, group_generator(q, e)))))
    omega: list[tuple[Pair, Pair]] = []
    for pair in omega1 + omega2 + [pr for _, pr in omega3] + omega4:
        if pair not in omega:
            omega.append(pair)
    return _trim(s, omega)


def _low_fixers(p: CPair, n: int) -> list[tuple[int, tuple[Pair, Pair]]]:
    """Pairs fixing rows 0 and 1, tagged with the principal case they realise."""
    low = low_type(p)
    if low is None:
        raise ValueError("invalid C-pair")
    a1 = base_partition(n, 1)
    g0 = base_partition(n, 0)
    out: list[tuple[int, tuple[Pair, Pair]]] = []

    def zeta_pair(c: int, zeta: CEntry) -> None:
        if zeta == DELTA:
            out.append((15, (_el(c + 1, a1), _el(c, hat(a1)))))
        else:
            out.append((12, (_el(c, a1), _el(c, rank1_partner(n, zeta)))))

    def row0_tail(m: int, d: int, xi: CEntry) -> None:
        if xi == MU:
            out.append((2, (_el(m, g0), _el(m + d, g0))))
        elif xi in (LAM, RHO):
            out.append((11, (_el(m, g0), _el(m, rank0_partner(n, xi)))))

    tag = low.tag
    if tag == "RT2":
        zeta_pair(low.i, low.zeta)  # type: ignore[arg-type]
    elif tag == "RT3" and low.xi != R:
        out.append((11, (_el(low.m, g0), _el(low.m, rank0_partner(n, low.xi)))))  # type: ignore[arg-type]
    elif tag == "RT4":
        if low.xi in (LAM, RHO):
            out.append((9, (_el(low.m, a1), _el(low.m, rank1_partner(n, low.xi)))))  # type: ignore[arg-type]
        elif low.xi == MU and n >= 2:
            out.append((13, (_el(low.m, a1), _el(low.m + low.d, rank1_partner(n, MU)))))  # type: ignore[operator,arg-type]
        elif low.xi == MU:
            out.append((14, (_el(low.m, a1), _el(low.m + low.d - 1, g0))))  # type: ignore[operator,arg-type]
    elif tag == "RT5":
        zeta_pair(low.i, low.zeta)  # type: ignore[arg-type]
        row0_tail(low.m, low.d, low.xi)  # type: ignore[arg-type]
    elif tag == "RT6":
        if low.zeta != DELTA:
            zeta_pair(low.l - 1, low.zeta)  # type: ignore[operator,arg-type]
            row0_tail(low.m, low.d, low.xi)  # type: ignore[arg-type]
        elif low.xi in (LAM, RHO):
            out.append((10, (_el(low.l, a1), _el(low.m, rank1_partner(n, low.xi)))))  # type: ignore[arg-type]
        elif low.xi == MU:
            zeta_pair(low.l - 1, DELTA)  # type: ignore[operator]
            out.append((2, (_el(low.m, g0), _el(low.m + low.d, g0))))  # type: ignore[operator,arg-type]
    elif tag == "RT7":
        out.append((16, (_el(low.l - 1, a1), _el(low.m - 1, hat(a1)))))  # type: ignore[operator,arg-type]
        if low.xi in (LAM, RHO):
            out.append((11, (_el(low.m, g0), _el(low.m, rank0_partner(n, low.xi)))))  # type: ignore[arg-type]
    return out


def _trim(s: Congruence, omega: list[tuple[Pair, Pair]]) -> list[tuple[Pair, Pair]]:
    """Drop redundant pairs (latest first) while the set stays above the size bound."""
    bound = generation_bound(s.n)
    k = len(omega) - 1
    while len(omega) > bound and k >= 0:
        trial = omega[:k] + omega[k + 1:]
        if verify_generators(s, trial) is Verdict.VERIFIED:
            omega = trial
        k -= 1
    return omega


class Verdict(str, enum.Enum):
    VERIFIED = "verified"
    INCONCLUSIVE = "inconclusive"


def supremum(pairs: Iterable[CPair], n: int) -> CPair:
    """Entrywise least upper bound of C-pairs (not necessarily a valid C-pair)."""
    theta = [TRIVIAL] * (n + 1)
    rows = [CRow.const(DELTA)] * (n + 1)
    for p in pairs:
        width = max(len(r.prefix) for r in rows + list(p.rows)) + 1
        for q in range(n + 1):
            theta[q] = nc_join(theta[q], p.theta[q])
            joined = [entry_join(rows[q].at(c), p.rows[q].at(c)) for c in range(width)]
            rows[q] = CRow(tuple(joined), entry_join(rows[q].limit, p.rows[q].limit))
    return CPair(n, tuple(theta), tuple(rows))


def verify_generators(s: Congruence, omega: Sequence[tuple[TwistedElement, TwistedElement]]) -> Verdict:
    """Sound check that ``omega`` generates ``s``; may answer inconclusive on true claims."""
    if not all(contains(s, a, b) for a, b in omega):
        return Verdict.INCONCLUSIVE
    if s.exceptional and all(cg_contains(s.pair, a, b) for a, b in omega):
        return Verdict.INCONCLUSIVE
    bound = supremum((principal_cpair(a, b).pair for a, b in omega), s.n)
    return Verdict.VERIFIED if pair_entry_leq(s.pair, bound) else Verdict.INCONCLUSIVE


# -- worked sublattices ---------------------------------------------------------------------------


def _exceptional_members(n: int) -> dict[str, Congruence]:
    nabla = NatCong(0, 1)
    thetas = {
        1: [nabla, nabla, NatCong(0, 2)],
        2: [nabla, nabla, nabla],
        3: [nabla, nabla, NatCong(1, 1)],
        4: [nabla, nabla, NatCong(1, 2)],
    }
    s2 = group_entries(2)[-1]
    mats = {
        1: [CRow.const(R), CRow.const(R), CRow.const(DELTA)],
        2: [CRow.const(R), CRow.const(R), CRow.const(s2)],
        3: [CRow.const(R), CRow.const(R), _row((DELTA, 1), then=s2)],
    }

    def cg(t: int, m: int, x: bool = False) -> Congruence:
        return Congruence(make_pair(n, mats[m], thetas[t]), x)

    return {
        "cg(T1,M1)": cg(1, 1), "cg(T2,M1)": cg(2, 1), "cgx(T1,M1)": cg(1, 1, True),
        "cg(T1,M2)": cg(1, 2), "cg(T2,M2)": cg(2, 2), "cgx(T4,M1)": cg(4, 1, True),
        "cg(T3,M3)": cg(3, 3), "cg(T3,M2)": cg(3, 2),
    }


class Sublattice(NamedTuple):
    """Named congruences with the covering edges (lower, upper) of the drawn sublattice."""

    members: dict[str, Congruence]
    covers: list[tuple[str, str]]


def exceptional_sublattices(n: int = 2) -> tuple[Sublattice, Sublattice]:
    """A diamond and a pentagon inside Cong(P^Phi_n) for n >= 2, built from exceptional pairs."""
    if n < 2:
        raise ValueError("these sublattices need n >= 2")
    allp = _exceptional_members(n)
    dia_names = ["cg(T1,M1)", "cg(T2,M1)", "cgx(T1,M1)", "cg(T1,M2)", "cg(T2,M2)"]
    pent_names = ["cgx(T4,M1)", "cgx(T1,M1)", "cg(T3,M3)", "cg(T3,M2)", "cg(T2,M2)"]
    diamond = Sublattice({k: allp[k] for k in dia_names},
                         [("cg(T1,M1)", x) for x in dia_names[1:4]] + [(x, "cg(T2,M2)") for x in dia_names[1:4]])
    pentagon = Sublattice({k: allp[k] for k in pent_names},
                          [("cgx(T4,M1)", "cgx(T1,M1)"), ("cgx(T1,M1)", "cg(T2,M2)"),
                           ("cgx(T4,M1)", "cg(T3,M3)"), ("cg(T3,M3)", "cg(T3,M2)"),
                           ("cg(T3,M2)", "cg(T2,M2)")])
    return diamond, pentagon


def rank_one_sublattices() -> tuple[Sublattice, Sublattice]:
    """A pentagon and a diamond inside Cong(P^Phi_1)."""

    def c(row1: CRow, t1: NatCong, row0: CRow, t0: NatCong) -> Congruence:
        return Congruence(CPair(1, (t0, t1), (row0, row1)))

    D, Rr = CRow.const(DELTA), CRow.const(R)
    pent = {
        "B": c(D, NatCong(1, 2), D, NatCong(0, 2)),
        "L": c(_row((DELTA, 1), then=MU), NatCong(1, 2), CRow.const(MU), NatCong(0, 2)),
        "RB": c(D, NatCong(1, 2), Rr, NatCong(0, 1)),
        "RT": c(D, NatCong(1, 1), Rr, NatCong(0, 1)),
        "T": c(_row((DELTA, 1), then=R), NatCong(1, 1), Rr, NatCong(0, 1)),
    }
    dia = {
        "B": c(_row((DELTA, 2), then=R), NatCong(2, 1), _row((DELTA, 1), then=R), NatCong(1, 1)),
        # drawn with chain (1,2)#, (0,1)#; this is the same congruence in its row-type form
        "L": c(_row((DELTA, 1), (MU, 1), then=R), NatCong(2, 1), _row((MU, 1), then=R), NatCong(1, 1)),
        "M": c(_row((DELTA, 1), then=R), NatCong(1, 1), _row((DELTA, 1), then=R), NatCong(1, 1)),
        "R": c(_row((DELTA, 2), then=R), NatCong(2, 1), Rr, NatCong(0, 1)),
        "T": c(_row((DELTA, 1), then=R), NatCong(1, 1), Rr, NatCong(0, 1)),
    }
    pentagon = Sublattice(pent, [("B", "RB"), ("RB", "RT"), ("RT", "T"), ("B", "L"), ("L", "T")])
    diamond = Sublattice(dia, [("B", "L"), ("B", "M"), ("B", "R"), ("L", "T"), ("M", "T"), ("R", "T")])
    return pentagon, diamond


def order_of(sub: Sublattice) -> set[tuple[str, str]]:
    """Strict inclusions among the members, computed with cong_leq."""
    names = list(sub.members)
    return {(x, y) for x in names for y in names
            if x != y and cong_leq(sub.members[x], sub.members[y])}


def drawn_order(sub: Sublattice) -> set[tuple[str, str]]:
    """Transitive closure of the drawn covering edges."""
    rel = set(sub.covers)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, e) in list(rel):
                if b == c and (a, e) not in rel:
                    rel.add((a, e))
                    changed = True
    return rel


# -- sampling ---------------------------------------------------------------------------------------


def _low_candidates(n: int, w: int) -> Iterator[tuple[CRow, CRow, NatCong, NatCong]]:
    """Rows 0-1 with their chain entries, parameters below ``w``."""
    zetas = (DELTA,) if n == 1 else ZETAS
    xis1 = (MU, R) if n == 1 else XI_WIDE
    yield CRow.const(DELTA), CRow.const(DELTA), TRIVIAL, TRIVIAL
    for m in range(w):
        for d in range(1, 3):
            for t1 in (TRIVIAL, NatCong(m + 1, 2 * d), NatCong(m, d)):
                yield CRow.const(DELTA), CRow.const(DELTA), NatCong(m, d), t1
    for i in range(w):
        for z in zetas:
            yield _row((DELTA, i), then=MU), _row((DELTA, i), (z, 1), then=MU), TRIVIAL, TRIVIAL
    for m in range(w):
        for xi in ((R,) if n == 1 else (RHO, LAM, R)):
            for t1 in (TRIVIAL, NatCong(m + 1, 1), NatCong(m + 2, 2)):
                yield _row((DELTA, m), then=xi), CRow.const(DELTA), NatCong(m, 1), t1
    for m in range(w):
        for d in (1, 2):
            for xi in (xis1 if d == 1 else (MU,)):
                row = _row((DELTA, m), then=xi)
                t = NatCong(m, d)
                yield row, row, t, t
                for i in range(m):
                    for z in zetas:
                        yield (_row((DELTA, i), (MU, m - i), then=xi),
                               _row((DELTA, i), (z, 1), (MU, m - i), then=xi), t, NatCong(m + 1, d))
                for l in range(m + 1, w + 1):
                    for z in zetas:
                        yield (_row((DELTA, m), then=xi), _row((DELTA, l - 1), (z, 1), then=xi),
                               t, NatCong(l, d))
                    if 0 < m < l - 1 and (l - 1 - m) % d == 0:
                        yield (_row((DELTA, m - 1), (MU, 1), then=xi), _row((DELTA, l - 1), (MU, 1), then=xi),
                               t, NatCong(l, d))


def _upper_candidates(q: int, below: CRow, below_theta: NatCong, w: int) -> list[tuple[CRow, NatCong]]:
    groups = group_entries(q)
    out: list[tuple[CRow, NatCong]] = []
    for t in (TRIVIAL, below_theta):
        if nc_leq(t, below_theta):
            out.append((CRow.const(DELTA), t))
    if not below_theta.is_trivial:
        t = below_theta
        out.append((CRow.const(DELTA), NatCong(t.m + 1, 2 * t.d)))  # type: ignore[operator]
    for i in range(w):
        for g in groups:
            for k in range(i, w + 1):
                row = CRow(tuple([DELTA] * i + [g] * (k - i)), R)
                t = NatCong(k, 1)
                if nc_leq(t, below_theta):
                    out.append((row, t))
            row = _row((DELTA, i), then=g)
            for t in (TRIVIAL, NatCong(i + 1, 2), below_theta):
                out.append((row, t))
            if q >= 3:
                alt = _alt(q)
                out.append((_row((DELTA, i), then=alt), NatCong(i, 2)))
    return out


def sample_congruences(n: int, count: int, seed: int = 0, width: int = 4) -> list[Congruence]:
    """Random valid congruences (with exceptional variants), reproducible from ``seed``."""
    rng = random.Random(seed)
    lows = list(_low_candidates(n, width))
    out: list[Congruence] = []
    attempts = 0
    while len(out) < count and attempts < 200 * count:
        attempts += 1
        r0, r1, t0, t1 = rng.choice(lows)
        rows, theta = [r0, r1], [t0, t1]
        for q in range(2, n + 1):
            cands = _upper_candidates(q, rows[-1], theta[-1], width)
            row, t = rng.choice(cands)
            rows.append(row)
            theta.append(t)
        p = CPair(n, tuple(theta[: n + 1]), tuple(rows[: n + 1]))
        if not is_valid(p):
            continue
        x = exceptional_row(p) is not None and rng.random() < 0.5
        out.append(Congruence(p, x))
    return out


def random_element(n: int, rng: random.Random, max_col: int = 6) -> Pair:
    """A column in 0..max_col with a partition built from a random set partition of the points."""
    points = list(range(1, n + 1)) + [-k for k in range(1, n + 1)]
    rng.shuffle(points)
    blocks: list[list[int]] = []
    for pt in points:
        if blocks and rng.random() < 0.45:
            rng.choice(blocks).append(pt)
        else:
            blocks.append([pt])
    return Pair(rng.randint(0, max_col), _from_blocks_unchecked(n, blocks))
