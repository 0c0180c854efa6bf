"""Matrix entry symbols shared by C-pairs and finitary C-matrices, with their order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partition_core import NormalLabel, NormalSubgroup, normal_subgroups

_KINDS = ("D", "mu_up", "mu_down", "mu", "lam", "rho", "R", "N")

# Covers of the entry order among the non-group symbols.
_BASE_COVERS = {
    ("D", "mu_up"), ("D", "mu_down"), ("mu_up", "mu"), ("mu_down", "mu"),
    ("mu", "lam"), ("mu", "rho"), ("lam", "R"), ("rho", "R"),
}


@dataclass(frozen=True)
class CEntry:
    kind: str
    group: NormalSubgroup | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown entry kind {self.kind!r}")
        if (self.kind == "N") != (self.group is not None):
            raise ValueError("exactly the N entries carry a normal subgroup")
        if self.group is not None and (self.group.label is NormalLabel.TRIVIAL or self.group.q < 2):
            raise ValueError("N entries need a nontrivial normal subgroup of S_q, q >= 2")

    @property
    def is_n(self) -> bool:
        return self.kind == "N"

    def __str__(self) -> str:
        return f"N:{self.group.name}" if self.group is not None else self.kind

    def short(self) -> str:
        if self.group is not None:
            return self.group.name
        return {"D": "D", "mu_up": "u", "mu_down": "v", "mu": "m", "lam": "l",
                "rho": "r", "R": "R"}[self.kind]


def parse_entry(text: str) -> CEntry:
    if text.startswith("N:"):
        return CEntry("N", NormalSubgroup.from_name(text[2:]))
    return CEntry(text)


DELTA = CEntry("D")
MU_UP = CEntry("mu_up")
MU_DOWN = CEntry("mu_down")
MU = CEntry("mu")
LAM = CEntry("lam")
RHO = CEntry("rho")
R = CEntry("R")


def N(name: str) -> CEntry:
    return CEntry("N", NormalSubgroup.from_name(name))


def entry_leq(a: CEntry, b: CEntry) -> bool:
    """The order <=_C on entries."""
    if a == b or a == DELTA or b == R:
        return True
    if a == R or b == DELTA:
        return False
    if a.is_n or b.is_n:
        return a.is_n and b.is_n and a.group <= b.group  # type: ignore[operator]
    return (a.kind, b.kind) in _base_closure()


@lru_cache(maxsize=None)
def _base_closure() -> frozenset[tuple[str, str]]:
    rel = set(_BASE_COVERS)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, e) in list(rel):
                if b == c and (a, e) not in rel:
                    rel.add((a, e))
                    changed = True
    return frozenset(rel)


@lru_cache(maxsize=None)
def all_entries(n: int) -> tuple[CEntry, ...]:
    base = [DELTA, MU_UP, MU_DOWN, MU, LAM, RHO, R]
    groups = [CEntry("N", g) for q in range(2, n + 1) for g in normal_subgroups(q)
              if g.label is not NormalLabel.TRIVIAL]
    return tuple(base + groups)


def entry_meet(a: CEntry, b: CEntry) -> CEntry:
    return _bound(a, b, lower=True)


def entry_join(a: CEntry, b: CEntry) -> CEntry:
    return _bound(a, b, lower=False)


@lru_cache(maxsize=None)
def _bound(a: CEntry, b: CEntry, lower: bool) -> CEntry:
    q = max((x.group.q for x in (a, b) if x.group is not None), default=2)
    pool = all_entries(max(q, 2))
    if lower:
        cands = [c for c in pool if entry_leq(c, a) and entry_leq(c, b)]
        best = [c for c in cands if all(entry_leq(o, c) for o in cands)]
    else:
        cands = [c for c in pool if entry_leq(a, c) and entry_leq(b, c)]
        best = [c for c in cands if all(entry_leq(c, o) for o in cands)]
    if len(best) != 1:
        raise AssertionError(f"entry order is not a lattice at {a}, {b}")
    return best[0]


def group_entries(q: int) -> list[CEntry]:
    """Nontrivial N-symbols available in row q, smallest first."""
    return [CEntry("N", g) for g in normal_subgroups(q) if g.label is not NormalLabel.TRIVIAL]
