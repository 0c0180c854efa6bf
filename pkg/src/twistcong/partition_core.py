"""Partition monoid P_n: diagrams, products, Green's relations and symmetric-group bits.

Points are signed integers: ``+k`` is the upper point k and ``-k`` is the lower
point k'.  A :class:`Partition` always stores its blocks in canonical order, so
structural equality of the dataclass is equality of diagrams.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence


def _point_key(p: int, n: int) -> int:
    # 1 < 2 < ... < n < 1' < ... < n'
    return p if p > 0 else n - p


@dataclass(frozen=True)
class Partition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    # -- derived structure -------------------------------------------------
    @cached_property
    def transversals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if b[0] > 0 and b[-1] < 0)

    @property
    def rank(self) -> int:
        return len(self.transversals)

    @cached_property
    def dom(self) -> frozenset[int]:
        return frozenset(p for b in self.transversals for p in b if p > 0)

    @cached_property
    def codom(self) -> frozenset[int]:
        return frozenset(-p for b in self.transversals for p in b if p < 0)

    @cached_property
    def ker(self) -> frozenset[frozenset[int]]:
        """Upper parts of all blocks (the kernel as a set partition of 1..n)."""
        return frozenset(frozenset(p for p in b if p > 0) for b in self.blocks if b[0] > 0)

    @cached_property
    def coker(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(-p for p in b if p < 0) for b in self.blocks if b[-1] < 0)

    def sort_key(self) -> tuple:
        return tuple(tuple(_point_key(p, self.n) for p in b) for b in self.blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def __str__(self) -> str:
        def show(p: int) -> str:
            return str(p) if p > 0 else f"{-p}'"

        return " ".join("{" + ",".join(show(p) for p in b) + "}" for b in self.blocks)


def _canonical_block(block: Iterable[int]) -> tuple[int, ...]:
    upper = sorted(p for p in block if p > 0)
    lower = sorted((p for p in block if p < 0), reverse=True)
    return tuple(upper + lower)


def _from_blocks_unchecked(n: int, blocks: Iterable[Iterable[int]]) -> Partition:
    canon = [_canonical_block(b) for b in blocks]
    canon.sort(key=lambda b: _point_key(b[0], n))
    return Partition(n, tuple(canon))


def make_partition(n: int, blocks: Sequence[Sequence[int]]) -> Partition:
    """Validate and canonicalize a block list of signed point codes."""
    if n < 1:
        raise ValueError(f"base size must be positive, got {n}")
    seen: set[int] = set()
    for block in blocks:
        if len(block) == 0:
            raise ValueError("empty block")
        for p in block:
            if not isinstance(p, int) or p == 0 or abs(p) > n:
                raise ValueError(f"point code {p!r} out of range for n={n}")
            if p in seen:
                raise ValueError(f"point {p} repeated")
            seen.add(p)
    missing = sorted((set(range(1, n + 1)) | set(range(-n, 0))) - seen)
    if missing:
        raise ValueError(f"points missing: {missing}")
    return _from_blocks_unchecked(n, blocks)


def partition_from_json(data: dict) -> Partition:
    return make_partition(int(data["n"]), [list(b) for b in data["blocks"]])


def identity(n: int) -> Partition:
    return _from_blocks_unchecked(n, [(k, -k) for k in range(1, n + 1)])


def singletons(n: int) -> Partition:
    return _from_blocks_unchecked(n, [(p,) for k in range(1, n + 1) for p in (k, -k)])


# -- product -----------------------------------------------------------------


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def multiply(alpha: Partition, beta: Partition) -> tuple[Partition, int]:
    """Return ``(alpha*beta, Phi(alpha, beta))``.

    Vertices of the product graph: top row 0..n-1 (upper points of alpha),
    middle row n..2n-1 (lower points of alpha glued to upper points of beta),
    bottom row 2n..3n-1 (lower points of beta).
    """
    if alpha.n != beta.n:
        raise ValueError(f"mismatched base sizes {alpha.n} and {beta.n}")
    n = alpha.n
    parent = list(range(3 * n))

    def union_block(block: tuple[int, ...], up: int, down: int) -> None:
        first = None
        for p in block:
            v = up + p - 1 if p > 0 else down - p - 1
            if first is None:
                first = _find(parent, v)
            else:
                r = _find(parent, v)
                if r != first:
                    parent[r] = first

    for b in alpha.blocks:
        union_block(b, 0, n)
    for b in beta.blocks:
        union_block(b, n, 2 * n)

    groups: dict[int, list[int]] = {}
    for v in range(3 * n):
        groups.setdefault(_find(parent, v), []).append(v)
    blocks = []
    floating = 0
    for vs in groups.values():
        outer = [v + 1 if v < n else -(v - 2 * n + 1) for v in vs if v < n or v >= 2 * n]
        if outer:
            blocks.append(outer)
        else:
            floating += 1
    return _from_blocks_unchecked(n, blocks), floating


def rank(alpha: Partition) -> int:
    return alpha.rank


def hat(alpha: Partition) -> Partition:
    """Split every transversal into its upper and lower parts."""
    if alpha.rank == 0:
        return alpha
    blocks: list[tuple[int, ...]] = []
    for b in alpha.blocks:
        up = tuple(p for p in b if p > 0)
        down = tuple(p for p in b if p < 0)
        blocks.extend(part for part in (up, down) if part)
    return _from_blocks_unchecked(alpha.n, blocks)


# -- Green's relations ---------------------------------------------------------


class Green(str, enum.Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"


def green(relation: Green | str, alpha: Partition, beta: Partition) -> bool:
    rel = Green(relation)
    if alpha.n != beta.n:
        raise ValueError("mismatched base sizes")
    if rel is Green.D:
        return alpha.rank == beta.rank
    r_ok = alpha.dom == beta.dom and alpha.ker == beta.ker
    if rel is Green.R:
        return r_ok
    l_ok = alpha.codom == beta.codom and alpha.coker == beta.coker
    if rel is Green.L:
        return l_ok
    return r_ok and l_ok


# -- permutations and normal subgroups -------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..q stored by its images (``images[k-1]`` is the image of k)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection: {self.images}")

    @property
    def q(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, q: int) -> "Permutation":
        return cls(tuple(range(1, q + 1)))

    @classmethod
    def from_cycles(cls, q: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, q + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other (right action, as in ``i(pi sigma)``)."""
        return Permutation(tuple(other(self(k)) for k in range(1, self.q + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.q
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.q
        lengths = []
        for start in range(self.q):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.images[k] - 1
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def sign(self) -> int:
        return -1 if sum(c - 1 for c in self.cycle_type()) % 2 else 1


class NormalLabel(enum.IntEnum):
    TRIVIAL = 0
    KLEIN4 = 1
    ALTERNATING = 2
    FULL = 3


@dataclass(frozen=True)
class NormalSubgroup:
    q: int
    label: NormalLabel

    def __post_init__(self) -> None:
        if self.label is NormalLabel.KLEIN4 and self.q != 4:
            raise ValueError("the Klein four-group is only normal in S_4")
        if self.label is NormalLabel.ALTERNATING and self.q < 3:
            raise ValueError("A_q is only a distinct normal subgroup for q >= 3")
        if self.q < 0:
            raise ValueError("negative degree")

    def __le__(self, other: "NormalSubgroup") -> bool:
        return self.q == other.q and self.label <= other.label

    def __lt__(self, other: "NormalSubgroup") -> bool:
        return self.q == other.q and self.label < other.label

    @property
    def name(self) -> str:
        prefix = {NormalLabel.TRIVIAL: "1", NormalLabel.KLEIN4: "K",
                  NormalLabel.ALTERNATING: "A", NormalLabel.FULL: "S"}[self.label]
        return f"{prefix}{self.q}"

    @classmethod
    def from_name(cls, name: str) -> "NormalSubgroup":
        labels = {"1": NormalLabel.TRIVIAL, "K": NormalLabel.KLEIN4,
                  "A": NormalLabel.ALTERNATING, "S": NormalLabel.FULL}
        if not name or name[0] not in labels or not name[1:].isdigit():
            raise ValueError(f"bad normal subgroup name {name!r}")
        return cls(int(name[1:]), labels[name[0]])


def normal_subgroups(q: int) -> list[NormalSubgroup]:
    """All normal subgroups of S_q, smallest first."""
    out = [NormalSubgroup(q, NormalLabel.TRIVIAL)]
    if q == 4:
        out.append(NormalSubgroup(q, NormalLabel.KLEIN4))
    if q >= 3:
        out.append(NormalSubgroup(q, NormalLabel.ALTERNATING))
    if q >= 2:
        out.append(NormalSubgroup(q, NormalLabel.FULL))
    return out


def normal_closure(pi: Permutation) -> NormalSubgroup:
    q = pi.q
    if pi.is_identity():
        return NormalSubgroup(q, NormalLabel.TRIVIAL)
    if pi.sign() == -1:
        return NormalSubgroup(q, NormalLabel.FULL)
    if q == 4 and pi.cycle_type() == (2, 2):
        return NormalSubgroup(q, NormalLabel.KLEIN4)
    return NormalSubgroup(q, NormalLabel.ALTERNATING)


def subgroup_contains(group: NormalSubgroup, pi: Permutation) -> bool:
    if group.q != pi.q:
        raise ValueError("degree mismatch")
    if group.label is NormalLabel.FULL:
        return True
    if group.label is NormalLabel.ALTERNATING:
        return pi.sign() == 1
    if group.label is NormalLabel.KLEIN4:
        return pi.is_identity() or pi.cycle_type() == (2, 2)
    return pi.is_identity()


def pd(alpha: Partition, beta: Partition) -> Permutation:
    """Permutational difference of two H-related partitions of rank >= 1.

    Transversals of alpha are ordered by least upper point; the result maps k
    to the index of the lower part of alpha that beta attaches to the k-th
    upper part.
    """
    if not green(Green.H, alpha, beta):
        raise ValueError("pd is only defined for H-related partitions")
    if alpha.rank == 0:
        raise ValueError("pd needs rank at least 1")
    lower_index = {}
    upper_parts = []
    for k, b in enumerate(alpha.transversals, start=1):  # already sorted by least upper point
        lower_index[frozenset(p for p in b if p < 0)] = k
        upper_parts.append(frozenset(p for p in b if p > 0))
    beta_lower = {frozenset(p for p in b if p > 0): frozenset(p for p in b if p < 0)
                  for b in beta.transversals}
    return Permutation(tuple(lower_index[beta_lower[u]] for u in upper_parts))


def apply_pd(alpha: Partition, pi: Permutation) -> Partition:
    """The partition beta with ``alpha H beta`` and ``pd(alpha, beta) == pi``."""
    trans = alpha.transversals
    if pi.q != len(trans):
        raise ValueError("permutation degree must equal the rank")
    blocks = [b for b in alpha.blocks if b not in trans]
    for k, b in enumerate(trans, start=1):
        up = [p for p in b if p > 0]
        down = [p for p in trans[pi(k) - 1] if p < 0]
        blocks.append(tuple(up + down))
    return _from_blocks_unchecked(alpha.n, blocks)


# -- exhaustive generation ---------------------------------------------------------


def _set_partitions(points: list[int]) -> Iterator[list[list[int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for sub in _set_partitions(rest):
        yield [[first]] + sub
        for idx in range(len(sub)):
            yield sub[:idx] + [[first] + sub[idx]] + sub[idx + 1:]


def all_partitions(n: int) -> list[Partition]:
    """Every element of P_n, sorted canonically. Size is the Bell number B(2n)."""
    points = list(range(1, n + 1)) + [-k for k in range(1, n + 1)]
    parts = [_from_blocks_unchecked(n, blocks) for blocks in _set_partitions(points)]
    parts.sort(key=Partition.sort_key)
    return parts


def symmetric_group(q: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, q + 1))]
