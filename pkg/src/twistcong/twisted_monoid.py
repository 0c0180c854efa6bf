"""Elements of the twisted monoid P^Phi_n and its d-twisted quotients P^Phi_{n,d}."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

from .partition_core import Green, Partition, all_partitions, green, multiply, partition_from_json

DEFAULT_ELEMENT_CAP = 2500


@dataclass(frozen=True)
class Pair:
    i: int
    alpha: Partition

    @property
    def n(self) -> int:
        return self.alpha.n

    def to_json(self) -> dict:
        return {"i": self.i, "alpha": self.alpha.to_json()}

    def __str__(self) -> str:
        return f"({self.i}, {self.alpha})"


@dataclass(frozen=True)
class Zero:
    n: int

    def to_json(self) -> dict:
        return {"zero": True}

    def __str__(self) -> str:
        return "0"


TwistedElement = Union[Pair, Zero]


@dataclass(frozen=True, order=True)
class GridIndex:
    q: int
    i: int


def element_from_json(data: dict, n: int | None = None) -> TwistedElement:
    if data.get("zero"):
        if n is None:
            raise ValueError("zero element needs a base size from context")
        return Zero(n)
    return Pair(int(data["i"]), partition_from_json(data["alpha"]))


def t_mul_infinite(a: TwistedElement, b: TwistedElement) -> Pair:
    if not isinstance(a, Pair) or not isinstance(b, Pair):
        raise ValueError("the infinite twisted monoid has no zero element")
    prod, phi = multiply(a.alpha, b.alpha)
    return Pair(a.i + b.i + phi, prod)


def t_mul_d(a: TwistedElement, b: TwistedElement, d: int) -> TwistedElement:
    for x in (a, b):
        if isinstance(x, Pair) and x.i > d:
            raise ValueError(f"column {x.i} exceeds d={d}")
    if isinstance(a, Zero):
        return a
    if isinstance(b, Zero):
        return b
    prod = t_mul_infinite(a, b)
    return prod if prod.i <= d else Zero(prod.alpha.n)


def t_green(relation: Green | str, a: TwistedElement, b: TwistedElement) -> bool:
    """Green's relations; identical in the infinite and finitary settings."""
    if isinstance(a, Zero) or isinstance(b, Zero):
        return isinstance(a, Zero) and isinstance(b, Zero)
    return a.i == b.i and green(relation, a.alpha, b.alpha)


def grid_index(a: TwistedElement) -> GridIndex:
    if isinstance(a, Zero):
        raise ValueError("zero has no grid index")
    return GridIndex(a.alpha.rank, a.i)


def in_ideal(a: TwistedElement, q: int, i: int) -> bool:
    """Membership in the principal ideal I_{qi} (zero belongs to every finitary ideal)."""
    if isinstance(a, Zero):
        return True
    return a.alpha.rank <= q and a.i >= i


def element_cap() -> int:
    return int(os.environ.get("TWISTCONG_CAP", DEFAULT_ELEMENT_CAP))


def elements_of(n: int, d: int, cap: int | None = None) -> list[TwistedElement]:
    """All of P^Phi_{n,d}: column 0 first, canonical partition order inside a column, zero last."""
    bell = {1: 2, 2: 15, 3: 203}
    if n not in bell:
        raise ValueError("exhaustive listing supports 1 <= n <= 3")
    limit = element_cap() if cap is None else cap
    if (d + 1) * bell[n] > limit:
        raise ValueError(f"P^Phi_{{{n},{d}}} has {(d + 1) * bell[n] + 1} elements, above the cap {limit}")
    parts = all_partitions(n)
    out: list[TwistedElement] = [Pair(i, p) for i in range(d + 1) for p in parts]
    out.append(Zero(n))
    return out
