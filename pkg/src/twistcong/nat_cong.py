"""Congruences on the additive monoid of natural numbers.

Every congruence is either the diagonal or ``(m, m+d)#``: i ~ j iff i == j, or
both are at least m and congruent modulo d.  The diagonal has no minimum or
period, and it is kept as a separate variant rather than an infinite sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class NatCong:
    m: int | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        if (self.m is None) != (self.d is None):
            raise ValueError("min and period must both be given or both omitted")
        if self.m is not None and (self.m < 0 or self.d < 1):  # type: ignore[operator]
            raise ValueError(f"invalid natural-number congruence ({self.m}, {self.d})")

    @classmethod
    def trivial(cls) -> "NatCong":
        return cls()

    @classmethod
    def arith(cls, m: int, d: int) -> "NatCong":
        return cls(m, d)

    @classmethod
    def universal(cls) -> "NatCong":
        return cls(0, 1)

    @property
    def is_trivial(self) -> bool:
        return self.m is None

    def contains(self, i: int, j: int) -> bool:
        return nc_contains(self, i, j)

    def to_json(self) -> dict:
        return {"trivial": True} if self.m is None else {"min": self.m, "per": self.d}

    @classmethod
    def from_json(cls, data: dict) -> "NatCong":
        if data.get("trivial"):
            return cls()
        return cls(int(data["min"]), int(data["per"]))

    def __str__(self) -> str:
        return "Delta" if self.m is None else f"({self.m},{self.m + self.d})#"


TRIVIAL = NatCong()


def nc_contains(theta: NatCong, i: int, j: int) -> bool:
    if i == j:
        return True
    if theta.m is None:
        return False
    return i >= theta.m and j >= theta.m and (i - j) % theta.d == 0  # type: ignore[operator]


def nc_leq(t1: NatCong, t2: NatCong) -> bool:
    """t1 is contained in t2."""
    if t1.m is None:
        return True
    if t2.m is None:
        return False
    return t1.m >= t2.m and t1.d % t2.d == 0  # type: ignore[operator]


def nc_join(t1: NatCong, t2: NatCong) -> NatCong:
    if t1.m is None:
        return t2
    if t2.m is None:
        return t1
    return NatCong(min(t1.m, t2.m), gcd(t1.d, t2.d))  # type: ignore[arg-type]


def nc_meet(t1: NatCong, t2: NatCong) -> NatCong:
    if t1.m is None or t2.m is None:
        return TRIVIAL
    d = t1.d * t2.d // gcd(t1.d, t2.d)  # type: ignore[operator]
    return NatCong(max(t1.m, t2.m), d)


def min_of(theta: NatCong) -> float:
    """Minimum with the diagonal mapped to infinity; handy for comparisons only."""
    return float("inf") if theta.m is None else theta.m
