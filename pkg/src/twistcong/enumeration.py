"""Exact congruence counts for P^Phi_{n,d}, computed four independent ways.

* :func:`count_closed` evaluates the polynomial / binomial closed forms;
* :func:`count_recursion` runs the right-column recursion over Cong(P^Phi_{n,0});
* :func:`count_gf` extracts a coefficient of the bivariate rational generating function;
* ``len(enumerate_fc(n, d))`` in :mod:`twistcong.cong_finite` counts matrices directly.

Everything is integer arithmetic.
"""

from __future__ import annotations

import csv
import io
from functools import lru_cache
from math import comb


def _binom(s: int, t: int) -> int:
    """Binomial coefficient with the convention C(s, t) = 0 when t > s or t < 0."""
    if t < 0 or s < 0 or t > s:
        return 0
    return comb(s, t)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def count_closed(n: int, d: int) -> int:
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    if n == 0:
        return d + 2
    if n == 1:
        return _exact_div(3 * d**2 + 5 * d + 6, 2)
    if n == 2:
        return _exact_div(13 * d**4 + 106 * d**3 + 299 * d**2 + 398 * d + 216, 24)
    if n == 3:
        return _exact_div(13 * d**7 + 322 * d**6 + 3262 * d**5 + 17920 * d**4 + 58597 * d**3
                          + 115318 * d**2 + 127128 * d + 60480, 5040)
    return (_binom(3 * n + d - 4, 3 * n - 5) + 8 * _binom(3 * n + d - 1, 3 * n - 1)
            + 2 * _binom(3 * n + d - 2, 3 * n - 1) + 5 * _binom(3 * n + d - 3, 3 * n - 1)
            - 2 * _binom(3 * n + d - 4, 3 * n - 1))


@lru_cache(maxsize=None)
def a_array(k: int, d: int) -> int:
    """The Pascal-type array whose row k(n) holds the counts for n >= 2."""
    if k < 0 or d < 0:
        raise ValueError("k and d must be non-negative")
    if k == 0:
        return _exact_div(13 * d**3 + 60 * d**2 + 83 * d + 48, 6)
    if d == 0:
        return k + 8
    return a_array(k - 1, d) + a_array(k, d - 1)


def a_closed(k: int, d: int) -> int:
    return (_binom(k + d, d + 1) + 8 * _binom(k + d + 3, k + 3) + 2 * _binom(k + d + 2, k + 3)
            + 5 * _binom(k + d + 1, k + 3) - 2 * _binom(k + d, k + 3))


def k_of_n(n: int) -> int:
    if n < 2:
        raise ValueError("the array only covers n >= 2")
    return {2: 1, 3: 4}.get(n, 3 * n - 4)


# -- recursion over the d = 0 lattice ---------------------------------------------------


def column_label(column) -> str:
    """Name of a one-column matrix (bottom entry first) as in the d = 0 lattice."""
    from .symbols import DELTA, MU, MU_DOWN, MU_UP, R

    col = list(column)
    top_r = max((q for q, e in enumerate(col) if e == R), default=-1)
    rest = col[top_r + 1:]
    if top_r >= 0 and all(e == DELTA for e in rest[1:]):
        nxt = rest[0] if rest else None
        if nxt is None or nxt == DELTA:
            return f"R{top_r}"
        if nxt.is_n:
            return f"R_{nxt.group.name}"
        if top_r == 0 and nxt in (MU_UP, MU_DOWN, MU):
            return {MU_UP: "mu_up", MU_DOWN: "mu_down", MU: "mu"}[nxt]
    if top_r == 0 and len(col) > 2 and col[1] == MU and col[2].is_n and all(e == DELTA for e in col[3:]):
        return f"mu_{col[2].group.name}"
    if top_r == -1 and all(e == DELTA for e in col):
        return "Delta"
    raise ValueError(f"column {[str(e) for e in col]} is not an fC-column")


def _special(label: str, d: int) -> int | None:
    if label == "Delta":
        return 1
    if label in ("R0", "mu_up", "mu_down"):
        return d + 1
    if label == "mu":
        return 6 * d
    if label == "mu_S2":
        return 2 * d**2 + 5 * d
    if label == "R1":
        return _exact_div(9 * d**2 - d + 4, 2)
    if label == "R_S2":
        return _exact_div(13 * d**3 + 21 * d**2 + 2 * d + 12, 6)
    return None


@lru_cache(maxsize=None)
def _column_lattice(n: int):
    from .cong_finite import build_lattice

    lat = build_lattice(n, 0)
    labels = [column_label(m.grid[q][0] for q in range(n + 1)) for m in lat.elements]
    return lat, labels


def count_recursion(n: int, d: int) -> int:
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    if n == 0:
        return d + 2
    if n == 1:
        return _exact_div(3 * d**2 + 5 * d + 6, 2)
    lat, labels = _column_lattice(n)
    below = [[t for t in range(lat.size) if lat.leq(t, s)] for s in range(lat.size)]

    memo: dict[tuple[int, int], int] = {}

    def c(s: int, dd: int) -> int:
        key = (s, dd)
        if key not in memo:
            if dd == 0:
                val = 1
            else:
                special = _special(labels[s], dd)
                val = special if special is not None else sum(c(t, dd - 1) for t in below[s])
            memo[key] = val
        return memo[key]

    return sum(c(s, d) for s in range(lat.size))


# -- generating function -------------------------------------------------------------------

# Numerator of C(x, y): coefficient of y^j as a polynomial in x (constant term first).
_NUMERATOR_Y = {
    11: [1, 1, -1],
    10: [-12, -8, 7, 1],
    9: [65, 28, -19, -8],
    8: [-210, -56, 28, 19],
    7: [450, 69, -34, 1],
    6: [-672, -49, 45, -80],
    5: [714, 7, -32, 151],
    4: [-540, 27, -31, -122, 1, -1],
    3: [285, -34, 87, 31, -1, 1],
    2: [-100, 21, -76, 19, -8, 8],
    1: [21, -7, 31, -15, -4, 4],
    0: [-2, 1, -5, 3, -1, 1],
}

Poly2 = dict[tuple[int, int], int]  # (power of x, power of y) -> coefficient


def _poly_mul(p: Poly2, q: Poly2) -> Poly2:
    out: Poly2 = {}
    for (a, b), u in p.items():
        for (c, e), v in q.items():
            out[(a + c, b + e)] = out.get((a + c, b + e), 0) + u * v
    return {k: v for k, v in out.items() if v}


def gf_numerator() -> Poly2:
    return {(xa, yb): c for yb, coeffs in _NUMERATOR_Y.items() for xa, c in enumerate(coeffs) if c}


def gf_denominator() -> Poly2:
    """(y-1)^9 (x-1) (y^3 - 3y^2 + x + 3y - 1)."""
    den: Poly2 = {(0, 0): 1}
    for _ in range(9):
        den = _poly_mul(den, {(0, 1): 1, (0, 0): -1})
    den = _poly_mul(den, {(1, 0): 1, (0, 0): -1})
    return _poly_mul(den, {(0, 3): 1, (0, 2): -3, (1, 0): 1, (0, 1): 3, (0, 0): -1})


GF_BUDGET = 40


@lru_cache(maxsize=8)
def gf_coefficients(nmax: int, dmax: int) -> tuple[tuple[int, ...], ...]:
    """Power-series coefficients c[n][d] of C(x, y) for n <= nmax, d <= dmax."""
    if max(nmax, dmax) > GF_BUDGET:
        raise ValueError(f"expansion budget is {GF_BUDGET} in each variable")
    num, den = gf_numerator(), gf_denominator()
    const = den[(0, 0)]
    if abs(const) != 1:
        raise AssertionError("denominator constant term must be a unit")
    terms = [(k, v) for k, v in den.items() if k != (0, 0)]
    c = [[0] * (dmax + 1) for _ in range(nmax + 1)]
    for a in range(nmax + 1):
        for b in range(dmax + 1):
            acc = num.get((a, b), 0)
            for (s, t), v in terms:
                if s <= a and t <= b:
                    acc -= v * c[a - s][b - t]
            c[a][b] = acc * const  # dividing by a unit
    return tuple(tuple(row) for row in c)


def count_gf(n: int, d: int) -> int:
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    # expand at least the 11 x 11 block so repeated small queries share one cached expansion
    return gf_coefficients(max(n, 10), max(d, 10))[n][d]


# -- tables ------------------------------------------------------------------------------------


def table(nmax: int, dmax: int) -> list[list[int]]:
    return [[count_closed(n, d) for d in range(dmax + 1)] for n in range(nmax + 1)]


def table_csv(nmax: int, dmax: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n\\d"] + list(range(dmax + 1)))
    for n, row in enumerate(table(nmax, dmax)):
        w.writerow([n] + row)
    return buf.getvalue()
