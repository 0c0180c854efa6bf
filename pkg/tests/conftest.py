"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from twistcong.partition_core import Partition, make_partition
from twistcong.twisted_monoid import Pair


def blocks_from_labels(n: int, labels: list[int]) -> list[list[int]]:
    points = list(range(1, n + 1)) + [-k for k in range(1, n + 1)]
    groups: dict[int, list[int]] = {}
    for p, lab in zip(points, labels):
        groups.setdefault(lab, []).append(p)
    return list(groups.values())


@st.composite
def partitions(draw, n: int | None = None, max_n: int = 4) -> Partition:
    if n is None:
        n = draw(st.integers(min_value=1, max_value=max_n))
    labels = draw(st.lists(st.integers(0, 2 * n - 1), min_size=2 * n, max_size=2 * n))
    return make_partition(n, blocks_from_labels(n, labels))


@st.composite
def twisted(draw, n: int, max_col: int = 5) -> Pair:
    return Pair(draw(st.integers(0, max_col)), draw(partitions(n=n)))


WORKED_ALPHA = make_partition(6, [[1, 4], [2, 3, -4, -5], [5, 6], [-1, -2, -6], [-3]])
WORKED_BETA = make_partition(6, [[1, 2], [3, 4, -1], [5, -4, -5, -6], [6], [-2, -3]])
WORKED_PRODUCT = make_partition(6, [[1, 4], [2, 3, -1, -4, -5, -6], [5, 6], [-2, -3]])


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 10):
        ok, detail = acceptance.RESULTS.get(k, (False, "not run or aborted before reporting"))
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
