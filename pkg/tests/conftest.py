"""Shared oracles. Nothing here calls the code paths it is used to check."""

from fractions import Fraction
from itertools import permutations

import pytest

ACCEPTANCE_LINES = []


def set_partitions(n):
    """Set partitions of range(n) via restricted growth strings."""
    if n == 0:
        yield []
        return

    def rgs(prefix, top):
        if len(prefix) == n:
            blocks = [[] for _ in range(top + 1)]
            for i, b in enumerate(prefix):
                blocks[b].append(i)
            yield blocks
            return
        for b in range(top + 2):
            yield from rgs(prefix + [b], max(top, b))

    yield from rgs([0], 0)


def ordered_partition_count(n, max_block=None, sizes=None):
    """Count block orderings of every set partition, optionally filtered."""
    total = 0
    for blocks in set_partitions(n):
        lens = sorted(len(b) for b in blocks)
        if max_block is not None and lens and lens[-1] > max_block:
            continue
        if sizes is not None and lens != sorted(sizes):
            continue
        total += sum(1 for _ in permutations(range(len(blocks))))
    return total


def recursion_values(point, n_max, seeds=None):
    """Exact values of the r-term recursion at a rational point."""
    r = len(point)
    vals = list(seeds) if seeds is not None else [Fraction(0)] * (r - 1) + [Fraction(1)]
    while len(vals) <= n_max:
        vals.append(sum(point[i] * vals[-1 - i] for i in range(r)))
    return vals


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    def record(number, text, ok, detail=""):
        ACCEPTANCE_LINES.append(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {text}" + (f" ({detail})" if detail else "")
        )
        return ok

    return record
