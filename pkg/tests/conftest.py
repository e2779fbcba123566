"""Shared helpers: the fixed graph battery and oracle utilities."""

import bisect
import random

import pytest

from asmtree import Graph, family, is_connected_subset

BATTERY_SEED = 20240810


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random connected graph: a uniform labeled tree plus `extra` distinct
    random non-tree edges."""
    if n < 3:
        raise ValueError("needs n >= 3")
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    avail = sorted(v for v in range(n) if degree[v] == 1)
    for v in prufer:
        leaf = avail.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            bisect.insort(avail, v)
    edges.append((avail[0], avail[1]))
    present = {frozenset(e) for e in edges}
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if frozenset((u, v)) not in present
    ]
    rng.shuffle(non_edges)
    edges.extend(non_edges[:extra])
    return Graph(n, edges)


def edge_battery() -> list[tuple[str, Graph]]:
    """The fixed, seeded battery of ~40 connected graphs on <= 8 vertices."""
    battery = []
    for n in range(2, 9):
        battery.append((f"P{n}", family("path", [n])))
    for n in range(3, 9):
        battery.append((f"C{n}", family("cycle", [n])))
    for n in range(1, 8):
        battery.append((f"S{n}", family("star", [n])))
    battery.append(("K22", family("complete_multipartite", [2, 2])))
    battery.append(("K23", family("complete_multipartite", [2, 3])))
    battery.append(("K4", family("complete", [4])))
    for n in range(1, 4):
        battery.append((f"S2_{n}", family("star2", [n])))
    for n in range(2, 5):
        battery.append((f"D{n}", family("caterpillar", [n])))
    rng = random.Random(BATTERY_SEED)
    plan = [(5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3), (7, 1), (7, 2), (8, 1), (8, 1), (8, 1)]
    for i, (n, extra) in enumerate(plan):
        g = random_connected_graph(rng, n, extra)
        assert g.is_connected()
        battery.append((f"R{n}_{extra}_{i}", g))
    return battery


@pytest.fixture(scope="session")
def battery():
    return edge_battery()


def count_connected_rule_dp(g: Graph) -> int:
    """Independent oracle for the connected rule: weighted partitions into
    connected parts, computed without building any tree."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def trees_of(u: int) -> int:
        if u.bit_count() == 1:
            return 1
        low = u & -u
        rest = u ^ low
        total = 0
        s = rest
        while True:
            part = low | s
            if part != u and is_connected_subset(g, part):
                total += trees_of(part) * parts_product(u ^ part)
            if s == 0:
                break
            s = (s - 1) & rest
        return total

    @lru_cache(maxsize=None)
    def parts_product(w: int) -> int:
        if w == 0:
            return 1
        low = w & -w
        rest = w ^ low
        total = 0
        s = rest
        while True:
            part = low | s
            if is_connected_subset(g, part):
                total += trees_of(part) * parts_product(w ^ part)
            if s == 0:
                break
            s = (s - 1) & rest
        return total

    return trees_of(g.full_mask)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
