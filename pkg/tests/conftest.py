from __future__ import annotations

import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from matchspectrum.graph import BipartiteGraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_report():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


@st.composite
def bipartite_graphs(draw, max_left=4, max_right=None, balanced=True):
    nl = draw(st.integers(0, max_left))
    nr = nl if balanced else draw(st.integers(0, max_left if max_right is None else max_right))
    cells = [(u, v) for u in range(nl) for v in range(nr)]
    mask = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    edges = [c for c, keep in zip(cells, mask) if keep]
    edges = draw(st.permutations(edges))
    return BipartiteGraph(nl, nr, tuple(edges))


# -- independent oracles (deliberately naive) --------------------------------


def naive_cut_distribution(g: BipartiteGraph) -> list[int]:
    counts = [0] * (g.m + 1)
    nv = g.vertex_count
    for S in range(1 << nv):
        w = 0
        for u, v in g.edges:
            if ((S >> u) & 1) != ((S >> (g.left_count + v)) & 1):
                w += 1
        counts[w] += 1
    return counts


def permutation_permanent(matrix: list[list[int]]) -> int:
    n = len(matrix)
    total = 0
    for perm in itertools.permutations(range(n)):
        p = 1
        for i in range(n):
            p *= matrix[i][perm[i]]
        total += p
    return total


def dual_distribution_by_enumeration(rows: list[int], m: int) -> list[int]:
    counts = [0] * (m + 1)
    for vec in range(1 << m):
        if all((vec & r).bit_count() % 2 == 0 for r in rows):
            counts[vec.bit_count()] += 1
    return counts


def all_graphs(n: int):
    """Every balanced bipartite graph on ``n + n`` vertices, edges in cell order."""
    cells = [(u, v) for u in range(n) for v in range(n)]
    for mask in range(1 << len(cells)):
        yield BipartiteGraph(n, n, tuple(c for k, c in enumerate(cells) if mask >> k & 1))
