"""GF(2) codes attached to a graph: incidence/cycle generators, weight
distributions, Krawtchouk coefficients and the MacWilliams transform.

Rows are Python ints used as bitsets; bit ``j`` stands for edge ``e_j``.
Distributions are plain lists of ints, index = weight.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .config import CapExceededError, IntegrityError, current_caps
from .graph import BipartiteGraph

WeightDistribution = list[int]


@dataclass(frozen=True)
class Gf2Matrix:
    rows: tuple[int, ...]
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.length:
                raise ValueError(f"row {r:#x} does not fit in {self.length} bits")

    @classmethod
    def from_lists(cls, rows: list[list[int]], length: int | None = None) -> "Gf2Matrix":
        if length is None:
            length = len(rows[0]) if rows else 0
        ints = []
        for row in rows:
            if len(row) != length:
                raise ValueError("all rows must share one length")
            ints.append(sum(1 << j for j, bit in enumerate(row) if bit & 1))
        return cls(tuple(ints), length)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.length)] for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)


def gf2_rank(M: Gf2Matrix) -> int:
    """Row rank over GF(2) by elimination on a copy (xor-basis keyed by leading bit)."""
    pivots: dict[int, int] = {}
    for row in M.rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def incidence_matrix(g: BipartiteGraph) -> Gf2Matrix:
    """One row per global vertex id: the edges incident to it."""
    return Gf2Matrix(tuple(sum(1 << j for j in inc) for inc in g.adjacency), g.m)


def cycle_space_basis(g: BipartiteGraph) -> Gf2Matrix:
    """Fundamental cycles of a BFS spanning forest, one per non-tree edge."""
    nv = g.vertex_count
    parent_edge = [-1] * nv
    depth = [-1] * nv
    tree_edges: set[int] = set()
    for root in range(nv):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for j in g.adjacency[x]:
                y = _other_end(g, j, x)
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    parent_edge[y] = j
                    tree_edges.add(j)
                    queue.append(y)

    rows = []
    for j, (u, v) in enumerate(g.edges):
        if j in tree_edges:
            continue
        bits = 1 << j
        a, b = u, g.left_count + v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            e = parent_edge[a]
            bits ^= 1 << e
            a = _other_end(g, e, a)
        rows.append(bits)
    return Gf2Matrix(tuple(rows), g.m)


def _other_end(g: BipartiteGraph, j: int, x: int) -> int:
    u, v = g.edges[j]
    w = g.left_count + v
    return w if x == u else u


def iter_codewords(basis: Gf2Matrix):
    """All ``2**rows`` xor-combinations of the rows, Gray-code order, zero first."""
    word = 0
    yield word
    for k in range(1, 1 << len(basis.rows)):
        word ^= basis.rows[(k & -k).bit_length() - 1]
        yield word


def enumerate_weight_distribution(basis: Gf2Matrix, m: int | None = None, cap: int | None = None) -> WeightDistribution:
    """Brute-force weight tally over the span of ``basis`` (rows assumed independent)."""
    m = basis.length if m is None else m
    cap = current_caps().brute if cap is None else cap
    if len(basis.rows) > cap:
        raise CapExceededError(f"basis has {len(basis.rows)} rows, enumeration cap is {cap}")
    counts = [0] * (m + 1)
    for word in iter_codewords(basis):
        counts[word.bit_count()] += 1
    return counts


@lru_cache(maxsize=64)
def _krawtchouk(m: int) -> tuple[tuple[int, ...], ...]:
    pascal = [[1]]
    for _ in range(m):
        prev = pascal[-1]
        pascal.append([1] + [prev[k] + prev[k + 1] for k in range(len(prev) - 1)] + [1])

    def binom(a: int, b: int) -> int:
        return pascal[a][b] if 0 <= b <= a else 0

    # entries[i][j] = [x^i] (1-x)^j (1+x)^(m-j)
    return tuple(
        tuple(
            sum((-1) ** k * binom(j, k) * binom(m - j, i - k) for k in range(min(i, j) + 1))
            for j in range(m + 1)
        )
        for i in range(m + 1)
    )


def krawtchouk_table(m: int) -> tuple[tuple[int, ...], ...]:
    """``(m+1) x (m+1)`` exact coefficients; ``table[i][j]`` is the x^i coefficient of (1-x)^j (1+x)^(m-j)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _krawtchouk(m)


def macwilliams_dual_distribution(W: WeightDistribution, m: int, input_rank: int) -> WeightDistribution:
    """Weight distribution of the dual of a length-``m`` code of rank ``input_rank`` with distribution ``W``."""
    if len(W) != m + 1:
        raise ValueError(f"distribution has {len(W)} entries, expected {m + 1}")
    if not 0 <= input_rank <= m:
        raise ValueError("rank out of range")
    size = 1 << input_rank
    if sum(W) != size:
        raise IntegrityError(f"distribution mass {sum(W)} != 2**{input_rank}")
    table = krawtchouk_table(m)
    out = []
    for i, row in enumerate(table):
        acc = sum(k * w for k, w in zip(row, W) if w)
        q, r = divmod(acc, size)
        if r or q < 0:
            raise IntegrityError(f"dual weight {i}: {acc} / 2**{input_rank} is not a non-negative integer")
        out.append(q)
    if out[0] != 1 or sum(out) != 1 << (m - input_rank):
        raise IntegrityError("dual distribution is not the distribution of a linear code")
    return out


def distribution_to_json(W: WeightDistribution) -> str:
    return json.dumps([str(w) for w in W])


def distribution_from_json(text: str) -> WeightDistribution:
    return [int(s) for s in json.loads(text)]
