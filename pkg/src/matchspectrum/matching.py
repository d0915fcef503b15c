"""Perfect-matching counts: the cut/cycle pipeline and two independent oracles."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .config import CapExceededError, IntegrityError, current_caps
from .cutdist import OpStats, SplitPlan, cut_distribution, plan_split
from .gf2 import (
    WeightDistribution,
    cycle_space_basis,
    gf2_rank,
    iter_codewords,
    macwilliams_dual_distribution,
)
from .graph import BipartiteGraph, connected_components, to_odd_graph

PIPELINE_ENGINES = ("bruteforce", "halfenum", "split", "auto")
ORACLE_ENGINES = ("ryser", "enumerate")


@dataclass
class CountResult:
    count: int
    algorithm: str
    stats: OpStats = field(default_factory=OpStats)
    transformed: bool = False
    # None when no cycle-space read-off happened (unbalanced input, oracle engines)
    target_weight: int | None = None
    cycle_distribution: WeightDistribution | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "count": str(self.count),
                "algorithm": self.algorithm,
                "transformed": self.transformed,
                "target_weight": self.target_weight,
                "stats": self.stats.as_dict(),
            }
        )


def _exact_div(W: WeightDistribution, power: int, stage: str) -> WeightDistribution:
    out = []
    for k, w in enumerate(W):
        q, r = divmod(w, 1 << power)
        if r:
            raise IntegrityError(f"{stage}: entry {k} = {w} is not divisible by 2**{power}")
        out.append(q)
    return out


def choose_engine(g: BipartiteGraph, strategy: str = "paper") -> tuple[str, SplitPlan | None]:
    """Split only when the plan has structure to exploit, otherwise half-enumeration."""
    plan = plan_split(g, strategy)
    if len(plan.U1) >= 2 and plan.h < g.right_count:
        return "split", plan
    return "halfenum", None


def count_perfect_matchings(
    g: BipartiteGraph,
    engine: str = "auto",
    *,
    strategy: str = "paper",
    U1=None,
    checked: bool = False,
) -> CountResult:
    """Number of perfect matchings of ``g``.

    Pipeline engines make ``g`` odd, compute the partition cut-weight
    distribution, divide out the ``2**d`` partitions per cutset, map the cut
    space onto the cycle space with the MacWilliams transform and read the
    entry at weight ``m - n``.  ``ryser`` and ``enumerate`` call the oracles.
    ``U1`` (indices into the transformed graph's left side) forces an
    explicit split plan.
    """
    if engine == "ryser":
        if not g.is_balanced:
            return CountResult(0, engine)
        return CountResult(ryser_permanent(g.biadjacency()), engine)
    if engine == "enumerate":
        return CountResult(enumerate_perfect_matchings(g), engine)
    if engine not in PIPELINE_ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if not g.is_balanced:
        return CountResult(0, engine)

    odd = to_odd_graph(g)
    h = odd.graph
    plan = None
    if engine in ("split", "auto") or U1 is not None:
        plan = plan_split(h, strategy, U1)
    algorithm = engine
    if engine == "auto":
        algorithm = "split" if U1 is not None else choose_engine(h, strategy)[0]

    stats = OpStats()
    partitions = cut_distribution(h, algorithm, plan, checked=checked, stats=stats)
    if sum(partitions) != 1 << h.vertex_count:
        raise IntegrityError("partition distribution lost mass")
    d = connected_components(h)
    cut_dist = _exact_div(partitions, d, "partition-to-cutset correction")
    cycle_dist = macwilliams_dual_distribution(cut_dist, h.m, h.vertex_count - d)
    target = h.m - h.vertex_count // 2
    return CountResult(
        count=cycle_dist[target],
        algorithm=algorithm,
        stats=stats,
        transformed=not odd.was_already_odd,
        target_weight=target,
        cycle_distribution=cycle_dist,
    )


def ryser_permanent(matrix: list[list[int]]) -> int:
    """Permanent by inclusion-exclusion over column subsets, visited in Gray-code order."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("permanent needs a square matrix")
    if n == 0:
        return 1
    row_sums = [0] * n
    total = 0
    chosen = 0
    for k in range(1, 1 << n):
        col = (k & -k).bit_length() - 1
        chosen ^= 1 << col
        sign = 1 if (chosen >> col) & 1 else -1
        for i in range(n):
            row_sums[i] += sign * matrix[i][col]
        prod = 1
        for s in row_sums:
            prod *= s
            if not prod:
                break
        total += -prod if (n - chosen.bit_count()) % 2 else prod
    return total


def iter_perfect_matchings(g: BipartiteGraph, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield each perfect matching as a sorted tuple of edge indices."""
    cap = current_caps().enum if cap is None else cap
    if g.left_count > cap:
        raise CapExceededError(f"|V1| = {g.left_count} exceeds enumeration cap {cap}")
    if not g.is_balanced:
        return
    by_left: list[list[tuple[int, int]]] = [[] for _ in range(g.left_count)]
    for j, (u, v) in enumerate(g.edges):
        by_left[u].append((v, j))
    used = [False] * g.right_count
    chosen: list[int] = []

    def walk(u: int) -> Iterator[tuple[int, ...]]:
        if u == g.left_count:
            yield tuple(sorted(chosen))
            return
        for v, j in by_left[u]:
            if not used[v]:
                used[v] = True
                chosen.append(j)
                yield from walk(u + 1)
                chosen.pop()
                used[v] = False

    yield from walk(0)


def enumerate_perfect_matchings(g: BipartiteGraph, cap: int | None = None) -> int:
    return sum(1 for _ in iter_perfect_matchings(g, cap))


def verify_lemma1(g: BipartiteGraph, cap: int | None = None) -> bool:
    """Complements of the weight ``m - n`` cycle-space words are exactly the perfect matchings of ``g``."""
    if not g.is_odd() or not g.is_balanced:
        raise ValueError("verify_lemma1 needs a balanced odd graph")
    caps = current_caps()
    basis = cycle_space_basis(g)
    if len(basis) > (caps.brute if cap is None else cap):
        raise CapExceededError(f"cycle space rank {len(basis)} exceeds enumeration cap")
    if gf2_rank(basis) != len(basis):
        return False
    full = (1 << g.m) - 1
    target = g.m - g.left_count
    from_code = []
    for word in iter_codewords(basis):
        if word.bit_count() != target:
            continue
        rest = full ^ word
        edges = [g.edges[j] for j in range(g.m) if rest >> j & 1]
        left = {u for u, _ in edges}
        right = {v for _, v in edges}
        if len(edges) != g.left_count or len(left) != g.left_count or len(right) != g.right_count:
            return False
        from_code.append(tuple(j for j in range(g.m) if rest >> j & 1))
    matchings = list(iter_perfect_matchings(g))
    return len(set(from_code)) == len(from_code) and set(from_code) == set(matchings)
