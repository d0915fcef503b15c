"""Seeded instance generation, the benchmark harness and the cross-check suite.

Random graphs use SplitMix64 (Steele, Lea & Flood 2014) so any language can
reproduce them bit-for-bit:

* state starts at ``seed mod 2**64``; each draw adds ``0x9E3779B97F4A7C15``
  and returns the usual xor-shift-multiply mix of the new state;
* ``below(r)`` draws until ``x < 2**64 - (2**64 mod r)`` and returns ``x mod r``;
* ``gen_random_bipartite`` takes ``k = floor(D*n + 1/2)`` edges by a partial
  Fisher-Yates shuffle of cells ``0 .. n*n-1`` (swap position ``i`` with
  ``i + below(n*n - i)`` for ``i < k``), cell ``c`` being edge
  ``(c // n, c % n)``, and returns the first ``k`` cells sorted ascending.
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import asdict, dataclass, fields
from typing import Callable, Iterable

from .config import current_caps
from .cutdist import cut_distribution, plan_split
from .graph import BipartiteGraph, to_odd_graph
from .matching import count_perfect_matchings

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, r: int) -> int:
        if r <= 0:
            raise ValueError("range must be positive")
        limit = (1 << 64) - ((1 << 64) % r)
        while True:
            x = self.next()
            if x < limit:
                return x % r


def gen_random_bipartite(n: int, target_degree: float, seed: int) -> BipartiteGraph:
    """``n`` by ``n`` bipartite graph with ``round(target_degree * n)`` uniformly chosen edges."""
    if n < 0 or not 0 <= target_degree <= max(n, 0):
        raise ValueError("need n >= 0 and 0 <= target_degree <= n")
    k = math.floor(target_degree * n + 0.5)
    cells = n * n
    if k > cells:
        raise ValueError(f"{k} edges requested but only {cells} possible")
    rng = SplitMix64(seed)
    pool = list(range(cells))
    for i in range(k):
        j = i + rng.below(cells - i)
        pool[i], pool[j] = pool[j], pool[i]
    return BipartiteGraph(n, n, tuple((c // n, c % n) for c in sorted(pool[:k])))


@dataclass
class BenchRecord:
    instance: str
    n: int
    m: int
    avg_degree: float
    engine: str
    u1_size: int | None
    h: int | None
    class_count: int | None
    class_bound: int | None
    sigma_applications: int
    vector_additions: int
    wall_time_s: float
    count_mod_2_64: int
    count_digits: int


def bench_instances(n_values: Iterable[int], degree: float, instances: int, seed: int):
    """``(name, graph)`` pairs; instance ``i`` of size ``n`` uses seed ``seed + i``."""
    for n in n_values:
        for i in range(instances):
            s = (seed + i) & MASK64
            yield f"n{n}-d{degree:g}-s{s}", gen_random_bipartite(n, degree, s)


def bench_graph(name: str, g: BipartiteGraph, engines: Iterable[str], strategy: str = "paper") -> list[BenchRecord]:
    records = []
    for engine in engines:
        t0 = time.perf_counter()
        result = count_perfect_matchings(g, engine, strategy=strategy)
        elapsed = time.perf_counter() - t0
        st = result.stats
        bound = None
        if result.algorithm == "split":
            bound = math.prod(
                1 + d for d in _neighborhood_degrees(to_odd_graph(g).graph, strategy)
            )
        records.append(
            BenchRecord(
                instance=name,
                n=g.left_count,
                m=g.m,
                avg_degree=round(g.m / g.left_count, 4) if g.left_count else 0.0,
                engine=result.algorithm if engine != "auto" else f"auto:{result.algorithm}",
                u1_size=st.u1_size,
                h=st.h,
                class_count=st.class_count,
                class_bound=bound,
                sigma_applications=st.sigma_applications,
                vector_additions=st.vector_additions,
                wall_time_s=round(elapsed, 6),
                count_mod_2_64=result.count & MASK64,
                count_digits=len(str(result.count)),
            )
        )
    return records


def _neighborhood_degrees(g: BipartiteGraph, strategy: str) -> list[int]:
    plan = plan_split(g, strategy)
    return [g.right_degrees[v] for v in plan.neighborhood]


def run_bench(n_values, degree: float, instances: int, seed: int,
              engines=("halfenum", "split"), strategy: str = "paper") -> list[BenchRecord]:
    records: list[BenchRecord] = []
    for name, g in bench_instances(n_values, degree, instances, seed):
        records.extend(bench_graph(name, g, engines, strategy))
    return records


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=[f.name for f in fields(BenchRecord)], lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(asdict(r))
    return buf.getvalue()


def records_from_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def run_verification(seed: int, max_n: int, trials: int, log: Callable[[str], None] = print) -> bool:
    """Cross-check every engine and both oracles on seeded random graphs."""
    rng = SplitMix64(seed)
    caps = current_caps()
    ok_all = True
    for t in range(trials):
        n = 1 + rng.below(max_n)
        degree = 1 + rng.below(n)
        g = gen_random_bipartite(n, degree, rng.next())
        odd = to_odd_graph(g).graph
        counts = {
            "halfenum": count_perfect_matchings(g, "halfenum").count,
            "split": count_perfect_matchings(g, "split").count,
            "split-greedy": count_perfect_matchings(g, "split", strategy="greedy").count,
            "auto": count_perfect_matchings(g, "auto").count,
            "ryser": count_perfect_matchings(g, "ryser").count,
        }
        if odd.vertex_count <= caps.brute:
            counts["bruteforce"] = count_perfect_matchings(g, "bruteforce").count
        if n <= caps.enum:
            counts["enumerate"] = count_perfect_matchings(g, "enumerate").count
        dists = [cut_distribution(g, e) for e in ("halfenum", "split")]
        if g.vertex_count <= caps.brute:
            dists.append(cut_distribution(g, "bruteforce"))
        ok = len(set(counts.values())) == 1 and all(d == dists[0] for d in dists)
        ok = ok and sum(dists[0]) == 1 << g.vertex_count
        ok_all &= ok
        log(f"trial {t}: n={n} m={g.m} count={counts['ryser']} {'ok' if ok else 'MISMATCH ' + repr(counts)}")
    return ok_all
