"""Exit criteria.  Each test appends one PASS/FAIL line to the terminal summary."""

from __future__ import annotations

import time

import pytest

from matchspectrum.bench import SplitMix64, gen_random_bipartite, records_from_csv
from matchspectrum.cli import main
from matchspectrum.cutdist import (
    cutdist_bruteforce,
    cutdist_halfenum,
    cutdist_split,
    plan_split,
    shift,
    sigma,
)
from matchspectrum.gf2 import Gf2Matrix, enumerate_weight_distribution, gf2_rank, macwilliams_dual_distribution
from matchspectrum.graph import complete_bipartite, to_odd_graph
from matchspectrum.matching import (
    count_perfect_matchings,
    enumerate_perfect_matchings,
    ryser_permanent,
    verify_lemma1,
)

from conftest import all_graphs, dual_distribution_by_enumeration

PIPELINE = ("bruteforce", "halfenum", "split")


def _record(report, number: int, ok: bool, detail: str) -> None:
    report.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def _five_way(g) -> dict[str, int]:
    counts = {e: count_perfect_matchings(g, e).count for e in PIPELINE}
    counts["ryser"] = ryser_permanent(g.biadjacency())
    counts["enumerate"] = enumerate_perfect_matchings(g)
    return counts


def _small_graphs():
    for n in range(4):
        yield from all_graphs(n)


def test_1_exhaustive_oracle_agreement(acceptance_report):
    t0 = time.perf_counter()
    bad = []
    total = 0
    for g in _small_graphs():
        total += 1
        counts = _five_way(g)
        if len(set(counts.values())) != 1:
            bad.append((g, counts))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    _record(acceptance_report, 1, ok, f"{total} graphs n<=3, {len(bad)} mismatches, {elapsed:.1f}s (<60s)")
    assert not bad, bad[:3]
    assert elapsed < 60


def test_2_randomized_oracle_agreement(acceptance_report):
    rng = SplitMix64(2024)
    t0 = time.perf_counter()
    bad = []
    for _ in range(200):
        n = 4 + rng.below(5)
        degree = 1 + rng.below(n)
        g = gen_random_bipartite(n, degree, rng.next())
        counts = _five_way(g)
        if len(set(counts.values())) != 1:
            bad.append((g, counts))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    _record(acceptance_report, 2, ok, f"200 seeded graphs n in [4,8], {len(bad)} mismatches, {elapsed:.1f}s (<120s)")
    assert not bad, bad[:3]
    assert elapsed < 120


def test_3_engine_equivalence(acceptance_report):
    graphs = list(_small_graphs())
    rng = SplitMix64(33)
    for _ in range(100):
        n = 1 + rng.below(10)
        degree = rng.below(n + 1)
        graphs.append(gen_random_bipartite(n, degree, rng.next()))
    bad = []
    for g in graphs:
        assert g.vertex_count <= 20
        a = cutdist_bruteforce(g)
        b = cutdist_halfenum(g, checked=True)
        c = cutdist_split(g, plan_split(g), checked=True)
        if not (a == b == c and sum(a) == 2**g.vertex_count):
            bad.append(g)
    _record(acceptance_report, 3, not bad, f"{len(graphs)} graphs, W' equal across engines with mass 2^|V|: {len(bad)} failures")
    assert not bad


def test_4_macwilliams(acceptance_report):
    rng = SplitMix64(4)
    failures = 0
    for _ in range(100):
        m = 1 + rng.below(12)
        rows: list[int] = []
        for _ in range(rng.below(m + 1)):
            r = rng.below(1 << m)
            if gf2_rank(Gf2Matrix(tuple(rows + [r]), m)) == len(rows) + 1:
                rows.append(r)
        W = enumerate_weight_distribution(Gf2Matrix(tuple(rows), m))
        dual = macwilliams_dual_distribution(W, m, len(rows))
        if dual != dual_distribution_by_enumeration(rows, m):
            failures += 1
        elif macwilliams_dual_distribution(dual, m, m - len(rows)) != W:
            failures += 1
    triangle = macwilliams_dual_distribution([1, 0, 3, 0], 3, 2)
    ok = failures == 0 and triangle == [1, 0, 0, 1]
    _record(acceptance_report, 4, ok, f"100 random bases m<=12: {failures} failures; triangle -> {triangle}")
    assert failures == 0
    assert triangle == [1, 0, 0, 1]


def test_5_lemma1_bijection(acceptance_report):
    graphs = [complete_bipartite(1), complete_bipartite(3), to_odd_graph(complete_bipartite(2)).graph]
    rng = SplitMix64(5)
    seeded = 0
    while seeded < 50:
        n = 1 + rng.below(4)
        g = to_odd_graph(gen_random_bipartite(n, 1 + rng.below(n), rng.next())).graph
        if g.m <= 20:
            graphs.append(g)
            seeded += 1
    results = [verify_lemma1(g) for g in graphs]
    with_matchings = sum(1 for g in graphs[3:] if enumerate_perfect_matchings(g))
    ok = all(results)
    _record(acceptance_report, 5, ok, f"{sum(results)}/{len(graphs)} odd graphs pass ({with_matchings} seeded ones have matchings)")
    assert ok


def test_6_shift_linearity(acceptance_report):
    rng = SplitMix64(6)
    failures = 0
    for _ in range(1000):
        core = [rng.below(20) for _ in range(1 + rng.below(6))]
        core2 = [rng.below(20) for _ in core]
        L = [rng.below(9) - 4 for _ in range(rng.below(5))]
        L2 = [rng.below(9) - 4 for _ in range(rng.below(5))]
        x = rng.below(9) - 4
        # pad so that no shift ever leaves the vector; checked mode proves it
        pad = sum(map(abs, L)) + sum(map(abs, L2)) + abs(x)
        W = [0] * pad + core + [0] * pad
        W2 = [0] * pad + core2 + [0] * pad
        commute = sigma(shift(W, L, True), x, True) == shift(sigma(W, x, True), L, True)
        concat = shift(shift(W, L, True), L2, True) == shift(W, L + L2, True)
        summed = [a + b for a, b in zip(W, W2)]
        additive = shift(summed, L, True) == [a + b for a, b in zip(shift(W, L, True), shift(W2, L, True))]
        sig_add = sigma(summed, x, True) == [a + b for a, b in zip(sigma(W, x, True), sigma(W2, x, True))]
        failures += not (commute and concat and additive and sig_add)
    _record(acceptance_report, 6, failures == 0, f"1000 trials of commutation/concatenation/additivity: {failures} failures")
    assert failures == 0


def test_7_named_values(acceptance_report):
    factorials = [1, 1, 2, 6, 24, 120, 720, 5040, 40320]
    got = [count_perfect_matchings(complete_bipartite(n), "halfenum").count for n in range(1, 9)]
    k33 = count_perfect_matchings(complete_bipartite(3)).count
    odd = to_odd_graph(complete_bipartite(2)).graph
    ok = got == factorials[1:] and k33 == 6 and odd.vertex_count == 8 and odd.m == 10 and odd.is_odd()
    _record(acceptance_report, 7, ok, f"K_n,n -> {got}; K_3,3 -> {k33}; odd(K_2,2): |V|={odd.vertex_count}, m={odd.m}")
    assert ok


@pytest.mark.slow
def test_8_split_regime(acceptance_report, tmp_path):
    out = tmp_path / "bench_n16_d3.csv"
    code = main(["bench", "--n", "16", "--degree", "3", "--instances", "10", "--seed", "8",
                 "--engines", "halfenum,split", "--output", str(out)])
    assert code == 0
    rows = records_from_csv(out.read_text())
    by_instance: dict[str, dict[str, dict[str, str]]] = {}
    for r in rows:
        by_instance.setdefault(r["instance"], {})[r["engine"]] = r
    within_bound = all(int(v["split"]["class_count"]) <= int(v["split"]["class_bound"]) for v in by_instance.values())
    digests_agree = all(
        (v["split"]["count_mod_2_64"], v["split"]["count_digits"]) == (v["halfenum"]["count_mod_2_64"], v["halfenum"]["count_digits"])
        for v in by_instance.values()
    )
    cheaper = sum(
        int(v["split"]["sigma_applications"]) < int(v["halfenum"]["sigma_applications"]) for v in by_instance.values()
    )
    share = cheaper / len(by_instance)
    ok = within_bound and digests_agree and share >= 0.9
    _record(acceptance_report, 8, ok,
            f"{len(by_instance)} instances n=16 D=3: class bound {'held' if within_bound else 'VIOLATED'}, "
            f"split cheaper on {share:.0%} (>=90%), digests {'agree' if digests_agree else 'DISAGREE'}")
    assert within_bound and digests_agree
    assert share >= 0.9
