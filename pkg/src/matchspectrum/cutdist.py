"""Partition cut-weight distribution ``W'``: counts of vertex subsets ``S`` by
the number of edges leaving ``S``.

Three engines compute it: exhaustive enumeration over all of ``V``, the
half-enumeration over subsets of the left side with the ``shift`` recursion
on the right side, and the split engine which classes left subsets by their
signature on the neighbourhood of a small set ``U1``.

The list-based :func:`sigma` and :func:`shift` are the reference operators.
The engines run the same operators on a packed encoding: a distribution of
length ``m+1`` is one Python int holding entry ``k`` in bits
``[k*B, (k+1)*B)``.  Every entry of every intermediate is bounded by the final
mass ``2**|V|``, so ``B = |V| + 2`` never carries between slots and
``sigma`` becomes a bit shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import CapExceededError, IntegrityError, current_caps
from .gf2 import WeightDistribution
from .graph import BipartiteGraph

ShiftSequence = tuple[int, ...]


@dataclass
class OpStats:
    """Machine-independent work counters filled in by the engines."""

    sigma_applications: int = 0
    vector_additions: int = 0
    subsets_enumerated: int = 0
    class_count: int | None = None
    u1_size: int | None = None
    h: int | None = None

    def as_dict(self) -> dict[str, int | None]:
        return dict(self.__dict__)


# -- reference operators --------------------------------------------------


def sigma(W: Sequence[int], x: int, checked: bool = False) -> WeightDistribution:
    """Translate ``W`` by ``x`` inside a fixed-length vector; entries pushed out are dropped."""
    size = len(W)
    out = [0] * size
    for i, w in enumerate(W):
        j = i + x
        if 0 <= j < size:
            out[j] = w
        elif w and checked:
            raise IntegrityError(f"shift by {x} would drop weight-{i} mass {w}")
    return out


def shift(W: Sequence[int], L: Sequence[int], checked: bool = False) -> WeightDistribution:
    """Fold ``W <- W + sigma(W, l)`` over ``L`` in order."""
    W = list(W)
    for l in L:
        W = [a + b for a, b in zip(W, sigma(W, l, checked))]
    return W


def unit_distribution(weight: int, m: int) -> WeightDistribution:
    W = [0] * (m + 1)
    W[weight] = 1
    return W


def l_vector(g: BipartiteGraph, S, order: Sequence[int] | None = None) -> ShiftSequence:
    """Per right vertex ``v`` in ``order``: edges from ``v`` to ``V1 - S`` minus edges from ``v`` to ``S``.

    ``S`` holds left-side indices.
    """
    S = set(S)
    order = range(g.right_count) if order is None else order
    out = []
    for v in order:
        inside = sum(1 for u in g.right_neighbors[v] if u in S)
        out.append(len(g.right_neighbors[v]) - 2 * inside)
    return tuple(out)


# -- packed encoding ------------------------------------------------------


def slot_bits(g: BipartiteGraph) -> int:
    return g.vertex_count + 2


def pack(W: Sequence[int], bits: int) -> int:
    out = 0
    for k, w in enumerate(W):
        if w < 0 or w >> bits:
            raise ValueError(f"entry {w} does not fit a {bits}-bit slot")
        out |= w << (k * bits)
    return out


def unpack(packed: int, bits: int, slots: int) -> WeightDistribution:
    mask = (1 << bits) - 1
    out = [(packed >> (k * bits)) & mask for k in range(slots)]
    if packed >> (slots * bits):
        raise IntegrityError("packed distribution overflows its last slot")
    return out


class _Packer:
    """Shift/fold on packed distributions of ``slots`` entries, ``bits`` wide."""

    def __init__(self, bits: int, slots: int, checked: bool, stats: OpStats):
        self.bits = bits
        self.slots = slots
        self.full = (1 << (bits * slots)) - 1
        self.checked = checked
        self.stats = stats

    def sigma(self, w: int, x: int) -> int:
        self.stats.sigma_applications += 1
        if x >= 0:
            out = w << (x * self.bits)
            if out > self.full:
                if self.checked:
                    raise IntegrityError(f"shift by {x} pushes mass past weight {self.slots - 1}")
                out &= self.full
            return out
        drop = -x * self.bits
        if self.checked and w & ((1 << drop) - 1):
            raise IntegrityError(f"shift by {x} pushes mass below weight 0")
        return w >> drop

    def fold(self, w: int, L: Sequence[int]) -> int:
        bits, full, checked = self.bits, self.full, self.checked
        for l in L:
            if l >= 0:
                s = w << (l * bits)
                if s > full:
                    if checked:
                        raise IntegrityError(f"shift by {l} pushes mass past weight {self.slots - 1}")
                    s &= full
            else:
                drop = -l * bits
                if checked and w & ((1 << drop) - 1):
                    raise IntegrityError(f"shift by {l} pushes mass below weight 0")
                s = w >> drop
            w += s
        self.stats.sigma_applications += len(L)
        self.stats.vector_additions += len(L)
        return w


def _left_degree_sum(ldeg: Sequence[int], mask: int) -> int:
    total = 0
    while mask:
        low = mask & -mask
        total += ldeg[low.bit_length() - 1]
        mask ^= low
    return total


# -- engines --------------------------------------------------------------


def cutdist_bruteforce(g: BipartiteGraph, cap: int | None = None, stats: OpStats | None = None) -> WeightDistribution:
    """Tally the cut weight of every ``S`` subset of ``V`` (vectorised over subsets)."""
    cap = current_caps().brute if cap is None else cap
    nv = g.vertex_count
    if nv > cap:
        raise CapExceededError(f"|V| = {nv} exceeds brute-force cap {cap}")
    ends = [(u, g.left_count + v) for u, v in g.edges]
    counts = np.zeros(g.m + 1, dtype=np.int64)
    total = 1 << nv
    chunk = 1 << min(nv, 20)
    for start in range(0, total, chunk):
        S = np.arange(start, min(start + chunk, total), dtype=np.int64)
        side = [((S >> x) & 1).astype(np.uint8) for x in range(nv)]
        weight = np.zeros(S.shape, dtype=np.uint16)
        for a, b in ends:
            weight += side[a] ^ side[b]
        counts += np.bincount(weight, minlength=g.m + 1)
    if stats is not None:
        stats.subsets_enumerated += total
    return [int(c) for c in counts]


def cutdist_halfenum(g: BipartiteGraph, checked: bool = False, stats: OpStats | None = None) -> WeightDistribution:
    """Sum over ``S`` subset of ``V1`` of ``shift(unit at sum deg(S), l_vector(S))``."""
    stats = OpStats() if stats is None else stats
    bits, slots = slot_bits(g), g.m + 1
    packer = _Packer(bits, slots, checked, stats)
    ldeg, rdeg, masks = g.left_degrees, g.right_degrees, g.right_neighbor_masks
    rng = range(g.right_count)
    total = 0
    for S in range(1 << g.left_count):
        L = [rdeg[v] - 2 * (masks[v] & S).bit_count() for v in rng]
        total += packer.fold(1 << (_left_degree_sum(ldeg, S) * bits), L)
    stats.vector_additions += 1 << g.left_count
    stats.subsets_enumerated += 1 << g.left_count
    return unpack(total, bits, slots)


@dataclass(frozen=True)
class SplitPlan:
    U1: tuple[int, ...]
    T1: tuple[int, ...]
    right_order: tuple[int, ...]
    h: int

    @property
    def neighborhood(self) -> tuple[int, ...]:
        """``N(U1)``: the last ``h`` entries of ``right_order``."""
        return self.right_order[len(self.right_order) - self.h :]


def paper_split_size(g: BipartiteGraph) -> int:
    """``max(1, floor(n / (5 D max(1, log2 D))))`` with ``D = m / n``, capped at ``n``."""
    n = g.left_count
    if n == 0:
        return 0
    avg = g.m / n
    if avg == 0:
        return 1
    k = math.floor(n / (5 * avg * max(1.0, math.log2(avg))))
    return min(n, max(1, k))


def plan_split(g: BipartiteGraph, strategy: str = "paper", U1=None) -> SplitPlan:
    """Choose ``U1`` (``paper``: lowest degrees first; ``greedy``: smallest
    neighbourhood growth; ``explicit``: the given ``U1``) and order ``V2`` so
    ``N(U1)`` comes last."""
    n = g.left_count
    if U1 is not None:
        strategy = "explicit"
    if strategy == "explicit":
        if U1 is None:
            raise ValueError("explicit strategy needs U1")
        chosen = sorted(set(U1))
        if any(not (0 <= u < n) for u in chosen):
            raise ValueError(f"U1 {chosen} is not a subset of the left side 0..{n - 1}")
    elif strategy == "paper":
        k = paper_split_size(g)
        chosen = sorted(sorted(range(n), key=lambda u: (g.left_degrees[u], u))[:k])
    elif strategy == "greedy":
        k = paper_split_size(g)
        chosen, covered = [], set()
        for _ in range(k):
            rest = [u for u in range(n) if u not in chosen]
            best = min(rest, key=lambda u: (len(covered | set(g.left_neighbors[u])), g.left_degrees[u], u))
            chosen.append(best)
            covered |= set(g.left_neighbors[best])
        chosen.sort()
    else:
        raise ValueError(f"unknown split strategy {strategy!r}")

    nbhd = sorted({v for u in chosen for v in g.left_neighbors[u]})
    in_nbhd = set(nbhd)
    order = tuple(v for v in range(g.right_count) if v not in in_nbhd) + tuple(nbhd)
    T1 = tuple(u for u in range(n) if u not in set(chosen))
    return SplitPlan(U1=tuple(chosen), T1=T1, right_order=order, h=len(nbhd))


def class_count_bound(g: BipartiteGraph, plan: SplitPlan) -> int:
    """Product of ``deg(v) + 1`` over ``N(U1)``."""
    return math.prod(g.right_degrees[v] + 1 for v in plan.neighborhood)


@dataclass
class ClassAccumulator:
    key: ShiftSequence
    weight_sum: WeightDistribution
    member_count: int = 0


def _mask_of(vertices) -> int:
    return sum(1 << u for u in vertices)


def _classify_packed(g: BipartiteGraph, plan: SplitPlan, packer: _Packer) -> dict[ShiftSequence, list[int]]:
    bits = packer.bits
    ldeg, rdeg, masks = g.left_degrees, g.right_degrees, g.right_neighbor_masks
    cut = g.right_count - plan.h
    first, last = plan.right_order[:cut], plan.right_order[cut:]
    classes: dict[ShiftSequence, list[int]] = {}
    tmask = _mask_of(plan.T1)
    X = 0
    while True:
        key = tuple(rdeg[v] - 2 * (masks[v] & X).bit_count() for v in last)
        L_T = [rdeg[v] - 2 * (masks[v] & X).bit_count() for v in first]
        w = packer.fold(1 << (_left_degree_sum(ldeg, X) * bits), L_T)
        slot = classes.get(key)
        if slot is None:
            classes[key] = [w, 1]
        else:
            slot[0] += w
            slot[1] += 1
            packer.stats.vector_additions += 1
        packer.stats.subsets_enumerated += 1
        if X == tmask:
            break
        X = (X - tmask) & tmask
    return classes


def classify(g: BipartiteGraph, plan: SplitPlan, checked: bool = False, stats: OpStats | None = None) -> list[ClassAccumulator]:
    """Group subsets ``X`` of ``T1`` by ``L_U(X, {})``; each class carries the
    sum of ``shift(unit at sum deg(X), L_T(X))`` over its members."""
    stats = OpStats() if stats is None else stats
    bits, slots = slot_bits(g), g.m + 1
    classes = _classify_packed(g, plan, _Packer(bits, slots, checked, stats))
    stats.class_count = len(classes)
    return [ClassAccumulator(k, unpack(w, bits, slots), c) for k, (w, c) in classes.items()]


def cutdist_split(g: BipartiteGraph, plan: SplitPlan | None = None, checked: bool = False, stats: OpStats | None = None) -> WeightDistribution:
    """Recombine each class with every ``Y`` subset of ``U1``:
    ``shift(sigma(W_i, c_Y), L(i) + L_U({}, Y) - L_U({}, {}))``."""
    plan = plan_split(g) if plan is None else plan
    stats = OpStats() if stats is None else stats
    bits, slots = slot_bits(g), g.m + 1
    packer = _Packer(bits, slots, checked, stats)
    classes = _classify_packed(g, plan, packer)

    ldeg, rdeg, masks = g.left_degrees, g.right_degrees, g.right_neighbor_masks
    last = plan.neighborhood
    base = [rdeg[v] for v in last]
    per_y = []
    umask = _mask_of(plan.U1)
    Y = 0
    while True:
        lu_y = [rdeg[v] - 2 * (masks[v] & Y).bit_count() for v in last]
        per_y.append((_left_degree_sum(ldeg, Y), [a - b for a, b in zip(lu_y, base)]))
        if Y == umask:
            break
        Y = (Y - umask) & umask

    total = 0
    for key, (w_i, _) in classes.items():
        for c_y, delta in per_y:
            L = [k + d for k, d in zip(key, delta)]
            total += packer.fold(packer.sigma(w_i, c_y), L)
    stats.vector_additions += len(classes) * len(per_y)
    stats.class_count = len(classes)
    stats.u1_size = len(plan.U1)
    stats.h = plan.h
    return unpack(total, bits, slots)


ENGINES = ("bruteforce", "halfenum", "split")


def cut_distribution(g: BipartiteGraph, engine: str = "halfenum", plan: SplitPlan | None = None,
                     checked: bool = False, stats: OpStats | None = None) -> WeightDistribution:
    if engine == "bruteforce":
        return cutdist_bruteforce(g, stats=stats)
    if engine == "halfenum":
        return cutdist_halfenum(g, checked=checked, stats=stats)
    if engine == "split":
        return cutdist_split(g, plan, checked=checked, stats=stats)
    raise ValueError(f"unknown cut-distribution engine {engine!r}")
