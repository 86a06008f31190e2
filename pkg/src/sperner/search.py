"""Exhaustive maximum-system search via maximum clique.

Candidate k-partitions are enumerated in canonical lexicographic order,
their pairwise-compatibility graph is built (two partitions are adjacent
iff all their classes are mutually incomparable), and a maximum Sperner
system is exactly a maximum clique in that graph.

The clique solver is a deterministic branch-and-bound with greedy-coloring
upper bounds over bitmask candidate sets.  Vertex order is the candidate
index: candidates sharing a class are non-adjacent and consecutive in
canonical order, so greedy coloring packs them into few color classes,
which is what makes the dense instances tractable (the (9,4) graph gets a
15-color root bound this way).  Coloring below the pruning threshold is
not recorded, only the vertices that can still extend the incumbent are.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .model import Partition, PartitionSystem, mask_of, verify_sperner

__all__ = [
    "CandidateSet",
    "CompatibilityGraph",
    "SearchOutcome",
    "enumerate_partitions",
    "build_graph",
    "graph_from_edges",
    "max_clique",
    "tiny_oracle",
    "solve_sp",
]


@dataclass(frozen=True)
class CandidateSet:
    """Every k-partition of [0, n) with class sizes >= min_class_size, canonically ordered."""

    n: int
    k: int
    min_class_size: int
    partitions: tuple[Partition, ...]

    def __len__(self):
        return len(self.partitions)


@dataclass(frozen=True)
class CompatibilityGraph:
    """Symmetric adjacency over candidate partitions, one bitmask row per vertex."""

    num_vertices: int
    adj: tuple[int, ...]
    candidates: CandidateSet | None = None


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a clique search; best is None for graphs without candidates attached."""

    best: PartitionSystem | None
    vertices: tuple[int, ...]
    size: int
    proven_optimal: bool
    nodes_explored: int
    elapsed: float
    root_bound: int


def enumerate_partitions(n: int, k: int, min_class_size: int = 2) -> CandidateSet:
    """All k-partitions with class sizes >= min_class_size, each exactly once.

    Generation assigns elements 0..n-1 to blocks in restricted-growth
    style (a new block is opened only by its smallest element), so every
    partition appears once; the result is then sorted canonically.
    """
    if min_class_size < 1:
        raise ValueError("min_class_size must be at least 1")
    if n < k * min_class_size:
        raise ValueError(
            f"no candidates: n={n} cannot hold {k} classes of size >= {min_class_size}"
        )
    out: list[Partition] = []
    blocks: list[list[int]] = []

    def rec(i: int) -> None:
        if i == n:
            if len(blocks) == k and all(len(b) >= min_class_size for b in blocks):
                out.append(Partition(n, [list(b) for b in blocks], k))
            return
        remaining = n - i
        deficit = sum(max(0, min_class_size - len(b)) for b in blocks)
        need_new = k - len(blocks)
        if remaining < deficit + need_new * min_class_size:
            return
        for b in blocks:
            b.append(i)
            rec(i + 1)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            rec(i + 1)
            blocks.pop()

    rec(0)
    out.sort(key=lambda p: p._key())
    return CandidateSet(n, k, min_class_size, tuple(out))


def build_graph(candidates: CandidateSet) -> CompatibilityGraph:
    """Adjacency via a class-containment index rather than pairwise scans.

    Vertices conflict iff they share a class or one has a class properly
    inside a class of the other; everything else is an edge.
    """
    masks_list = [p.classes for p in candidates.partitions]
    n = candidates.n
    num = len(masks_list)

    eq: dict[int, int] = {}
    for v, classes in enumerate(masks_list):
        for c in classes:
            eq[c] = eq.get(c, 0) | (1 << v)

    sizes_present = sorted({c.bit_count() for classes in masks_list for c in classes})
    subs_cache: dict[int, list[int]] = {}

    def proper_subs(c: int) -> list[int]:
        cached = subs_cache.get(c)
        if cached is not None:
            return cached
        elems = [e for e in range(n) if c >> e & 1]
        res = []
        for s in sizes_present:
            if s >= len(elems):
                break
            for sub in combinations(elems, s):
                res.append(mask_of(sub))
        subs_cache[c] = res
        return res

    sub_to_super: dict[int, int] = {}
    for v, classes in enumerate(masks_list):
        for c in classes:
            for sm in proper_subs(c):
                sub_to_super[sm] = sub_to_super.get(sm, 0) | (1 << v)

    full = (1 << num) - 1
    adj = []
    for v, classes in enumerate(masks_list):
        conflict = 1 << v
        for c in classes:
            conflict |= eq.get(c, 0) | sub_to_super.get(c, 0)
            for sm in proper_subs(c):
                conflict |= eq.get(sm, 0)
        adj.append(full & ~conflict)
    return CompatibilityGraph(num, tuple(adj), candidates)


def graph_from_edges(num_vertices: int, edges) -> CompatibilityGraph:
    """Plain graph constructor for tests and oracles."""
    adj = [0] * num_vertices
    for u, v in edges:
        if u == v:
            continue
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise ValueError(f"edge ({u},{v}) out of range")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return CompatibilityGraph(num_vertices, tuple(adj))


def _count_colors(P: int, adj) -> int:
    colors = 0
    while P:
        colors += 1
        Q = P
        cls = 0
        while Q:
            lsb = Q & -Q
            v = lsb.bit_length() - 1
            cls |= lsb
            Q &= ~adj[v]
            Q ^= lsb
        P &= ~cls
    return colors


def _greedy_clique(adj, num: int, tries: int = 24) -> int:
    """Deterministic greedy lower bound: best clique mask over a few dense seeds."""
    best = 0
    starts = sorted(range(num), key=lambda v: (-adj[v].bit_count(), v))[:tries]
    for s in starts:
        clique = 1 << s
        P = adj[s]
        while P:
            tmp, pick, pick_score = P, -1, -1
            while tmp:
                lsb = tmp & -tmp
                v = lsb.bit_length() - 1
                tmp ^= lsb
                score = (adj[v] & P).bit_count()
                if score > pick_score:
                    pick_score, pick = score, v
            clique |= 1 << pick
            P &= adj[pick]
        if clique.bit_count() > best.bit_count():
            best = clique
    return best


class _Interrupted(Exception):
    pass


def max_clique(
    graph: CompatibilityGraph,
    time_budget: float | None = None,
    target: int | None = None,
    symmetry_reduction: bool = False,
) -> SearchOutcome:
    """Deterministic branch-and-bound maximum clique.

    With no budget and no target the result is a proven maximum.  A
    target stops the search as soon as a clique of that size is known
    (proven_optimal stays False unless the search finished anyway); an
    expired time budget returns the best clique found so far.

    symmetry_reduction explores, at the root, only the first candidate of
    each class-size shape: any system can be relabeled so that one of its
    partitions becomes that representative.  It requires the graph's full
    candidate set and is off by default.
    """
    t0 = time.perf_counter()
    num = graph.num_vertices
    adj = graph.adj
    if num == 0:
        return _outcome(graph, 0, (), True, 0, t0, 0)
    full = (1 << num) - 1
    root_bound = _count_colors(full, adj)

    best_mask = _greedy_clique(adj, num)
    state = {"best": best_mask.bit_count(), "mask": best_mask, "nodes": 0, "interrupted": False}
    nadj = [~a for a in adj]
    deadline = t0 + time_budget if time_budget is not None else None

    def check_stop() -> None:
        if target is not None and state["best"] >= target:
            raise _Interrupted
        if deadline is not None and state["nodes"] % 2048 == 0 and time.perf_counter() > deadline:
            raise _Interrupted

    def expand(size: int, clique: int, P: int) -> None:
        state["nodes"] += 1
        check_stop()
        threshold = state["best"] - size
        order: list[int] = []
        colors: list[int] = []
        color = 0
        W = P
        while W:
            color += 1
            Q = W
            cls = 0
            if color > threshold:
                while Q:
                    lsb = Q & -Q
                    v = lsb.bit_length() - 1
                    cls |= lsb
                    order.append(v)
                    colors.append(color)
                    Q &= nadj[v]
                    Q ^= lsb
            else:
                while Q:
                    lsb = Q & -Q
                    v = lsb.bit_length() - 1
                    cls |= lsb
                    Q &= nadj[v]
                    Q ^= lsb
            W &= ~cls
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            bit = 1 << v
            if not (P & bit):
                continue
            if size + colors[i] <= state["best"]:
                return
            extended = clique | bit
            if size + 1 > state["best"]:
                state["best"] = size + 1
                state["mask"] = extended
                check_stop()
            P2 = P & adj[v]
            if P2:
                expand(size + 1, extended, P2)
            P &= ~bit

    try:
        if target is not None and state["best"] >= target:
            raise _Interrupted
        if symmetry_reduction:
            if graph.candidates is None:
                raise ValueError("symmetry reduction needs the graph's candidate set")
            seen_shapes = set()
            for v, p in enumerate(graph.candidates.partitions):
                shape = p.sizes
                if shape in seen_shapes:
                    continue
                seen_shapes.add(shape)
                if 1 > state["best"]:
                    state["best"], state["mask"] = 1, 1 << v
                P = adj[v]
                if P.bit_count() + 1 > state["best"]:
                    expand(1, 1 << v, P)
        else:
            for v in range(num):
                later = (full >> (v + 1)) << (v + 1)
                P = adj[v] & later
                if P.bit_count() + 1 > state["best"]:
                    expand(1, 1 << v, P)
        proven = True
    except _Interrupted:
        proven = False

    vertices = tuple(i for i in range(num) if state["mask"] >> i & 1)
    return _outcome(graph, state["best"], vertices, proven, state["nodes"], t0, root_bound)


def _outcome(
    graph: CompatibilityGraph,
    size: int,
    vertices: tuple[int, ...],
    proven: bool,
    nodes: int,
    t0: float,
    root_bound: int,
) -> SearchOutcome:
    best = None
    if graph.candidates is not None:
        cand = graph.candidates
        best = PartitionSystem(
            cand.n,
            cand.k,
            [cand.partitions[v] for v in vertices],
            name=f"search({cand.n},{cand.k})",
        )
    return SearchOutcome(
        best=best,
        vertices=vertices,
        size=size,
        proven_optimal=proven,
        nodes_explored=nodes,
        elapsed=time.perf_counter() - t0,
        root_bound=root_bound,
    )


def tiny_oracle(graph: CompatibilityGraph) -> int:
    """Maximum clique size by plain exhaustive expansion (no coloring bound).

    Independent cross-check for max_clique on small graphs.
    """
    if graph.num_vertices > 2000:
        raise ValueError("tiny_oracle supports at most 2000 vertices")
    adj = graph.adj
    best = 0

    def expand(size: int, P: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while P:
            if size + P.bit_count() <= best:
                return
            lsb = P & -P
            v = lsb.bit_length() - 1
            P ^= lsb
            expand(size + 1, P & adj[v])

    expand(0, (1 << graph.num_vertices) - 1)
    return best


def solve_sp(
    n: int,
    k: int,
    min_class_size: int = 2,
    time_budget: float | None = None,
    target: int | None = None,
    symmetry_reduction: bool = False,
) -> SearchOutcome:
    """Enumerate candidates, build the graph, run max_clique, verify the witness."""
    candidates = enumerate_partitions(n, k, min_class_size)
    graph = build_graph(candidates)
    outcome = max_clique(
        graph, time_budget=time_budget, target=target, symmetry_reduction=symmetry_reduction
    )
    assert outcome.best is not None
    report = verify_sperner(outcome.best)
    if not report.valid:
        raise RuntimeError("internal error: search witness failed verification")
    return outcome
