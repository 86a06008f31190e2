"""Circle layouts, rotational development and the difference property.

The rotational constructions draw one initial partition as edges and
triangles on m points placed around a circle (labeled 1..m), optionally
with one extra point at the circle's center.  Rotating the circle labels
m times while the center stays fixed ("developing") turns the initial
partition into a system of m partitions.

Whether the developed system is Sperner can be decided locally from the
initial partition.  The distance between two circle points is measured
the short way around the circle; any pair involving the center gets the
distance INF.  An initial partition made of edges (size-2 classes) and
triangles (size-3 classes) has the *difference property* when

  * the edges realize pairwise distinct distances,
  * no edge distance occurs between two points of a triangle,
  * on an even circle no edge realizes the diameter m/2 (such an edge
    returns to itself after m/2 rotations and the developed system would
    repeat a class), and
  * the rotation orbits of the triangles are pairwise disjoint and of
    full length m (distance multisets alone cannot see this: two
    triangles can realize the same distances in different circular
    orders).

Developing an initial partition with the difference property always
yields a Sperner system: rotated edges are pairwise distinct and never
inside a rotated triangle, and rotated triangles never coincide.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .model import Partition, PartitionSystem

__all__ = [
    "INF",
    "CircularLayout",
    "InitialPartition",
    "DifferenceCheck",
    "difference",
    "develop",
    "check_difference_property",
    "solve_initial_2k1",
]

# Distance assigned to any pair involving the center point; also used as
# the center's own label inside initial-partition classes.  float("inf")
# sorts after every int, which keeps mixed tuples orderable.
INF = float("inf")


@dataclass(frozen=True)
class CircularLayout:
    """m circle points labeled 1..m, plus an optional center point."""

    m: int
    has_center: bool = False

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("a circular layout needs at least 3 points")

    @property
    def ground_size(self) -> int:
        return self.m + 1 if self.has_center else self.m

    def points(self) -> tuple:
        pts: tuple = tuple(range(1, self.m + 1))
        if self.has_center:
            pts += (INF,)
        return pts

    def _check_point(self, x) -> None:
        if x == INF:
            if not self.has_center:
                raise ValueError("layout has no center point")
            return
        if not (isinstance(x, int) and 1 <= x <= self.m):
            raise ValueError(f"point {x!r} is not on the circle 1..{self.m}")


def difference(layout: CircularLayout, i, j):
    """Shortest circular distance between two layout points; INF at the center."""
    if i == j:
        raise ValueError("difference of a point with itself is undefined")
    layout._check_point(i)
    layout._check_point(j)
    if i == INF or j == INF:
        return INF
    d = (i - j) % layout.m
    return min(d, layout.m - d)


class InitialPartition:
    """A partition of a circular layout's points, the seed of develop().

    Classes are given as iterables of point labels (1..m, INF for the
    center).  class_differences[c] is the sorted multiset of pairwise
    distances inside class c.
    """

    __slots__ = ("layout", "classes", "class_differences")

    def __init__(self, layout: CircularLayout, classes):
        normalized = tuple(tuple(sorted(c)) for c in classes)
        covered = sorted(x for c in normalized for x in c)
        if covered != sorted(layout.points()):
            raise ValueError("classes must cover every layout point exactly once")
        self.layout = layout
        self.classes = normalized
        self.class_differences = tuple(
            tuple(sorted(difference(layout, x, y) for x, y in combinations(c, 2)))
            for c in normalized
        )

    def to_partition(self) -> Partition:
        """Internal 0-based form: circle point x -> x-1, center -> m."""
        m = self.layout.m
        masks = []
        for c in self.classes:
            mask = 0
            for x in c:
                mask |= 1 << (m if x == INF else int(x) - 1)
            masks.append(mask)
        return Partition(self.layout.ground_size, masks)

    def __repr__(self):
        body = ", ".join("{" + ",".join(str(x) for x in c) + "}" for c in self.classes)
        return f"<InitialPartition m={self.layout.m} center={self.layout.has_center} {body}>"


def develop(init: InitialPartition, name: str | None = None) -> PartitionSystem:
    """Rotate the initial partition m times; rotation 0 is the initial partition itself."""
    m = init.layout.m
    n = init.layout.ground_size
    k = len(init.classes)
    parts = []
    for t in range(m):
        masks = []
        for c in init.classes:
            mask = 0
            for x in c:
                mask |= 1 << (m if x == INF else (int(x) - 1 + t) % m)
            masks.append(mask)
        parts.append(Partition(n, masks, k))
    return PartitionSystem(n, k, parts, name=name)


@dataclass(frozen=True)
class DifferenceCheck:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _rotated(cls: tuple, t: int, m: int) -> frozenset:
    return frozenset(x if x == INF else ((int(x) - 1 + t) % m) + 1 for x in cls)


def check_difference_property(init: InitialPartition) -> DifferenceCheck:
    """Decide whether developing the initial partition yields a Sperner system.

    Supports initial partitions whose classes have sizes 2..4; anything
    larger raises.
    """
    sizes = [len(c) for c in init.classes]
    if any(s < 2 or s >= 5 for s in sizes):
        raise ValueError("unsupported initial shape")

    m = init.layout.m
    problems = []

    edges = [(c, d[0]) for c, d in zip(init.classes, init.class_differences) if len(c) == 2]
    larges = [(c, d) for c, d in zip(init.classes, init.class_differences) if len(c) >= 3]

    counts = Counter(d for _, d in edges)
    for d, cnt in sorted(counts.items(), key=str):
        if cnt > 1:
            problems.append(f"edge difference {d} is used by {cnt} edges")

    if m % 2 == 0:
        for c, d in edges:
            if d == m // 2:
                problems.append(
                    f"edge {set(c)} realizes the diameter {m // 2} and repeats when developed"
                )

    for c, d in edges:
        for lc, ld in larges:
            if d in ld:
                problems.append(
                    f"edge difference {d} of {set(c)} also occurs inside class {set(lc)}"
                )

    # Orbit enumeration: every rotated copy of every large class must be
    # distinct from (and incomparable with) every other copy.
    seen: dict[frozenset, tuple[int, int]] = {}
    copies: list[tuple[frozenset, int, int]] = []
    for idx, (c, _) in enumerate(larges):
        for t in range(m):
            rot = _rotated(c, t, m)
            if rot in seen:
                pidx, pt = seen[rot]
                if pidx == idx:
                    problems.append(f"class {set(c)} repeats itself when developed")
                else:
                    problems.append(
                        f"classes {set(larges[pidx][0])} and {set(c)} collide when developed"
                    )
                break
            seen[rot] = (idx, t)
            copies.append((rot, idx, t))
    large_sizes = sorted({len(c) for c, _ in larges})
    if len(large_sizes) > 1:
        by_size: dict[int, set[frozenset]] = {}
        for rot, _, _ in copies:
            by_size.setdefault(len(rot), set()).add(rot)
        for rot, idx, _ in copies:
            for s in large_sizes:
                if s >= len(rot):
                    break
                for sub in combinations(sorted(rot, key=str), s):
                    if frozenset(sub) in by_size.get(s, ()):
                        problems.append(
                            f"a developed copy of {set(larges[idx][0])} contains a smaller developed class"
                        )

    return DifferenceCheck(not problems, tuple(problems))


def solve_initial_2k1(k: int) -> InitialPartition:
    """Find the initial partition for the (2k+1, k) rotational construction, k even.

    The layout is a 2k-circle plus center.  The triangle is forced to be
    {1, 1+k/2, 1+k} up to rotation: it must realize the diameter k (an
    edge realizing k would repeat when developed) and only one other
    distance, which pins the circular gaps to (k/2, k/2, k).  The k-1
    edges must then realize each distance in {1..k} minus {k/2, k}, plus
    INF, exactly once.  A deterministic backtracking search assigns the
    remaining points to edges, always branching on the distance with the
    fewest open placements (ties: INF first, then larger distance) and
    trying placements in ascending point order.

    For k = 4 the search exhausts without a solution -- no such initial
    partition exists -- and raises.
    """
    if k < 2 or k % 2:
        raise ValueError("construction requires even k")
    if k == 2:
        raise ValueError("use construct_k2 for k = 2")
    m = 2 * k
    layout = CircularLayout(m, has_center=True)
    triangle = (1, 1 + k // 2, 1 + k)
    remaining = [INF] + sorted(set(range(1, k + 1)) - {k // 2, k}, reverse=True)
    free = set(range(1, m + 1)) - set(triangle)
    chosen: dict = {}

    def placements(d) -> list[tuple[int, ...]]:
        if d == INF:
            return [(x,) for x in sorted(free)]
        out = []
        for x in range(1, m + 1):
            y = (x - 1 + d) % m + 1
            if x in free and y in free:
                out.append((x, y))
        return out

    def rank(d):
        # deterministic tie order: INF first, then larger distances
        return (0, 0) if d == INF else (1, -d)

    def place() -> bool:
        if not remaining:
            return True
        best_d = None
        best = None
        for d in sorted(remaining, key=rank):
            cand = placements(d)
            if not cand:
                return False
            if best is None or len(cand) < len(best):
                best_d, best = d, cand
        remaining.remove(best_d)
        for pts in best:
            free.difference_update(pts)
            chosen[best_d] = pts
            if place():
                return True
            del chosen[best_d]
            free.update(pts)
        remaining.append(best_d)
        return False

    if not place():
        raise ValueError(
            f"no initial partition with the difference property exists for k={k}"
        )

    classes = [triangle] + [
        (pts if d != INF else pts + (INF,))
        for d, pts in sorted(chosen.items(), key=lambda kv: rank(kv[0]))
    ]
    init = InitialPartition(layout, classes)
    check = check_difference_property(init)
    if not check.ok:
        raise RuntimeError(
            "internal error: solved initial partition fails the difference property: "
            + "; ".join(check.problems)
        )
    return init
