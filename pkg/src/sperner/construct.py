"""Witness-producing constructions for Sperner partition systems.

Every function returns a PartitionSystem that has already been checked by
verify_sperner; a verification failure is an internal error, never a
silent result.  The rotational families cover n = 2k+1 (k even),
n = 2k+2 (k >= 3) and n = 3k-1 (k >= 4); construct_k2 covers k = 2 with
odd n; latin_lift and extend_by_one grow existing systems.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .fixtures import load_fixture
from .model import Partition, PartitionSystem, verify_sperner
from .rotation import (
    INF,
    CircularLayout,
    InitialPartition,
    check_difference_property,
    develop,
    solve_initial_2k1,
)

__all__ = [
    "construct_k2",
    "construct_2k1",
    "construct_2k2",
    "construct_3k1",
    "latin_lift",
    "extend_by_one",
    "plan_construction",
    "construct_auto",
]


def _verified(system: PartitionSystem) -> PartitionSystem:
    report = verify_sperner(system)
    if not report.valid:
        first = report.violations[:3] or report.wellformed_errors[:3]
        raise RuntimeError(
            f"internal error: construction {system.name!r} produced an invalid system: {first}"
        )
    return system


def construct_k2(n: int) -> PartitionSystem:
    """All 2-partitions {A, complement} with 0 in A and |A| = (n-1)/2, for odd n.

    This is the largest Sperner 2-partition system on an odd n-set: the
    small classes all share element 0, so none fits inside a large class.
    """
    if n < 3:
        raise ValueError("construct_k2 requires n >= 3")
    if n % 2 == 0:
        raise ValueError(
            "n is even: 2 divides n, the exact value is known and no construction is provided here"
        )
    half = (n - 1) // 2
    full = (1 << n) - 1
    parts = []
    for rest in combinations(range(1, n), half - 1):
        a = 1
        for e in rest:
            a |= 1 << e
        parts.append(Partition(n, [a, full ^ a], 2))
    return _verified(PartitionSystem(n, 2, parts, name=f"construct_k2({n})"))


def construct_2k1(k: int) -> PartitionSystem:
    """2k partitions on 2k+1 elements for even k; each has one triple and k-1 pairs.

    k = 2 returns the construct_k2 optimum on 5 elements (4 partitions);
    k = 4 returns the bundled fig-9-4 system, since no initial partition
    with the difference property exists for k = 4; even k >= 6 develops a
    solved initial partition on the 2k-circle with center.
    """
    if k < 2 or k % 2:
        raise ValueError("no construction available for odd k; SP(2k+1, k) is open there")
    if k == 2:
        return construct_k2(5).with_name("construct_2k1(2)")
    if k == 4:
        return _verified(load_fixture("fig-9-4").with_name("construct_2k1(4)"))
    init = solve_initial_2k1(k)
    system = develop(init, name=f"construct_2k1({k})")
    if len(system) != 2 * k:
        raise RuntimeError("internal error: developed system has the wrong size")
    return _verified(system)


def construct_2k2(k: int) -> PartitionSystem:
    """2k+1 partitions on 2k+2 elements, k >= 3.

    Develops the initial partition with triangles {1, 2, center} and
    {k+1, k+2, k+3} plus the edges {i, 2k+4-i} for i = 3..k on a
    (2k+1)-circle with center.  The triangles realize only the distances
    1, 2 and INF while the edges realize 3..k once each.
    """
    if k < 3:
        raise ValueError("construct_2k2 requires k >= 3 (k = 2 is the two-class case)")
    layout = CircularLayout(2 * k + 1, has_center=True)
    classes = [(1, 2, INF), (k + 1, k + 2, k + 3)]
    classes += [(i, 2 * k + 4 - i) for i in range(3, k + 1)]
    init = InitialPartition(layout, classes)
    check = check_difference_property(init)
    if not check.ok:
        raise RuntimeError(f"internal error: initial partition rejected: {check.problems}")
    system = develop(init, name=f"construct_2k2({k})")
    return _verified(system)


def construct_3k1(k: int) -> PartitionSystem:
    """3k-1 partitions on 3k-1 elements, k >= 4; k-1 triples and one pair each.

    Develops, on a (3k-1)-circle without center, the edge {1, 3k-1}, the
    triangle {2, k+1, 3k-2} and the triangles {i, 2k+2-i, 3k-i} for
    i = 3..k.  For k = 5 two triangles realize the same distance multiset
    {3, 4, 7} in different circular orders; the orbit check inside
    check_difference_property confirms they never coincide.
    """
    if k == 3:
        raise ValueError("no rotational construction for k = 3; use the bundled fig-8-3 system")
    if k < 3:
        raise ValueError("construct_3k1 requires k >= 4")
    layout = CircularLayout(3 * k - 1, has_center=False)
    classes = [(1, 3 * k - 1), (2, k + 1, 3 * k - 2)]
    classes += [(i, 2 * k + 2 - i, 3 * k - i) for i in range(3, k + 1)]
    init = InitialPartition(layout, classes)
    check = check_difference_property(init)
    if not check.ok:
        raise RuntimeError(f"internal error: initial partition rejected: {check.problems}")
    system = develop(init, name=f"construct_3k1({k})")
    if len(system) != 3 * k - 1:
        raise RuntimeError("internal error: developed system has the wrong size")
    return _verified(system)


def latin_lift(base: PartitionSystem) -> PartitionSystem:
    """Multiply a system's size by k by appending k fresh elements.

    For each base partition with classes c_0..c_{k-1} in canonical order,
    emits k partitions; the i-th adds fresh element (i+j) mod k to class
    c_j.  Rows of the cyclic Latin square disagree everywhere, so classes
    from different rows never contain one another.
    """
    report = verify_sperner(base)
    if not report.valid:
        raise ValueError("base system is not Sperner")
    k = base.k
    n = base.n + k
    parts = []
    for p in base.partitions:
        for i in range(k):
            masks = [c | (1 << (base.n + (i + j) % k)) for j, c in enumerate(p.classes)]
            parts.append(Partition(n, masks, k))
    name = f"latin_lift({base.name or f'{base.n},{base.k}'})"
    return _verified(PartitionSystem(n, k, parts, name=name))


def extend_by_one(base: PartitionSystem) -> PartitionSystem:
    """Add one fresh element to the first smallest class of every partition.

    The fresh element cannot create containments: if B fits inside A
    extended by x, then B minus x already fit inside A.  Targeting the
    canonically first class of minimum size keeps the result almost
    uniform whenever possible.
    """
    report = verify_sperner(base)
    if not report.valid:
        raise ValueError("base system is not Sperner")
    n = base.n + 1
    parts = []
    for p in base.partitions:
        masks = list(p.classes)
        masks[0] |= 1 << base.n
        parts.append(Partition(n, masks, base.k))
    name = f"extend_by_one({base.name or f'{base.n},{base.k}'})"
    return _verified(PartitionSystem(n, base.k, parts, name=name))


def _trivial_system(n: int, k: int) -> PartitionSystem:
    """One partition: k-1 singletons would be wasteful, so pair up what we can."""
    if n < k:
        raise ValueError("no k-partition of an n-set exists when n < k")
    sizes = [1] * k
    for i in range(n - k):
        sizes[i % k] += 1
    classes = []
    start = 0
    for s in sizes:
        classes.append(list(range(start, start + s)))
        start += s
    part = Partition(n, classes, k)
    return _verified(PartitionSystem(n, k, [part], name=f"single({n},{k})"))


# Sizes of the bundled systems usable as construction results.
_FIXTURE_SIZES = {
    (7, 3): ("fig-7-3", 5),
    (8, 3): ("fig-8-3", 8),
    (9, 4): ("fig-9-4", 8),
    (10, 4): ("fig-10-4", 10),
    (11, 4): ("fig-11-4", 11),
    (17, 8): ("fig-17-8", 16),
}


def plan_construction(n: int, k: int) -> tuple[int, tuple]:
    """Best guaranteed system size reachable by the implemented constructions.

    Returns (size, route); a route is a tagged tuple, recursively for the
    growth rules:  ("fixture", name) | ("k2",) | ("dev-2k1",) |
    ("dev-2k2",) | ("dev-3k1",) | ("trivial",) | ("latin-lift", route) |
    ("extend", route).
    """
    if n < k or k < 1:
        raise ValueError("no k-partition of an n-set exists when n < k")
    memo: dict[int, tuple[int, tuple]] = {}
    for n2 in range(k, n + 1):
        options: list[tuple[int, int, tuple]] = []  # (size, preference, route)
        if (n2, k) in _FIXTURE_SIZES:
            fname, size = _FIXTURE_SIZES[(n2, k)]
            options.append((size, 0, ("fixture", fname)))
        if k == 2 and n2 % 2 and n2 >= 3:
            options.append((comb(n2 - 1, (n2 - 1) // 2 - 1), 1, ("k2",)))
        if n2 == 2 * k + 1 and k % 2 == 0 and k >= 2:
            options.append((2 * k, 2, ("dev-2k1",)))
        if n2 == 2 * k + 2 and k >= 3:
            options.append((2 * k + 1, 3, ("dev-2k2",)))
        if n2 == 3 * k - 1 and k >= 4:
            options.append((3 * k - 1, 4, ("dev-3k1",)))
        if n2 - k >= k:
            sub_size, sub_route = memo[n2 - k]
            options.append((k * sub_size, 5, ("latin-lift", sub_route)))
        if n2 - 1 >= k:
            sub_size, sub_route = memo[n2 - 1]
            options.append((sub_size, 6, ("extend", sub_route)))
        options.append((1, 7, ("trivial",)))
        size, _, route = max(options, key=lambda o: (o[0], -o[1]))
        memo[n2] = (size, route)
    return memo[n]


def _materialize(n: int, k: int, route: tuple) -> PartitionSystem:
    tag = route[0]
    if tag == "fixture":
        return load_fixture(route[1])
    if tag == "k2":
        return construct_k2(n)
    if tag == "dev-2k1":
        return construct_2k1(k)
    if tag == "dev-2k2":
        return construct_2k2(k)
    if tag == "dev-3k1":
        return construct_3k1(k)
    if tag == "trivial":
        return _trivial_system(n, k)
    if tag == "latin-lift":
        return latin_lift(_materialize(n - k, k, route[1]))
    if tag == "extend":
        return extend_by_one(_materialize(n - 1, k, route[1]))
    raise ValueError(f"unknown construction route {route!r}")


def construct_auto(n: int, k: int) -> PartitionSystem:
    """Build the largest system the implemented constructions guarantee for (n, k)."""
    size, route = plan_construction(n, k)
    system = _materialize(n, k, route).with_name(f"auto({n},{k})")
    if len(system) != size or system.n != n or system.k != k:
        raise RuntimeError("internal error: materialized construction does not match its plan")
    return system
