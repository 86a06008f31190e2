"""Exact lower/upper bounds for SP(n, k), with provenance.

SP(n, k) is the largest number of partitions in a Sperner k-partition
system on an n-set.  Everything here is exact integer arithmetic; the
single floor in counting_upper_bound is the only rounding anywhere.

Conventions beyond the classical results: SP(n, k) = 0 when n < k (no
k-partition exists) and SP(n, k) = 1 for k <= n < 2k (every k-partition
then has a singleton class, and a singleton is comparable with whichever
class of another partition contains its element).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "SpParams",
    "BoundResult",
    "counting_upper_bound",
    "known_exact",
    "best_upper",
    "best_lower",
    "sp_bounds",
]

# provenance: ((rule-name, human-readable detail), ...)
Provenance = tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class SpParams:
    """n = ell*k + r with 0 <= r < k."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")

    @property
    def ell(self) -> int:
        return self.n // self.k

    @property
    def r(self) -> int:
        return self.n - self.ell * self.k


@dataclass(frozen=True)
class BoundResult:
    n: int
    k: int
    lower: int
    upper: int
    lower_provenance: Provenance
    upper_provenance: Provenance

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def counting_upper_bound(n: int, k: int) -> int:
    """floor( C(n, ell) * (n-ell) / ((k-r)*(n-ell) + r*(ell+1)) ), exact.

    Counting bound over the classes of size at most ell; when r = 0 it
    collapses to the exact uniform value C(n-1, ell-1).
    """
    p = SpParams(n, k)
    if n < k:
        raise ValueError("no k-partition of an n-set exists when n < k")
    ell, r = p.ell, p.r
    if r == 0:
        # the r-term vanishes (and n - ell degenerates to 0 when k = 1)
        return comb(n, ell) // k
    numerator = comb(n, ell) * (n - ell)
    denominator = (k - r) * (n - ell) + r * (ell + 1)
    return numerator // denominator


def known_exact(n: int, k: int) -> tuple[int, str] | None:
    """Exact value of SP(n, k) when one is known, with a citation string."""
    p = SpParams(n, k)
    candidates: list[tuple[int, str]] = []
    if n < k:
        candidates.append((0, "no k-partition of an n-set exists when n < k"))
    elif n < 2 * k:
        candidates.append((1, "a singleton class limits the system to one partition"))
    else:
        if p.r == 0:
            candidates.append(
                (comb(n - 1, p.ell - 1), "exact value when k divides n (uniform classes)")
            )
        if k == 2 and n % 2 == 1:
            candidates.append(
                (comb(n - 1, p.ell - 1), "exact value for 2-partition systems on odd n")
            )
        if n == 2 * k + 1 and k % 2 == 0:
            candidates.append(
                (2 * k, "rotational construction meets the 2k cap for n = 2k+1, k even")
            )
        if (n, k) == (7, 3):
            candidates.append((5, "known exact value SP(7,3) = 5"))
        if (n, k) == (10, 4):
            candidates.append((10, "known exact value SP(10,4) = 10 (computer search)"))
    if not candidates:
        return None
    values = {v for v, _ in candidates}
    if len(values) != 1:
        raise RuntimeError(f"internal error: conflicting exact values for ({n},{k}): {candidates}")
    return candidates[0]


def best_upper(n: int, k: int) -> tuple[int, Provenance]:
    """Minimum of all applicable upper bounds; provenance lists every rule attaining it."""
    SpParams(n, k)
    options: list[tuple[int, str, str]] = []
    ke = known_exact(n, k)
    if ke is not None:
        options.append((ke[0], "known-exact", ke[1]))
    if n >= k:
        options.append(
            (
                counting_upper_bound(n, k),
                "counting-bound",
                "floor of C(n,ell)*(n-ell) / ((k-r)*(n-ell) + r*(ell+1))",
            )
        )
    if n == 2 * k + 1:
        options.append((2 * k, "cap-2k1", "at most 2k partitions on a (2k+1)-set"))
    if n == 2 * k + 2 and k >= 3:
        options.append((2 * k + 3, "cap-2k2", "at most 2k+3 partitions on a (2k+2)-set"))
    value = min(v for v, _, _ in options)
    provenance = tuple((rule, detail) for v, rule, detail in options if v == value)
    return value, provenance


# (n, k) -> (bundled system, partitions) where the bundled witness beats
# every construction formula
_FIXTURE_LOWER = {
    (8, 3): ("fig-8-3", 8),
    (9, 4): ("fig-9-4", 8),
    (10, 4): ("fig-10-4", 10),
}


def best_lower(n: int, k: int) -> tuple[int, Provenance]:
    """Dynamic program over n' = k..n combining every lower-bound rule.

    Rules: known exact values; rotational-construction sizes; bundled
    witnesses; monotone one-element extension from n-1; the Latin-square
    lift k*SP(n-k, k).  The provenance is the derivation chain from the
    base fact to n (consecutive extension steps are merged).
    """
    SpParams(n, k)
    if n < k:
        ke = known_exact(n, k)
        assert ke is not None
        return 0, (("known-exact", ke[1]),)

    # value, preference, rule, detail, predecessor n'
    memo: dict[int, tuple[int, str, str, int | None]] = {}
    for n2 in range(k, n + 1):
        options: list[tuple[int, int, str, str, int | None]] = []
        ke = known_exact(n2, k)
        if ke is not None:
            options.append((ke[0], 0, "known-exact", f"SP({n2},{k}) = {ke[0]}: {ke[1]}", None))
        if (n2, k) in _FIXTURE_LOWER:
            fname, size = _FIXTURE_LOWER[(n2, k)]
            options.append((size, 1, "fixture", f"bundled system {fname} has {size} partitions", None))
        if n2 == 2 * k + 1 and k % 2 == 0 and k >= 2:
            options.append(
                (2 * k, 2, "rotational-2k1", f"rotational construction: 2k = {2 * k} partitions", None)
            )
        if n2 == 2 * k + 2 and k >= 3:
            options.append(
                (2 * k + 1, 3, "rotational-2k2", f"rotational construction: 2k+1 = {2 * k + 1} partitions", None)
            )
        if n2 == 3 * k - 1 and k >= 4:
            options.append(
                (3 * k - 1, 4, "rotational-3k1", f"rotational construction: 3k-1 = {3 * k - 1} partitions", None)
            )
        if n2 - k >= k:
            sub = memo[n2 - k][0]
            options.append(
                (k * sub, 5, "latin-lift", f"SP({n2},{k}) >= {k} * SP({n2 - k},{k}) = {k * sub}", n2 - k)
            )
        if n2 - 1 >= k:
            sub = memo[n2 - 1][0]
            options.append(
                (sub, 6, "extend", f"SP({n2},{k}) >= SP({n2 - 1},{k}) = {sub}", n2 - 1)
            )
        value, _, rule, detail, prev = max(options, key=lambda o: (o[0], -o[1]))
        memo[n2] = (value, rule, detail, prev)

    # walk the chain back to the base fact, merging consecutive extends
    raw: list[tuple[str, str, int]] = []
    at: int | None = n
    while at is not None:
        _, rule, detail, prev = memo[at]
        raw.append((rule, detail, at))
        at = prev
    raw.reverse()
    chain: list[tuple[str, str]] = []
    i = 0
    while i < len(raw):
        rule, detail, n2 = raw[i]
        if rule == "extend":
            j = i
            while j + 1 < len(raw) and raw[j + 1][0] == "extend":
                j += 1
            top = raw[j][2]
            value = memo[top][0]
            chain.append(
                ("extend", f"SP({top},{k}) >= SP({raw[i][2] - 1},{k}) = {value} by adding elements")
            )
            i = j + 1
        else:
            chain.append((rule, detail))
            i += 1
    return memo[n][0], tuple(chain)


def sp_bounds(n: int, k: int) -> BoundResult:
    """Combined best-known bounds; lower <= upper is enforced."""
    lower, lower_prov = best_lower(n, k)
    upper, upper_prov = best_upper(n, k)
    if lower > upper:
        raise RuntimeError(
            f"internal error: lower bound {lower} exceeds upper bound {upper} for ({n},{k})"
        )
    return BoundResult(n, k, lower, upper, lower_prov, upper_prov)
