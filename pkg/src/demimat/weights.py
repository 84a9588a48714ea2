"""Wei numbers, their dualities, Singleton bounds, and full/uniform tests.

Everything here is computed by exhaustive subset scan so this module can act
as the oracle layer for the polynomial routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ops
from .core import RankTable, popcount
from .errors import InvariantViolationError, MalformedInputError


@dataclass(frozen=True)
class WeiProfile:
    """Lower and upper Wei numbers of a demimatroid of rank k.

    ``d[r-1]`` is the smallest size of a subset of rank r (1 <= r <= k);
    ``d_up[r]`` is the largest size of a subset of rank r (0 <= r <= k).
    """

    k: int
    d: tuple[int, ...]
    d_up: tuple[int, ...]


def wei_hierarchy(table: RankTable) -> WeiProfile:
    table.require_demimatroid("Wei hierarchy")
    k = table.rank
    lo = [None] * (k + 1)
    hi = [None] * (k + 1)
    for mask in range(table.full + 1):
        r = table.ranks[mask]
        s = popcount(mask)
        if lo[r] is None or s < lo[r]:
            lo[r] = s
        if hi[r] is None or s > hi[r]:
            hi[r] = s
    if any(v is None for v in lo):
        raise InvariantViolationError("rank image is not the full interval 0..k")
    return WeiProfile(k, tuple(lo[1:]), tuple(hi))


def generalized_hamming_weights(table: RankTable) -> tuple[int, ...]:
    """The hierarchy min{|X| : nullity(X) = r}, r = 1 .. nullity(E).

    This is the Wei hierarchy of the nullity table; for a parity matroid it
    is the weight hierarchy of the underlying code.  Note the distinction
    from ``wei_hierarchy``, which stratifies by rank rather than nullity.
    """
    return wei_hierarchy(ops.nullity_operator(table)).d


def check_wei_duality(table: RankTable) -> bool:
    """Both Wei dualities between a table and its dual, as exact set identities.

    Lower: {d_1(M),..,d_k(M)} = {1..n} minus {n+1-d_r(M*)}.
    Upper: {d^0(M)+1,..,d^{k-1}(M)+1} = {1..n} minus {n-d^j(M*)}.
    """
    n = table.n
    mine = wei_hierarchy(table)
    theirs = wei_hierarchy(ops.dual(table))
    everything = set(range(1, n + 1))

    lower = set(mine.d) == everything - {n + 1 - v for v in theirs.d}
    upper = {v + 1 for v in mine.d_up[:-1]} == everything - {
        n - v for v in theirs.d_up[:-1]
    }
    return lower and upper


def _full_closed_form(n: int, k: int, mask_size: int) -> int:
    return 0 if mask_size <= n - k else mask_size - (n - k)


def is_full(table: RankTable) -> bool:
    """True when the first Wei number meets the Singleton bound n - k + 1.

    A trivial (rank-0) table is reported not full.  A positive answer is
    cross-checked against the closed forms a full table and its dual, nullity
    and supplement must take; a mismatch would be a bug.
    """
    table.require_demimatroid("fullness test")
    n, k = table.n, table.rank
    if k == 0:
        return False
    profile = wei_hierarchy(table)
    if profile.d[0] != n - k + 1:
        return False

    for mask in range(table.full + 1):
        s = popcount(mask)
        if table.ranks[mask] != _full_closed_form(n, k, s):
            raise InvariantViolationError("full table deviates from its closed form")
    star = ops.dual(table)
    circ = ops.nullity_operator(table)
    supp = ops.supplement(table)
    for mask in range(table.full + 1):
        s = popcount(mask)
        if star.ranks[mask] != _full_closed_form(n, n - k, s):
            raise InvariantViolationError("dual of a full table deviates from closed form")
        if circ.ranks[mask] != min(s, n - k):
            raise InvariantViolationError("nullity of a full table is not uniform")
        if supp.ranks[mask] != min(s, k):
            raise InvariantViolationError("supplement of a full table is not uniform")
    return True


def is_uniform_demimatroid(table: RankTable) -> bool:
    """Uniform means the nullity table is full."""
    return is_full(ops.nullity_operator(table))


def min_size_at_nullity(table: RankTable, r: int) -> int:
    """Smallest |X| with eta(X) = r, by full scan."""
    sizes = [
        popcount(m) for m in range(table.full + 1) if table.nullity(m) == r
    ]
    if not sizes:
        raise MalformedInputError(f"no subset has nullity {r}")
    return min(sizes)


def elongation_distance_check(table: RankTable, r: int) -> bool:
    """d_{r+1} of the nullity table equals d_1 of the r-th elongation's nullity.

    Both sides are independent full scans.
    """
    table.require_demimatroid("elongation distance check")
    eta = table.total_nullity
    if not 0 <= r < eta:
        raise MalformedInputError(f"need 0 <= r < {eta}, got {r}")
    left = min_size_at_nullity(table, r + 1)
    elongated = ops.elongate(table, r)
    right = min_size_at_nullity(elongated, 1)
    return left == right
