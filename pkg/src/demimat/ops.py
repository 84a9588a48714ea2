"""Duality operators, minors, the demimatroid lattice, and elongations.

The identity, dual, nullity and supplement operators form a Klein four-group
acting on tables over a fixed ground set; any two of the non-identity
operators compose to the third.
"""

from __future__ import annotations

from .core import RankTable, popcount
from .errors import InvariantViolationError, MalformedInputError

IDENTITY = "id"
DUAL = "dual"
NULLITY = "nullity"
SUPPLEMENT = "supplement"
OPERATORS = (IDENTITY, DUAL, NULLITY, SUPPLEMENT)

# Klein four-group composition table, symmetric.
GROUP_TABLE = {
    (IDENTITY, IDENTITY): IDENTITY,
    (IDENTITY, DUAL): DUAL,
    (IDENTITY, NULLITY): NULLITY,
    (IDENTITY, SUPPLEMENT): SUPPLEMENT,
    (DUAL, DUAL): IDENTITY,
    (DUAL, NULLITY): SUPPLEMENT,
    (DUAL, SUPPLEMENT): NULLITY,
    (NULLITY, NULLITY): IDENTITY,
    (NULLITY, SUPPLEMENT): DUAL,
    (SUPPLEMENT, SUPPLEMENT): IDENTITY,
}
for (_a, _b), _c in list(GROUP_TABLE.items()):
    GROUP_TABLE[(_b, _a)] = _c


def dual(table: RankTable) -> RankTable:
    """rho*(X) = |X| + rho(E\\X) - rho(E)."""
    full = table.full
    k = table.rank
    ranks = [popcount(m) + table.ranks[full & ~m] - k for m in range(full + 1)]
    return RankTable.build(table.n, ranks)


def nullity_operator(table: RankTable) -> RankTable:
    """rho°(X) = |X| - rho(X)."""
    ranks = [popcount(m) - table.ranks[m] for m in range(table.full + 1)]
    return RankTable.build(table.n, ranks)


def supplement(table: RankTable) -> RankTable:
    """rho&(X) = rho(E) - rho(E\\X)."""
    full = table.full
    k = table.rank
    ranks = [k - table.ranks[full & ~m] for m in range(full + 1)]
    return RankTable.build(table.n, ranks)


_APPLY = {
    IDENTITY: lambda t: t,
    DUAL: dual,
    NULLITY: nullity_operator,
    SUPPLEMENT: supplement,
}


def apply_operator(tag: str, table: RankTable) -> RankTable:
    if tag not in _APPLY:
        raise MalformedInputError(f"unknown operator {tag!r}")
    return _APPLY[tag](table)


def compose_check(a: str, b: str, table: RankTable) -> str:
    """Apply ``a`` then ``b`` and identify the composite in the group table.

    The composite table is compared entry-for-entry against the table-entry
    operator applied directly; a mismatch would mean the group law failed and
    raises (it should be unreachable).
    """
    if a not in OPERATORS or b not in OPERATORS:
        raise MalformedInputError(f"unknown operator pair ({a!r}, {b!r})")
    expected = GROUP_TABLE[(a, b)]
    composed = apply_operator(b, apply_operator(a, table))
    direct = apply_operator(expected, table)
    if composed.ranks != direct.ranks:
        raise InvariantViolationError(
            f"composite {a};{b} does not match {expected} on this table"
        )
    return expected


# -- minors ----------------------------------------------------------------


def surviving_labels(n: int, removed: int) -> tuple[int, ...]:
    """Original labels kept after removing ``removed``, in their new order."""
    return tuple(e for e in range(1, n + 1) if not removed & (1 << (e - 1)))


def _scatter(sub: int, kept_bits: tuple[int, ...]) -> int:
    mask = 0
    i = 0
    while sub:
        if sub & 1:
            mask |= kept_bits[i]
        sub >>= 1
        i += 1
    return mask


def delete(table: RankTable, removed: int) -> RankTable:
    """Restriction of the rank function to E \\ removed, indices compacted.

    The order-preserving relabeling is recoverable via surviving_labels.
    """
    if removed & ~table.full:
        raise MalformedInputError("deleted set outside the ground set")
    kept = surviving_labels(table.n, removed)
    kept_bits = tuple(1 << (e - 1) for e in kept)
    m = len(kept)
    ranks = [table.ranks[_scatter(sub, kept_bits)] for sub in range(1 << m)]
    return RankTable.build(m, ranks)


def contract(table: RankTable, removed: int) -> RankTable:
    """Contraction: rho_{M/A}(X) = rho(X | A) - rho(A), indices compacted."""
    if removed & ~table.full:
        raise MalformedInputError("contracted set outside the ground set")
    kept = surviving_labels(table.n, removed)
    kept_bits = tuple(1 << (e - 1) for e in kept)
    m = len(kept)
    base = table.ranks[removed]
    ranks = [
        table.ranks[_scatter(sub, kept_bits) | removed] - base for sub in range(1 << m)
    ]
    return RankTable.build(m, ranks)


# -- lattice ----------------------------------------------------------------


def join(a: RankTable, b: RankTable) -> RankTable:
    """Pointwise maximum; demimatroids are closed under join."""
    if a.n != b.n:
        raise MalformedInputError("join needs tables on the same ground set")
    return RankTable.build(a.n, [max(x, y) for x, y in zip(a.ranks, b.ranks)])


def meet(a: RankTable, b: RankTable) -> RankTable:
    """Pointwise minimum; demimatroids are closed under meet."""
    if a.n != b.n:
        raise MalformedInputError("meet needs tables on the same ground set")
    return RankTable.build(a.n, [min(x, y) for x, y in zip(a.ranks, b.ranks)])


def lattice_bottom(n: int) -> RankTable:
    return RankTable.build(n, [0] * (1 << n))


def lattice_top(n: int) -> RankTable:
    return RankTable.build(n, [popcount(m) for m in range(1 << n)])


# -- elongations --------------------------------------------------------------


def elongate(table: RankTable, i: int) -> RankTable:
    """i-th elongation: rank raised by i, capped at cardinality."""
    table.require_demimatroid("elongation")
    eta = table.total_nullity
    if not 0 <= i <= eta:
        raise MalformedInputError(f"elongation index must be in 0..{eta}, got {i}")
    ranks = [
        min(popcount(m), table.ranks[m] + i) for m in range(table.full + 1)
    ]
    return RankTable.build(table.n, ranks)


def elongation_nullity(table: RankTable, i: int, mask: int) -> int:
    """Nullity of the i-th elongation at ``mask``: max(0, eta(mask) - i)."""
    return max(0, table.nullity(mask) - i)
