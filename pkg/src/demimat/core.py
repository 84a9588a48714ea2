"""Ground sets, rank tables, simplicial complexes, and constructions.

A subset of the ground set {1, .., n} is a plain int bitmask with element i
on bit i-1; the empty set is 0 and the full set is 2^n - 1.  Rank tables are
indexed by mask value, so ``ranks[mask]`` is the rank of that subset.

Certified kinds form a chain: every table is a combinatroid (only the
normalization rank(empty) = 0 is required); adding the unit-step monotone
axiom gives a demimatroid; adding submodularity gives a matroid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import KindError, MalformedInputError, SizeCapError

# Caps keep the 2^n tables and the Hochster sweeps desk-sized; assign new
# values to override.
GROUND_SET_CAP = 20
HOMOLOGY_CAP = 16

COMBINATROID = "combinatroid"
DEMIMATROID = "demimatroid"
MATROID = "matroid"

AXIOM_UNIT_STEP = "R1"
AXIOM_SUBMODULAR = "R2"


# -- subset masks -------------------------------------------------------------


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int], n: int) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise MalformedInputError(f"element {e} outside ground set 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _check_cap(n: int) -> None:
    if n < 0:
        raise MalformedInputError("ground-set size must be nonnegative")
    if n > GROUND_SET_CAP:
        raise SizeCapError(
            f"ground set of size {n} exceeds cap {GROUND_SET_CAP}"
            " (raise demimat.core.GROUND_SET_CAP to override)"
        )


# -- rank tables and validation -------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    witnesses: tuple[int, ...]  # subset masks exhibiting the failure


@dataclass(frozen=True)
class ValidationReport:
    kind: str
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _classify(n: int, ranks: Sequence[int]) -> ValidationReport:
    violations: list[Violation] = []
    full = full_mask(n)

    unit_step = None
    for mask in range(full + 1):
        rest = full & ~mask
        for bit in bits_of(rest):
            step = ranks[mask | bit] - ranks[mask]
            if step < 0 or step > 1:
                unit_step = Violation(AXIOM_UNIT_STEP, (mask, mask | bit))
                break
        if unit_step:
            break
    if unit_step:
        violations.append(unit_step)

    submodular = None
    for mask in range(full + 1):
        rest = elements_of(full & ~mask)
        for a, b in combinations(rest, 2):
            xa = mask | (1 << (a - 1))
            xb = mask | (1 << (b - 1))
            if ranks[xa | xb] + ranks[mask] > ranks[xa] + ranks[xb]:
                submodular = Violation(AXIOM_SUBMODULAR, (xa | xb, mask))
                break
        if submodular:
            break
    if submodular:
        violations.append(submodular)

    if unit_step:
        kind = COMBINATROID
    elif submodular:
        kind = DEMIMATROID
    else:
        kind = MATROID
    return ValidationReport(kind, tuple(violations))


@dataclass(frozen=True)
class RankTable:
    """A combinatroid as an explicit table over all 2^n subsets."""

    n: int
    ranks: tuple[int, ...]
    kind: str

    @classmethod
    def build(cls, n: int, ranks: Sequence[int]) -> "RankTable":
        _check_cap(n)
        values = tuple(int(r) for r in ranks)
        if len(values) != 1 << n:
            raise MalformedInputError(
                f"rank table needs 2^{n} = {1 << n} entries, got {len(values)}"
            )
        if values[0] != 0:
            raise MalformedInputError("rank of the empty set must be 0")
        report = _classify(n, values)
        return cls(n, values, report.kind)

    def rho(self, mask: int) -> int:
        return self.ranks[mask]

    def nullity(self, mask: int) -> int:
        return popcount(mask) - self.ranks[mask]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def rank(self) -> int:
        return self.ranks[-1]

    @property
    def total_nullity(self) -> int:
        return self.n - self.rank

    @property
    def is_demimatroid(self) -> bool:
        return self.kind in (DEMIMATROID, MATROID)

    def require_demimatroid(self, operation: str) -> None:
        if not self.is_demimatroid:
            raise KindError(f"{operation} needs a demimatroid, table certifies {self.kind}")


def validate(table: RankTable) -> ValidationReport:
    """Re-derive the certified kind with a first witness per violated axiom."""
    return _classify(table.n, table.ranks)


def validate_raw(n: int, ranks: Sequence[int]) -> ValidationReport:
    values = tuple(int(r) for r in ranks)
    if len(values) != 1 << n:
        raise MalformedInputError(
            f"rank table needs 2^{n} = {1 << n} entries, got {len(values)}"
        )
    if values[0] != 0:
        raise MalformedInputError("rank of the empty set must be 0")
    return _classify(n, values)


# -- simplicial complexes --------------------------------------------------------


@dataclass(frozen=True)
class Complex:
    """A simplicial complex on vertex set {1..n}, stored by facets.

    ``facets`` is a sorted tuple of pairwise inclusion-incomparable masks.
    The void complex (no faces at all) is ``facets == ()`` and is distinct
    from the complex whose only face is the empty set (``facets == (0,)``).
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def build(cls, n: int, faces: Iterable[int]) -> "Complex":
        _check_cap(n)
        full = full_mask(n)
        pool = sorted(set(faces), key=popcount, reverse=True)
        maximal: list[int] = []
        for f in pool:
            if f & ~full:
                raise MalformedInputError(f"face mask {f:#x} outside ground set 1..{n}")
            if not any(f & ~g == 0 for g in maximal):
                maximal.append(f)
        return cls(n, tuple(sorted(maximal)))

    @classmethod
    def from_facet_lists(cls, n: int, facets: Iterable[Iterable[int]]) -> "Complex":
        return cls.build(n, (mask_of(f, n) for f in facets))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def __contains__(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    @property
    def dim(self) -> int:
        """Dimension; the {empty} complex has dimension -1.  Void is an error."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def faces(self) -> Iterator[int]:
        """All face masks, deduplicated, ascending by mask value."""
        seen: set[int] = set()
        for f in self.facets:
            for s in submasks(f):
                seen.add(s)
        return iter(sorted(seen))

    def face_counts(self) -> list[int]:
        """Number of faces of each cardinality, index = cardinality."""
        if self.is_void:
            return []
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[popcount(f)] += 1
        return counts

    def restrict(self, sigma: int) -> "Complex":
        """Restriction to the vertices in ``sigma`` (same ambient n)."""
        if self.is_void:
            return self
        return Complex.build(self.n, (f & sigma for f in self.facets))


# -- constructions ---------------------------------------------------------------


def uniform(n: int, k: int) -> RankTable:
    """rho(X) = min(|X|, k); certifies as a matroid."""
    if not 0 <= k <= n:
        raise MalformedInputError(f"uniform needs 0 <= k <= n, got k={k}, n={n}")
    _check_cap(n)
    return RankTable.build(n, [min(popcount(m), k) for m in range(1 << n)])


def from_matroid_bases(n: int, bases: Iterable) -> RankTable:
    """Rank table from a family of claimed bases: rho(X) = max |X & B|.

    The basis-exchange axiom is not verified here; validation downgrades the
    kind if the family is not a legitimate basis family.
    """
    masks = [b if isinstance(b, int) else mask_of(b, n) for b in bases]
    if not masks:
        raise MalformedInputError("need at least one basis")
    _check_cap(n)
    ranks = [max(popcount(m & b) for b in masks) for m in range(1 << n)]
    return RankTable.build(n, ranks)


def complex_to_demimatroid(cx: Complex) -> RankTable:
    """rho(X) = size of the largest face contained in X."""
    if cx.is_void:
        raise MalformedInputError("the void complex has no associated demimatroid")
    size = 1 << cx.n
    best = [0] * size
    for mask in range(1, size):
        b = max(best[mask & ~bit] for bit in bits_of(mask))
        if b == popcount(mask) - 1 and mask in cx:
            b += 1
        best[mask] = b
    return RankTable.build(cx.n, best)


def independence_complex(table: RankTable) -> Complex:
    """Faces are the independent sets {X : rho(X) = |X|}."""
    table.require_demimatroid("independence complex")
    faces = [m for m in range(1 << table.n) if table.ranks[m] == popcount(m)]
    return Complex.build(table.n, faces)


def sharp_demimatroid(cx: Complex) -> RankTable:
    """rho(X) = |X| for faces, |X| - 1 for non-faces."""
    if cx.is_void:
        raise MalformedInputError("the void complex has no associated demimatroid")
    ranks = [
        popcount(m) if m in cx else popcount(m) - 1 for m in range(1 << cx.n)
    ]
    return RankTable.build(cx.n, ranks)


def level_complex(table: RankTable, r: int) -> Complex:
    """The complex of subsets of rank at most r."""
    table.require_demimatroid("level complex")
    if r < 0:
        raise MalformedInputError("level must be nonnegative")
    faces = [m for m in range(1 << table.n) if table.ranks[m] <= r]
    return Complex.build(table.n, faces)


def graph_demimatroid(n: int, edges: Iterable[tuple[int, int]]) -> RankTable:
    """rho = 0 on the empty set, 1 on independent vertex sets, 2 otherwise.

    The defining trichotomy assumes a graph with no isolated vertices; it is
    applied verbatim regardless, so isolated vertices simply stay independent.
    """
    _check_cap(n)
    edge_masks = []
    for a, b in edges:
        if a == b:
            raise MalformedInputError(f"self-loop at vertex {a}")
        edge_masks.append(mask_of((a, b), n))
    ranks = [0] * (1 << n)
    for m in range(1, 1 << n):
        ranks[m] = 2 if any(e & ~m == 0 for e in edge_masks) else 1
    return RankTable.build(n, ranks)


def from_wei_sequence(n: int, d: Sequence[int]) -> RankTable:
    """Demimatroid with the prescribed strictly increasing Wei numbers.

    rho(X) counts how many of the prescribed sizes are <= |X|, which realizes
    exactly the requested hierarchy.
    """
    _check_cap(n)
    ds = list(d)
    if any(not 1 <= v <= n for v in ds) or any(a >= b for a, b in zip(ds, ds[1:])):
        raise MalformedInputError(
            f"need a strictly increasing sequence within 1..{n}, got {ds}"
        )
    ranks = [sum(1 for v in ds if v <= popcount(m)) for m in range(1 << n)]
    return RankTable.build(n, ranks)


# -- Galois connection check -------------------------------------------------------


@dataclass(frozen=True)
class GaloisReport:
    items: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.items)

    def as_dict(self) -> dict[str, bool]:
        return dict(self.items)


def galois_check(cx: Complex, table: RankTable) -> GaloisReport:
    """Itemized checks of the complex/demimatroid adjunction on shared n."""
    if cx.n != table.n:
        raise MalformedInputError("complex and table must share the ground set")
    table.require_demimatroid("galois check")
    items: list[tuple[str, bool]] = []

    up = complex_to_demimatroid(cx) if not cx.is_void else None
    if up is None:
        items.append(("up_down_identity", False))
    else:
        items.append(("up_down_identity", independence_complex(up) == cx))

    down_up = complex_to_demimatroid(independence_complex(table))
    items.append(
        ("down_up_below", all(a <= b for a, b in zip(down_up.ranks, table.ranks)))
    )

    # Monotone samples: single-facet subcomplexes must map below the whole.
    up_monotone = True
    if up is not None:
        for f in cx.facets:
            sub = Complex.build(cx.n, [f])
            sub_up = complex_to_demimatroid(sub)
            if not all(a <= b for a, b in zip(sub_up.ranks, up.ranks)):
                up_monotone = False
                break
    items.append(("up_monotone", up_monotone))

    # Restrictions of the independence complex must come from tables below.
    ind = independence_complex(table)
    capped = RankTable.build(
        table.n, [min(r, max(table.rank - 1, 0)) for r in table.ranks]
    )
    ind_capped = independence_complex(capped)
    down_monotone = all(f in ind for f in ind_capped.facets)
    items.append(("down_monotone", down_monotone))

    return GaloisReport(tuple(items))


# -- random generation --------------------------------------------------------------


def random_demimatroid(n: int, rng: random.Random) -> RankTable:
    """Rejection-free uniform-step sampler over valid demimatroid tables.

    Ranks are assigned in ascending mask order (every proper subset precedes
    its supersets); the feasible interval
    [max rho(X\\x), min rho(X\\x) + 1] is never empty because removing two
    different elements changes the rank by at most one in each step.
    """
    _check_cap(n)
    ranks = [0] * (1 << n)
    for mask in range(1, 1 << n):
        lo = 0
        hi = popcount(mask)
        for bit in bits_of(mask):
            r = ranks[mask ^ bit]
            lo = max(lo, r)
            hi = min(hi, r + 1)
        ranks[mask] = rng.randint(lo, hi)
    return RankTable.build(n, ranks)


def random_subset(n: int, rng: random.Random) -> int:
    return rng.randrange(1 << n)
