"""Prime-field linear algebra, parity matroids, and code-side oracles.

Only prime fields are supported; the q of the generalized enumerators is a
formal variable, so no extension-field arithmetic is ever needed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from . import ops, weights
from ._linalg import rank_mod_p, rref_mod_p
from .core import RankTable, popcount
from .errors import MalformedInputError, SizeCapError

SUBSPACE_ENUM_CAP = 1 << 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeMatrix:
    """A matrix over F_p with entries reduced mod p."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, p: int, rows: Iterable[Sequence[int]]) -> "PrimeMatrix":
        if not _is_prime(p):
            raise MalformedInputError(f"{p} is not prime")
        reduced = tuple(tuple(int(v) % p for v in row) for row in rows)
        if reduced and any(len(r) != len(reduced[0]) for r in reduced):
            raise MalformedInputError("rows must have equal length")
        return cls(p, reduced)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def columns(self, mask: int) -> list[list[int]]:
        idx = [i for i in range(self.n_cols) if mask & (1 << i)]
        return [[row[i] for i in idx] for row in self.rows]

    def rank(self) -> int:
        return rank_mod_p(self.rows, self.p)


def parity_matroid(matrix: PrimeMatrix) -> RankTable:
    """rho(X) = rank of the columns of the check matrix indexed by X."""
    n = matrix.n_cols
    ranks = [rank_mod_p(matrix.columns(m), matrix.p) for m in range(1 << n)]
    return RankTable.build(n, ranks)


def nullspace_basis(matrix: PrimeMatrix) -> list[list[int]]:
    """A basis of the right null space over F_p (rows of a generator matrix)."""
    p = matrix.p
    n = matrix.n_cols
    rref, pivots = rref_mod_p(matrix.rows, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-rref[r][f]) % p
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class LinearCodeView:
    """An [n, k] code over F_p presented by a generator matrix."""

    p: int
    n: int
    k: int
    generator: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parity(cls, matrix: PrimeMatrix) -> "LinearCodeView":
        gen = nullspace_basis(matrix)
        return cls(
            matrix.p,
            matrix.n_cols,
            matrix.n_cols - matrix.rank(),
            tuple(tuple(row) for row in gen),
        )


def _rref_representatives(k: int, r: int, p: int):
    """All r x k reduced-row-echelon matrices of rank r over F_p.

    Each r-dimensional subspace of F_p^k has exactly one such basis, so the
    enumeration is duplicate-free.
    """
    for pivots in combinations(range(k), r):
        pivot_set = set(pivots)
        free_cells = [
            (i, j)
            for i in range(r)
            for j in range(pivots[i] + 1, k)
            if j not in pivot_set
        ]
        for values in product(range(p), repeat=len(free_cells)):
            mat = [[0] * k for _ in range(r)]
            for i, col in enumerate(pivots):
                mat[i][col] = 1
            for (i, j), v in zip(free_cells, values):
                mat[i][j] = v
            yield mat


def code_ghw_bruteforce(code: LinearCodeView, r: int) -> int:
    """r-th generalized Hamming weight by enumerating all r-dim subspaces.

    The support of a subspace is the union of the supports of any basis of
    it, so each subspace costs one r x n matrix product.
    """
    if not 1 <= r <= code.k:
        raise MalformedInputError(f"need 1 <= r <= {code.k}, got {r}")
    if code.p ** code.k > SUBSPACE_ENUM_CAP:
        raise SizeCapError(
            f"p^k = {code.p ** code.k} exceeds the enumeration cap {SUBSPACE_ENUM_CAP}"
        )
    p = code.p
    best = code.n + 1
    for coeffs in _rref_representatives(code.k, r, p):
        support = 0
        for row in coeffs:
            word = [0] * code.n
            for c, gen_row in zip(row, code.generator):
                if c:
                    word = [(w + c * g) % p for w, g in zip(word, gen_row)]
            for pos, w in enumerate(word):
                if w:
                    support |= 1 << pos
        weight = popcount(support)
        if weight < best:
            best = weight
    return best


def weight_hierarchy_agreement(matrix: PrimeMatrix) -> bool:
    """The code's brute-force hierarchy matches the parity matroid's.

    The matroid side is the Wei hierarchy of the nullity table of the parity
    matroid, computed by subset scan; a dimension-0 code agrees vacuously.
    """
    code = LinearCodeView.from_parity(matrix)
    if code.k == 0:
        return True
    table = parity_matroid(matrix)
    matroid_side = weights.wei_hierarchy(ops.nullity_operator(table)).d
    for r in range(1, code.k + 1):
        if code_ghw_bruteforce(code, r) != matroid_side[r - 1]:
            return False
    return True
