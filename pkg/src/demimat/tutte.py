"""Tutte and Whitney polynomials, characteristic polynomial, f/h-polynomials.

The corank-nullity sum is accumulated in the (x-1, y-1) basis first: the
exponent pair of a subset A is (rho(E) - rho(A), |A| - rho(A)), so each
subset costs two table lookups and the binomial expansion happens once per
distinct exponent pair.
"""

from __future__ import annotations

from math import comb

from . import core, ops
from .core import Complex, RankTable, popcount
from .errors import InvariantViolationError, MalformedInputError, RationalFunctionError
from .poly import T, X, Y, LaurentPoly, constant, monomial, poly_sum, zero


def corank_nullity_counts(table: RankTable) -> dict[tuple[int, int], int]:
    """Multiplicities of the (corank, nullity) exponent pairs over all subsets."""
    k = table.rank
    counts: dict[tuple[int, int], int] = {}
    for mask in range(table.full + 1):
        r = table.ranks[mask]
        key = (k - r, popcount(mask) - r)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _expand_basis(counts: dict[tuple[int, int], int]) -> LaurentPoly:
    if any(a < 0 or b < 0 for a, b in counts):
        raise RationalFunctionError(
            "negative corank or nullity: the Tutte sum is a genuine rational"
            " function, which is outside Laurent scope"
        )
    xm1 = X - 1
    ym1 = Y - 1
    return poly_sum(c * (xm1 ** a) * (ym1 ** b) for (a, b), c in counts.items())


def tutte(table: RankTable) -> LaurentPoly:
    return _expand_basis(corank_nullity_counts(table))


def tutte_dual_check(table: RankTable) -> bool:
    """Dualizing the table swaps the variables of the Tutte polynomial."""
    swapped = tutte(table).substitute({"x": Y, "y": X})
    return tutte(ops.dual(table)) == swapped


def tutte_recurrence(table: RankTable, p: int) -> LaurentPoly:
    """Deletion-contraction at element p:

        (x-1)^(eta*(p)) T(M\\p) + (y-1)^(1 - rho(p)) T(M/p)

    with eta*(p) = rho(E) - rho(E\\p).  Exponents outside 0..1 only happen
    for non-demimatroid tables and leave Laurent scope.
    """
    if not 1 <= p <= table.n:
        raise MalformedInputError(f"element {p} outside ground set 1..{table.n}")
    bit = 1 << (p - 1)
    co = table.rank - table.ranks[table.full & ~bit]
    nu = 1 - table.ranks[bit]
    if co < 0 or nu < 0:
        raise RationalFunctionError("recurrence exponents are negative on this table")
    left = ((X - 1) ** co) * tutte(ops.delete(table, bit))
    right = ((Y - 1) ** nu) * tutte(ops.contract(table, bit))
    return left + right


def whitney_f(table: RankTable) -> LaurentPoly:
    """Whitney generating function: sum of x^(eta*(E\\A)) y^(eta(A)).

    Negative exponents are honest Laurent monomials here, so any combinatroid
    is accepted.
    """
    return poly_sum(
        c * monomial(1, x=a, y=b) for (a, b), c in corank_nullity_counts(table).items()
    )


def characteristic(table: RankTable) -> LaurentPoly:
    """Characteristic polynomial, computed two ways and cross-checked.

    Subset sum of (-1)^|X| t^(rho(E)-rho(X)) against the Tutte evaluation
    (-1)^rho(E) T(1-t, 0).
    """
    table.require_demimatroid("characteristic polynomial")
    k = table.rank
    direct = poly_sum(
        (-1) ** popcount(m) * monomial(1, t=k - table.ranks[m])
        for m in range(table.full + 1)
    )
    via_tutte = (-1) ** k * tutte(table).substitute({"x": 1 - T, "y": 0})
    if direct != via_tutte:
        raise InvariantViolationError("characteristic polynomial routes disagree")
    return direct


def tutte_uniform_closed_form(n: int, k: int) -> LaurentPoly:
    """Closed form for the uniform matroid of rank k on n elements."""
    if not 0 <= k <= n:
        raise MalformedInputError(f"need 0 <= k <= n, got k={k}, n={n}")
    total = constant(comb(n, k))
    for i in range(k):
        total = total + comb(n, i) * (X - 1) ** (k - i)
    for i in range(k + 1, n + 1):
        total = total + comb(n, i) * (Y - 1) ** (i - k)
    return total


# -- face polynomials -----------------------------------------------------------


def f_polynomial(cx: Complex) -> LaurentPoly:
    """Face-count polynomial in t: sum of c_i t^(d+1-i), c_i faces of size i.

    The leading term t^(d+1) is the empty-face count c_0 = 1; the constant
    term counts the largest faces.
    """
    if cx.is_void:
        raise MalformedInputError("the void complex has no f-polynomial")
    counts = cx.face_counts()
    top = cx.dim + 1
    return poly_sum(c * monomial(1, t=top - i) for i, c in enumerate(counts))


def f_polynomial_via_tutte(cx: Complex) -> LaurentPoly:
    """The same polynomial as T(t+1, 1) of the associated demimatroid."""
    table = core.complex_to_demimatroid(cx)
    return tutte(table).substitute({"x": T + 1, "y": 1})


def f_polynomial_via_hamming(cx: Complex) -> LaurentPoly:
    """f from the three-variable enumerator at t=0:

        (u+1)^n u^(-eta) W(1, (u+1)^(-1), 0)

    realized by collecting W's coefficients and clearing (u+1) powers, so no
    genuine rational function ever appears.
    """
    from . import hamming  # local import; hamming depends on this module

    table = core.complex_to_demimatroid(cx)
    n = table.n
    eta = table.total_nullity
    w0 = hamming.hamming_subset_sum(table).substitute({"t": 0})
    total = zero()
    for j in range(n + 1):
        c = w0.coefficient(x=n - j, y=j)
        if not c.is_zero:
            total = total + c * (T + 1) ** (n - j)
    return total.divide_exact(monomial(1, t=eta))


def h_polynomial(cx: Complex) -> LaurentPoly:
    """h(t) = f(t-1)."""
    return f_polynomial(cx).substitute({"t": T - 1})
