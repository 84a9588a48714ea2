"""The three-variable Hamming polynomial W(x,y,t) by every route, MacWilliams,
the coefficient polynomials P_j and A_j, and the generalized q-enumerators.

W is homogeneous of degree n in (x, y); the t slot doubles as the q of the
generalized enumerators, so a single variable stores both and the caller
chooses how to print it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import core, ops, tutte as tutte_mod
from .core import RankTable, popcount
from .errors import (
    InexactDivisionError,
    InvariantViolationError,
    KindError,
    MalformedInputError,
    RationalFunctionError,
    UnsupportedSubstitutionError,
)
from .poly import (
    LaurentPoly,
    T,
    X,
    Y,
    angle,
    monomial,
    one,
    poly_sum,
    q_binomial,
    zero,
)


def hamming_subset_sum(table: RankTable) -> LaurentPoly:
    """W as the direct sum of (x-y)^(n-|s|) y^|s| t^(eta(s)) over all subsets.

    Negative nullities of a general combinatroid land in negative t powers,
    which are still Laurent monomials.
    """
    n = table.n
    counts: dict[tuple[int, int], int] = {}
    for mask in range(table.full + 1):
        key = (popcount(mask), table.nullity(mask))
        counts[key] = counts.get(key, 0) + 1
    return poly_sum(
        c * ((X - Y) ** (n - s)) * monomial(1, y=s, t=e)
        for (s, e), c in counts.items()
    )


def _w_via_tutte_terms(table: RankTable, t_multiplier: int = 1) -> LaurentPoly:
    # Each (x-1,y-1)-basis Tutte term (corank a, nullity b) contributes
    # (x-y)^(eta(E)+a-b) y^(rho(E)-a+b) t^(b * multiplier); the exponent
    # bookkeeping stays in integers, so clearing the substitution
    # denominators never builds a fraction.
    eta = table.total_nullity
    k = table.rank
    total = zero()
    for (a, b), c in tutte_mod.corank_nullity_counts(table).items():
        total = total + c * ((X - Y) ** (eta + a - b)) * monomial(
            1, y=k - a + b, t=b * t_multiplier
        )
    return total


def hamming_via_tutte(table: RankTable) -> LaurentPoly:
    """W as the cleared Tutte substitution; cross-checked against the subset sum."""
    w = _w_via_tutte_terms(table)
    if w != hamming_subset_sum(table):
        raise InvariantViolationError("Tutte-route W disagrees with the subset sum")
    return w


# -- coefficient polynomials -----------------------------------------------------


def p_sigma(table: RankTable, sigma: int) -> LaurentPoly:
    """Alternating nullity sum over the subsets of sigma."""
    if sigma & ~table.full:
        raise MalformedInputError("sigma outside the ground set")
    size = popcount(sigma)
    return poly_sum(
        (-1) ** (size - popcount(g)) * monomial(1, t=table.nullity(g))
        for g in core.submasks(sigma)
    )


def p_j(table: RankTable, j: int) -> LaurentPoly:
    if not 0 <= j <= table.n:
        raise MalformedInputError(f"need 0 <= j <= {table.n}, got {j}")
    return poly_sum(
        p_sigma(table, m) for m in range(table.full + 1) if popcount(m) == j
    )


def w_from_pj(table: RankTable) -> LaurentPoly:
    """W assembled from the P_j coefficient polynomials."""
    n = table.n
    return poly_sum(p_j(table, j) * monomial(1, x=n - j, y=j) for j in range(n + 1))


# -- transforms --------------------------------------------------------------------


def macwilliams_transform(w: LaurentPoly, eta: int) -> LaurentPoly:
    """t^(-eta) W(x + (t-1) y, x - y, t)."""
    return w.substitute({"x": X + (T - 1) * Y, "y": X - Y}) * monomial(1, t=-eta)


def macwilliams(table: RankTable) -> LaurentPoly:
    """W of the dual via the transform, asserted against the dual's subset sum."""
    table.require_demimatroid("MacWilliams identity")
    transformed = macwilliams_transform(hamming_subset_sum(table), table.total_nullity)
    direct = hamming_subset_sum(ops.dual(table))
    if transformed != direct:
        raise InvariantViolationError("MacWilliams transform disagrees with the dual")
    return transformed


def tutte_from_hamming(table: RankTable) -> LaurentPoly:
    """Recover T(x,y) = (x-1)^(-eta) x^n W(1, 1/x, (x-1)(y-1))."""
    table.require_demimatroid("Tutte recovery")
    w = hamming_subset_sum(table)
    s = w.substitute({"x": 1, "y": monomial(1, x=-1), "t": (X - 1) * (Y - 1)})
    cleared = monomial(1, x=table.n) * s
    return cleared.divide_exact((X - 1) ** table.total_nullity)


def hamming_recurrence(table: RankTable, p: int) -> LaurentPoly:
    """(x-y) W(M\\p) + t^(1-rho(p)) y W(M/p)."""
    if not 1 <= p <= table.n:
        raise MalformedInputError(f"element {p} outside ground set 1..{table.n}")
    bit = 1 << (p - 1)
    left = (X - Y) * hamming_subset_sum(ops.delete(table, bit))
    right = monomial(1, t=1 - table.ranks[bit], y=1) * hamming_subset_sum(
        ops.contract(table, bit)
    )
    return left + right


# -- formal minimum distance and A-coefficients ---------------------------------------


def formal_min_distance(table: RankTable) -> tuple[int, int]:
    """(delta, c): smallest size with nullity 1 and how many subsets attain it."""
    table.require_demimatroid("formal minimum distance")
    if table.total_nullity == 0:
        raise KindError("every subset is independent; no formal minimum distance")
    delta = None
    c = 0
    for mask in range(table.full + 1):
        if table.nullity(mask) == 1:
            s = popcount(mask)
            if delta is None or s < delta:
                delta, c = s, 1
            elif s == delta:
                c += 1
    return delta, c


def _uniform_a_closed_form(n: int, i: int, delta: int) -> LaurentPoly:
    inner = poly_sum(
        (-1) ** j * comb(i - 1, j) * monomial(1, t=i - delta - j)
        for j in range(i - delta + 1)
    )
    return (T - 1) * comb(n, i) * inner


def a_coefficients(table: RankTable) -> tuple[int, dict[int, LaurentPoly]]:
    """delta and the weight coefficients A_j read off W.

    Verifies the structure the level sets force: A_j = 0 below delta and
    A_delta = c (t-1); when the table is uniform the closed form for every
    A_i is cross-checked as well.
    """
    delta, c = formal_min_distance(table)
    w = hamming_subset_sum(table)
    n = table.n
    coeffs = {j: w.coefficient(x=n - j, y=j) for j in range(1, n + 1)}
    if w.coefficient(x=n, y=0) != 1:
        raise InvariantViolationError("leading coefficient of W is not x^n")
    for j in range(1, delta):
        if not coeffs[j].is_zero:
            raise InvariantViolationError(f"A_{j} should vanish below delta={delta}")
    if coeffs[delta] != c * (T - 1):
        raise InvariantViolationError("A_delta does not equal c (t-1)")
    k = table.rank
    if table.ranks == core.uniform(n, k).ranks:
        for i in range(delta, n + 1):
            if coeffs[i] != _uniform_a_closed_form(n, i, delta):
                raise InvariantViolationError(f"uniform closed form fails at A_{i}")
    return delta, coeffs


# -- generalized enumerators -----------------------------------------------------------


def _w_at_t_power(table: RankTable, j: int, route: str) -> LaurentPoly:
    if route == "subset":
        w = hamming_subset_sum(table)
        return w.substitute({"t": monomial(1, t=j)}) if j != 1 else w
    if route == "tutte":
        return _w_via_tutte_terms(table, t_multiplier=j)
    raise MalformedInputError(f"unknown route {route!r}")


def generalized_w(table: RankTable, r: int, route: str = "subset") -> LaurentPoly:
    """r-th generalized Hamming weight enumerator.

    Alternating q-binomial combination of W(x, y, q^j) divided exactly by the
    angle bracket <r>_q; the division leaving a remainder means the input was
    not a demimatroid (the error carries the remainder).  The q variable is
    stored in the t slot.
    """
    table.require_demimatroid("generalized enumerator")
    if not 0 <= r <= table.n:
        raise MalformedInputError(f"need 0 <= r <= {table.n}, got {r}")
    total = zero()
    for j in range(r + 1):
        sign = (-1) ** (r - j)
        prefactor = q_binomial(r, j, var="t") * monomial(sign, t=comb(r - j, 2))
        total = total + prefactor * _w_at_t_power(table, j, route)
    return total.divide_exact(angle(r, var="t"))


def generalized_w_all(table: RankTable, route: str = "subset") -> list[LaurentPoly]:
    """W^(r) for r = 0 .. eta(E), the range the recovery identity sums over."""
    return [generalized_w(table, r, route) for r in range(table.total_nullity + 1)]


@dataclass(frozen=True)
class ConjectureReport:
    holds: bool
    residual: LaurentPoly | None
    error: str | None = None


def conjecture_check(table: RankTable) -> ConjectureReport:
    """Evaluate the q-enumerator recovery identity against the Tutte polynomial.

        T(x,y) =? x^n (x-1)^(k-n) * sum_r prod_{j<r}((x-1)(y-1) - q^j) W^(r)(1, 1/x, q)

    Returns the equality flag with the residual (rhs - T); inputs on which
    the Laurent clearing fails are reported, not raised.
    """
    table.require_demimatroid("conjecture check")
    n = table.n
    k = table.rank
    try:
        expected = tutte_mod.tutte(table)
        rhs = zero()
        prod = one()
        for r in range(n - k + 1):
            wr = generalized_w(table, r)
            evaluated = wr.substitute({"x": 1, "y": monomial(1, x=-1)})
            rhs = rhs + prod * evaluated
            prod = prod * ((X - 1) * (Y - 1) - monomial(1, t=r))
        rhs = (monomial(1, x=n) * rhs).divide_exact((X - 1) ** (n - k))
    except (
        InexactDivisionError,
        UnsupportedSubstitutionError,
        RationalFunctionError,
    ) as exc:
        return ConjectureReport(False, None, error=str(exc))
    residual = rhs - expected
    return ConjectureReport(residual.is_zero, residual)


# -- assembled view ----------------------------------------------------------------


@dataclass(frozen=True)
class HammingData:
    table: RankTable
    w: LaurentPoly
    pj: tuple[LaurentPoly, ...]
    delta: int
    a: dict[int, LaurentPoly]
    c: int


def hamming_data(table: RankTable) -> HammingData:
    """W with its coefficient family, checked for internal consistency."""
    w = hamming_subset_sum(table)
    pj = tuple(p_j(table, j) for j in range(table.n + 1))
    if w != w_from_pj(table):
        raise InvariantViolationError("P_j assembly disagrees with the subset sum")
    delta, a = a_coefficients(table)
    _, c = formal_min_distance(table)
    return HammingData(table, w, pj, delta, a, c)
