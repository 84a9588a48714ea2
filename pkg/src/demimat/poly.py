"""Exact sparse Laurent polynomials in the fixed variable set {x, y, t, q}.

Terms map an exponent vector (signed integers, one slot per variable) to a
nonzero rational coefficient.  All arithmetic is exact; there is no floating
point anywhere.  Values are immutable by convention: every operation returns
a fresh polynomial.

Display order is fixed so that printed polynomials are stable golden values:
terms are sorted by the exponent vector read with x least significant
(compare q, then t, then y, then x exponents, ascending).  Negative exponents
print as ``x^-1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import InexactDivisionError, UnsupportedSubstitutionError

VARIABLES = ("x", "y", "t", "q")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXP = (0, 0, 0, 0)

Number = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact integer or Fraction, got {type(value).__name__}")


class LaurentPoly:
    """A sparse multivariate Laurent polynomial over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Number] | None = None):
        clean: dict[tuple, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                e = tuple(exp)
                if len(e) != len(VARIABLES) or not all(isinstance(k, int) for k in e):
                    raise ValueError(f"bad exponent vector {exp!r}")
                c = clean.get(e, Fraction(0)) + _as_fraction(coeff)
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self._terms = clean

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._terms.values())

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def variables(self) -> tuple[str, ...]:
        """Names of variables that occur with a nonzero exponent."""
        used = [False] * len(VARIABLES)
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for i, v in enumerate(VARIABLES) if used[i])

    def min_exponent(self, var: str) -> int:
        i = _INDEX[var]
        return min((exp[i] for exp in self._terms), default=0)

    def max_exponent(self, var: str) -> int:
        i = _INDEX[var]
        return max((exp[i] for exp in self._terms), default=0)

    def coefficient(self, **fixed: int) -> LaurentPoly:
        """Collect terms matching the given exponents and strip those slots.

        ``w.coefficient(x=2, y=1)`` returns the polynomial in the remaining
        variables multiplying x^2*y.
        """
        idx = {_INDEX[v]: e for v, e in fixed.items()}
        out: dict[tuple, Fraction] = {}
        for exp, coeff in self._terms.items():
            if all(exp[i] == e for i, e in idx.items()):
                rest = tuple(0 if i in idx else e for i, e in enumerate(exp))
                out[rest] = out.get(rest, Fraction(0)) + coeff
        return LaurentPoly(out)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({_ZERO_EXP: other})
        return None

    def __add__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in o._terms.items():
            c = out.get(exp, Fraction(0)) + coeff
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = {exp: -c for exp, c in self._terms.items()}
        return p

    def __sub__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                c = out.get(exp, Fraction(0)) + c1 * c2
                if c:
                    out[exp] = c
                else:
                    out.pop(exp, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return self.monomial_inverse() ** (-power)
        result = one()
        base = self
        k = power
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_inverse(self) -> LaurentPoly:
        """Inverse of a single-term polynomial; anything else has no Laurent inverse."""
        if not self.is_monomial:
            raise UnsupportedSubstitutionError(
                f"only monomials are invertible in the Laurent ring: {self}"
            )
        (exp, coeff), = self._terms.items()
        return LaurentPoly({tuple(-e for e in exp): Fraction(1) / coeff})

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitution and division ------------------------------------------

    def substitute(self, assignments: Mapping[str, LaurentPoly | Number]) -> LaurentPoly:
        """Simultaneously replace variables by polynomials or rationals.

        A variable occurring with a negative exponent may only receive a
        nonzero monomial value (the inverse stays a Laurent monomial); any
        other assignment raises UnsupportedSubstitutionError.
        """
        values: dict[int, LaurentPoly] = {}
        for name, value in assignments.items():
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
            v = value if isinstance(value, LaurentPoly) else constant(value)
            values[_INDEX[name]] = v
        out = zero()
        power_cache: dict[tuple[int, int], LaurentPoly] = {}
        for exp, coeff in self._terms.items():
            residual = tuple(0 if i in values else e for i, e in enumerate(exp))
            term = LaurentPoly({residual: coeff})
            for i, val in values.items():
                e = exp[i]
                if e == 0:
                    continue
                key = (i, e)
                if key not in power_cache:
                    if e < 0 and not val.is_monomial:
                        raise UnsupportedSubstitutionError(
                            f"cannot raise {val} to negative power {e}"
                        )
                    power_cache[key] = val ** e
                term = term * power_cache[key]
            out = out + term
        return out

    def divide_exact(self, divisor: LaurentPoly | Number) -> LaurentPoly:
        """Exact division; raises InexactDivisionError on a nonzero remainder.

        The divisor must be a nonzero monomial, a rational constant, or a
        polynomial in a single variable (the cases the identities in this
        package need).
        """
        d = divisor if isinstance(divisor, LaurentPoly) else constant(divisor)
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if d.is_monomial:
            return self * d.monomial_inverse()
        dvars = d.variables()
        if len(dvars) != 1:
            raise InexactDivisionError(
                f"divisor must be a monomial or univariate, got {d}", remainder=None
            )
        if self.is_zero:
            return zero()
        var = dvars[0]
        vi = _INDEX[var]

        def split(p: LaurentPoly) -> dict[int, LaurentPoly]:
            by_deg: dict[int, dict[tuple, Fraction]] = {}
            for exp, coeff in p._terms.items():
                rest = tuple(0 if i == vi else e for i, e in enumerate(exp))
                by_deg.setdefault(exp[vi], {})[rest] = coeff
            return {k: LaurentPoly(v) for k, v in by_deg.items()}

        shift = self.min_exponent(var) - d.min_exponent(var)
        num = split(self)
        den = {k - d.min_exponent(var): c.constant_value() for k, c in split(d).items()}
        deg_d = max(den)
        lead = den[deg_d]

        work = {k - self.min_exponent(var): v for k, v in num.items()}
        quotient: dict[int, LaurentPoly] = {}
        while work:
            k = max(work)
            if k < deg_d:
                break
            factor = work.pop(k) * (Fraction(1) / lead)
            quotient[k - deg_d] = factor
            for j, c in den.items():
                if j == deg_d:
                    continue
                pos = k - deg_d + j
                updated = work.get(pos, zero()) - factor * c
                if updated.is_zero:
                    work.pop(pos, None)
                else:
                    work[pos] = updated
        if work:
            rem = zero()
            for k, c in work.items():
                rem = rem + c * monomial(1, **{var: k + self.min_exponent(var)})
            raise InexactDivisionError(
                f"inexact division by {d}: remainder {rem}", remainder=rem
            )
        out = zero()
        for k, c in quotient.items():
            out = out + c * monomial(1, **{var: k + shift})
        return out

    # -- display --------------------------------------------------------------

    def _sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        # x is least significant: compare (q, t, y, x) exponents ascending.
        return sorted(self._terms.items(), key=lambda kv: tuple(reversed(kv[0])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in self._sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                factors.append(VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def term_list(self) -> list[list]:
        """JSON-friendly term list in canonical order: [[ex, ey, et, eq], "coeff"]."""
        return [[list(exp), str(coeff)] for exp, coeff in self._sorted_terms()]


# -- constructors -------------------------------------------------------------


def zero() -> LaurentPoly:
    return LaurentPoly()


def one() -> LaurentPoly:
    return LaurentPoly({_ZERO_EXP: 1})


def constant(value: Number) -> LaurentPoly:
    return LaurentPoly({_ZERO_EXP: value})


def variable(name: str) -> LaurentPoly:
    exp = [0] * len(VARIABLES)
    exp[_INDEX[name]] = 1
    return LaurentPoly({tuple(exp): 1})


def monomial(coeff: Number, **exps: int) -> LaurentPoly:
    exp = [0] * len(VARIABLES)
    for name, e in exps.items():
        exp[_INDEX[name]] = e
    return LaurentPoly({tuple(exp): coeff})


X = variable("x")
Y = variable("y")
T = variable("t")
Q = variable("q")


def poly_sum(items) -> LaurentPoly:
    total = zero()
    for item in items:
        total = total + item
    return total


# -- q-analogues ---------------------------------------------------------------
#
# [m]_q = 1 + q + ... + q^(m-1);  [m]_q! = [1]_q ... [m]_q;
# the q-binomial satisfies [m,j]_q = [m-1,j]_q + q^(m-j) [m-1,j-1]_q;
# <m>_q = (q^m - 1)(q^m - q) ... (q^m - q^(m-1)), with <0>_q = 1.


def q_bracket(m: int, var: str = "q") -> LaurentPoly:
    if m < 0:
        raise ValueError("q-bracket needs m >= 0")
    return LaurentPoly({_exp_for(var, i): 1 for i in range(m)})


def q_bracket_factorial(m: int, var: str = "q") -> LaurentPoly:
    if m < 0:
        raise ValueError("q-factorial needs m >= 0")
    out = one()
    for i in range(1, m + 1):
        out = out * q_bracket(i, var)
    return out


def q_binomial(m: int, j: int, var: str = "q") -> LaurentPoly:
    """Gaussian binomial coefficient, built by the Pascal-type recurrence."""
    if j < 0 or j > m:
        raise ValueError(f"q-binomial needs 0 <= j <= m, got ({m}, {j})")
    row = [one()]
    for mm in range(1, m + 1):
        new = [one()]
        for jj in range(1, mm):
            new.append(row[jj] + monomial(1, **{var: mm - jj}) * row[jj - 1])
        new.append(one())
        row = new
    return row[j]


def angle(m: int, var: str = "q") -> LaurentPoly:
    if m < 0:
        raise ValueError("angle bracket needs m >= 0")
    out = one()
    qm = monomial(1, **{var: m})
    for i in range(m):
        out = out * (qm - monomial(1, **{var: i}))
    return out


def _exp_for(var: str, e: int) -> tuple:
    exp = [0] * len(VARIABLES)
    exp[_INDEX[var]] = e
    return tuple(exp)
