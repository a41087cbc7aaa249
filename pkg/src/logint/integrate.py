"""Closed forms for integrals of rational functions against powers of ln x.

Everything here reduces to integrals based at 0, evaluated as a
difference F(upper) - F(lower), so ln 0 never appears: the only base
quantities needed are

    int_0^b x^j (ln x)^k dx           = (-1)^k k! b^(j+1) / (j+1)^(k+1)
                                        ... binomially shifted by ln b,
    int_0^b ln x / (x + r) dx         = ln b ln((b+r)/r) + Li2(-b/r),
    int_0^b ln x / (x + r)^n dx       via a first-order recurrence in n.

All arithmetic on coefficients is exact; results are ClosedForm values
over the atom set {1, pi^2, ln q, (ln q)^k, ln q1 ln q2, Li2(q)}.

Poles must lie on the strictly negative axis.  A pole inside the
integration interval means the integral diverges (PoleInInterval); a
non-negative pole elsewhere defeats the reduction to [0, b]
(UnsupportedPole).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .closedform import (
    ClosedForm,
    Dilog,
    Log,
    LogPow,
    LogProd,
    UNIT,
)
from .errors import (
    DegenerateInterval,
    DomainError,
    PoleCollision,
    PoleInInterval,
    UnsupportedLogPower,
    UnsupportedPole,
    ZeroDenominator,
)
from .poly import Polynomial, Scalar
from .ratfunc import FactoredDenominator, factor_denominator, partial_fractions


def _rational(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"{what} must be exact (int or Fraction), got float")
    return Fraction(value)


def _log_atom(arg: Fraction, power: int) -> ClosedForm:
    """(ln arg)^power as a form; power 0 is the unit."""
    if power == 0:
        return ClosedForm.of(UNIT)
    if power == 1:
        return ClosedForm.of(Log(arg))
    return ClosedForm.of(LogPow(arg, power))


def integrate_monomial_log(j: int, k: int, b: Scalar) -> ClosedForm:
    """int_0^b x^j (ln x)^k dx, exactly.

    Scaling x = b t reduces to the unit interval, where
    int_0^1 t^j (ln t)^k dt = (-1)^k k! / (j+1)^(k+1).
    """
    if not isinstance(j, int) or j < 0:
        raise DomainError("monomial degree must be an integer >= 0")
    if not isinstance(k, int) or k < 0:
        raise DomainError("log power must be an integer >= 0")
    b = _rational(b, "upper limit")
    if b <= 0:
        raise DomainError(f"upper limit must be positive, got {b}")
    scale = b ** (j + 1)
    total = ClosedForm.zero()
    for i in range(k + 1):
        core = Fraction((-1) ** i * math.factorial(i), (j + 1) ** (i + 1))
        coeff = scale * math.comb(k, i) * core
        total = total + coeff * _log_atom(b, k - i)
    return total.canonical()


def integrate_poly_log(p: Polynomial, b: Scalar, m: int) -> ClosedForm:
    """int_0^b P(x) (ln x)^m dx by linearity over the monomials."""
    b = _rational(b, "upper limit")
    if b <= 0:
        raise DomainError(f"upper limit must be positive, got {b}")
    if not isinstance(m, int) or m < 0:
        raise DomainError("log power must be an integer >= 0")
    total = ClosedForm.zero()
    for j, a in enumerate(p.coeffs):
        if a:
            total = total + a * integrate_monomial_log(j, m, b)
    return total.canonical()


def integrate_simple_pole(b: Scalar, r: Scalar) -> ClosedForm:
    """int_0^b ln x / (x + r) dx  =  ln b ln((b+r)/r) + Li2(-b/r)."""
    b = _rational(b, "upper limit")
    r = _rational(r, "pole parameter")
    if b <= 0:
        raise DomainError(f"upper limit must be positive, got {b}")
    if r <= 0:
        raise DomainError(f"pole parameter must be positive, got {r}")
    form = ClosedForm.of(LogProd(b, (b + r) / r)) + ClosedForm.of(Dilog(-b / r))
    return form.canonical()


def _based_simple_pole(t: Fraction, r: Fraction) -> ClosedForm:
    return ClosedForm.zero() if t == 0 else integrate_simple_pole(t, r)


def integrate_two_simple_poles(
    a: Scalar, b: Scalar, r1: Scalar, r2: Scalar
) -> ClosedForm:
    """int_a^b ln x / ((x + r1)(x + r2)) dx for distinct positive poles.

    Splits 1/((x+r1)(x+r2)) = (1/(r2-r1)) (1/(x+r1) - 1/(x+r2)) and takes
    the base-point difference, yielding at most four log products and
    four dilogarithms before canonicalization.
    """
    a = _rational(a, "lower limit")
    b = _rational(b, "upper limit")
    r1 = _rational(r1, "pole parameter")
    r2 = _rational(r2, "pole parameter")
    if r1 <= 0 or r2 <= 0:
        raise DomainError("pole parameters must be positive")
    if r1 == r2:
        raise PoleCollision(f"poles coincide at -{r1}")
    if a < 0:
        raise DomainError(f"lower limit must be >= 0, got {a}")
    if a == b:
        raise DegenerateInterval(f"empty interval [{a}, {b}]")
    if b < a:
        raise DomainError(f"limits out of order: [{a}, {b}]")
    total = (
        _based_simple_pole(b, r1)
        - _based_simple_pole(b, r2)
        - _based_simple_pole(a, r1)
        + _based_simple_pole(a, r2)
    )
    return (total / (r2 - r1)).canonical()


def symmetric_two_pole_elementary(a: Scalar, b: Scalar) -> ClosedForm:
    """int_a^b ln x / ((x + a)(x + b)) dx, dilogarithm-free.

    When the integration limits equal the two pole magnitudes, every
    dilogarithm cancels and the value collapses to

        ln(ab) / (2(b-a)) * ln((a+b)^2 / (4ab)).
    """
    a = _rational(a, "lower limit")
    b = _rational(b, "upper limit")
    if a <= 0:
        raise DomainError(f"need 0 < a < b, got a = {a}")
    if a == b:
        raise DegenerateInterval(f"empty interval [{a}, {b}]")
    if b < a:
        raise DomainError(f"limits out of order: [{a}, {b}]")
    prod = a * b
    ratio = (a + b) ** 2 / (4 * prod)
    form = ClosedForm.of(LogProd(prod, ratio), Fraction(1, 2) / (b - a))
    return form.canonical()


def symmetric_two_pole_dilog(a: Scalar, b: Scalar) -> ClosedForm:
    """Same integral as symmetric_two_pole_elementary, but assembled
    from the generic two-pole route, so dilogarithms appear (and the
    pair at -1 collapses to a pi^2 term).  Agreement of the two routes
    is a nontrivial identity between log products and dilogarithms."""
    a = _rational(a, "lower limit")
    b = _rational(b, "upper limit")
    if a <= 0:
        raise DomainError(f"need 0 < a < b, got a = {a}")
    return integrate_two_simple_poles(a, b, a, b)


def unit_pole_log_integral(n: int, b: Scalar) -> ClosedForm:
    """h_n(b) = int_0^b ln t / (1 + t)^n dt for n >= 2.

    Base case  h_2(b) = b/(1+b) ln b - ln(1+b);  one integration by
    parts per step raises the pole order:

        h_n = (n-2)/(n-1) h_{n-1} + b ln b / ((n-1)(1+b)^(n-1))
              - ((1+b)^(n-2) - 1) / ((n-1)(n-2)(1+b)^(n-2)).
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError("pole order must be an integer >= 2")
    b = _rational(b, "upper limit")
    if b <= 0:
        raise DomainError(f"upper limit must be positive, got {b}")
    one_plus = 1 + b
    log_b = Fraction(b, one_plus)  # coefficient of ln b
    log_1p = Fraction(-1)  # coefficient of ln(1+b)
    rest = Fraction(0)
    for k in range(3, n + 1):
        step = Fraction(k - 2, k - 1)
        log_b = step * log_b + Fraction(b, (k - 1) * one_plus ** (k - 1))
        log_1p = step * log_1p
        rest = step * rest - Fraction(
            one_plus ** (k - 2) - 1, (k - 1) * (k - 2) * one_plus ** (k - 2)
        )
    form = (
        log_b * _log_atom(b, 1)
        + log_1p * _log_atom(one_plus, 1)
        + ClosedForm.of(UNIT, rest)
    )
    return form.canonical()


def integrate_multiple_pole(n: int, b: Scalar, r: Scalar) -> ClosedForm:
    """int_0^b ln x / (x + r)^n dx for n >= 2 and r > 0.

    Scaling x = r t maps onto the unit-pole integral:

        f_n(b, r) = ln r / ((n-1) r^(n-1)) * (1 - (r/(b+r))^(n-1))
                    + h_n(b/r) / r^(n-1).
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError("pole order must be an integer >= 2")
    b = _rational(b, "upper limit")
    r = _rational(r, "pole parameter")
    if b <= 0 or r <= 0:
        raise DomainError("upper limit and pole parameter must be positive")
    bracket = 1 - Fraction(r, b + r) ** (n - 1)
    scale = Fraction(1, r ** (n - 1))
    form = (
        ClosedForm.of(Log(r), scale * bracket / (n - 1))
        + scale * unit_pole_log_integral(n, Fraction(b, r))
    )
    return form.canonical()


@dataclass(frozen=True)
class LogIntegralParts:
    """(1+b)^(n-1) h_n(b) split as  X(b) ln b + Y(b) ln(1+b) + Z(b)."""

    n: int
    log_b: Polynomial
    log_one_plus_b: Polynomial
    rational: Polynomial

    def value_at(self, b: float) -> float:
        b = float(b)
        return (
            self.log_b(b) * math.log(b)
            + self.log_one_plus_b(b) * math.log1p(b)
            + self.rational(b)
        )


def unit_pole_log_parts(n: int) -> LogIntegralParts:
    """Polynomial coefficients of (1+b)^(n-1) h_n(b), n >= 2.

    Runs the same recurrence as unit_pole_log_integral but with b left
    symbolic, then checks the two parts that admit closed forms:

        X_n = ((1+b)^(n-1) - 1) / (n-1),    Y_n = -(1+b)^(n-1) / (n-1).
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError("pole order must be an integer >= 2")
    bpoly = Polynomial.x()
    one_plus = Polynomial((1, 1))
    x_part = bpoly
    y_part = -one_plus
    z_part = Polynomial()
    for k in range(3, n + 1):
        step = Fraction(k - 2, k - 1) * one_plus
        x_part = step * x_part + Fraction(1, k - 1) * bpoly
        y_part = step * y_part
        z_part = step * z_part + Fraction(1, (k - 1) * (k - 2)) * (
            one_plus - one_plus ** (k - 1)
        )
    expected_x = Fraction(1, n - 1) * (one_plus ** (n - 1) - 1)
    expected_y = Fraction(-1, n - 1) * one_plus ** (n - 1)
    if x_part != expected_x or y_part != expected_y:
        raise AssertionError("recurrence disagrees with closed-form parts")
    return LogIntegralParts(
        n=n, log_b=x_part, log_one_plus_b=y_part, rational=z_part
    )


@dataclass(frozen=True)
class IntegralSpec:
    """int_lower^upper  numerator/denominator * (ln x)^log_power  dx."""

    numerator: Polynomial
    denominator: Union[Polynomial, FactoredDenominator]
    lower: Fraction
    upper: Fraction
    log_power: int = 1

    def __post_init__(self) -> None:
        lower = _rational(self.lower, "lower limit")
        upper = _rational(self.upper, "upper limit")
        if lower < 0:
            raise DomainError(f"lower limit must be >= 0, got {lower}")
        if upper == lower:
            raise DegenerateInterval(f"empty interval [{lower}, {upper}]")
        if upper < lower:
            raise DomainError(f"limits out of order: [{lower}, {upper}]")
        if not isinstance(self.log_power, int) or self.log_power < 1:
            raise DomainError("log_power must be an integer >= 1")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)


def integrate_rational_log(spec: IntegralSpec) -> ClosedForm:
    """Exact closed form for the integral described by ``spec``.

    The denominator is factored over Q (NonRationalPole if impossible);
    each pole must be strictly negative and outside [lower, upper].  The
    fraction is not reduced first: a denominator factor names a pole
    even if the numerator happens to cancel it.
    """
    den = spec.denominator
    if isinstance(den, Polynomial):
        den = factor_denominator(den)

    if spec.log_power >= 2 and den.degree >= 1:
        raise UnsupportedLogPower(
            "log powers >= 2 are only supported for polynomial integrands"
        )

    for pole in den.pole_locations():
        if spec.lower <= pole <= spec.upper:
            raise PoleInInterval(
                f"pole at x = {pole} lies inside [{spec.lower}, {spec.upper}]"
            )
        if pole >= 0:
            raise UnsupportedPole(
                f"pole at x = {pole} is not on the negative axis"
            )

    if spec.numerator.is_zero:
        return ClosedForm.zero()

    decomp = partial_fractions(spec.numerator, den)

    def based(t: Fraction) -> ClosedForm:
        if t == 0:
            return ClosedForm.zero()
        total = integrate_poly_log(decomp.quotient, t, spec.log_power)
        for pole in decomp.poles:
            for j, c in enumerate(pole.residues, start=1):
                if not c:
                    continue
                if j == 1:
                    piece = integrate_simple_pole(t, pole.shift)
                else:
                    piece = integrate_multiple_pole(j, t, pole.shift)
                total = total + c * piece
        return total

    return (based(spec.upper) - based(spec.lower)).canonical()
