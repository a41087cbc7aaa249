"""Numeric oracle: adaptive quadrature for int_a^b R(x) (ln x)^m dx.

This route never touches the closed-form machinery, so it can referee
it.  The integrand may be given as a FactoredRationalFunction, as a raw
(numerator, denominator) Polynomial pair, or as a single Polynomial.

For a = 0 with m >= 1 the integrand has a logarithmic singularity at the
origin; the substitution x = exp(-u) turns int_0^s into

    int_{-ln s}^{inf} R(exp(-u)) (-u)^m exp(-u) du

whose integrand is smooth and exponentially decaying.  The infinite tail
is cut at a point U chosen so that  C * Gamma(m+1, U)  is far below the
requested tolerance, C being a sampled bound for |R| near the origin;
the cut contributes to the reported error estimate.

Real poles within (or within rounding distance of) the integration
interval raise SingularInterior; exceeding the evaluation budget raises
NoConvergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, NoConvergence, SingularInterior, ZeroDenominator
from .poly import Polynomial
from .ratfunc import FactoredRationalFunction

Integrand = Union[
    FactoredRationalFunction, tuple[Polynomial, Polynomial], Polynomial
]


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_error_estimate: float
    evaluations: int
    converged: bool


def _as_evaluator(integrand: Integrand) -> tuple[Callable[[float], float], list[float]]:
    """Scalar evaluator plus the real pole locations."""
    if isinstance(integrand, FactoredRationalFunction):
        return integrand, [float(p) for p in integrand.pole_locations()]
    if isinstance(integrand, Polynomial):
        return (lambda x: integrand(float(x))), []
    num, den = integrand
    if den.is_zero:
        raise ZeroDenominator("denominator is identically zero")
    if den.degree == 0:
        c = float(den.coeff(0))
        return (lambda x: num(float(x)) / c), []
    roots = np.roots([float(c) for c in reversed(den.coeffs)])
    poles = [
        float(r.real)
        for r in roots
        if abs(r.imag) <= 1e-9 * (1.0 + abs(r.real))
    ]
    return (lambda x: num(float(x)) / den(float(x))), poles


def _upper_incomplete_gamma(m: int, u: float) -> float:
    """Gamma(m+1, u) = m! e^{-u} sum_{k<=m} u^k/k!  (integer m >= 0)."""
    s = math.fsum(u**k / math.factorial(k) for k in range(m + 1))
    return math.factorial(m) * math.exp(-u) * s


def quad_log(
    integrand: Integrand,
    a,
    b,
    m: int = 1,
    tol: float = 1e-11,
    max_evals: int = 1_000_000,
) -> QuadResult:
    """Numerically integrate R(x) (ln x)^m over [a, b], 0 <= a < b."""
    a = float(a)
    b = float(b)
    if not isinstance(m, int) or m < 0:
        raise DomainError("log power must be an integer >= 0")
    if m > 60:
        raise DomainError("log power too large for the tail bound")
    if not (tol > 0.0):
        raise DomainError("tolerance must be positive")
    if a < 0.0:
        raise DomainError(f"lower limit must be >= 0, got {a}")
    if not b > a:
        raise DomainError(f"need lower < upper, got [{a}, {b}]")

    f, poles = _as_evaluator(integrand)
    margin = 1e-12 * (1.0 + abs(a) + abs(b))
    for p in poles:
        if a - margin <= p <= b + margin:
            raise SingularInterior(
                f"integrand has a pole at x = {p:.17g} inside [{a:g}, {b:g}]"
            )

    count = 0

    def counted(g: Callable[[float], float]) -> Callable[[float], float]:
        def wrapper(x: float) -> float:
            nonlocal count
            count += 1
            if count > max_evals:
                raise NoConvergence(
                    f"evaluation budget of {max_evals} exceeded"
                )
            return g(x)

        return wrapper

    pieces: list[tuple[float, float, bool]] = []  # (value, err, clean)
    tail_bound = 0.0

    def run_piece(g: Callable[[float], float], lo: float, hi: float) -> None:
        out = quad(
            counted(g), lo, hi, epsabs=tol / 4.0, epsrel=1e-12, limit=200,
            full_output=1,
        )
        pieces.append((out[0], out[1], len(out) == 3))

    if a == 0.0 and m >= 1:
        split = min(b, 1.0)
        u0 = -math.log(split)  # 0 when b >= 1
        # Bound |R| near the origin to place the tail cut.
        cut = None
        for u_cut in (40.0, 80.0, 160.0, 320.0, 640.0):
            samples = (math.exp(-u_cut), math.exp(-2.0 * u_cut), 0.0)
            c_bound = 1.5 * max(abs(f(x)) for x in samples)
            bound = c_bound * _upper_incomplete_gamma(m, u_cut)
            if bound <= tol / 10.0:
                cut = u_cut
                tail_bound = bound
                break
        if cut is None:
            raise NoConvergence("could not bound the tail of the integrand")

        def transformed(u: float) -> float:
            return f(math.exp(-u)) * (-u) ** m * math.exp(-u)

        run_piece(transformed, u0, cut)
        if b > 1.0:
            run_piece(lambda x: f(x) * math.log(x) ** m, 1.0, b)
    else:
        if m == 0:
            run_piece(f, a, b)
        else:
            run_piece(lambda x: f(x) * math.log(x) ** m, a, b)

    value = math.fsum(v for v, _, _ in pieces)
    err = math.fsum(e for _, e, _ in pieces) + tail_bound
    clean = all(ok for _, _, ok in pieces)
    converged = clean and err <= max(tol, 1e-12 * abs(value))
    return QuadResult(
        value=value,
        abs_error_estimate=err,
        evaluations=count,
        converged=converged,
    )
