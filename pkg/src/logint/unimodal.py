"""Coefficient families from the unit-pole integrals, and shape checks.

The rational part Z_n of (1+b)^(n-1) h_n(b) hides a polynomial with
nonnegative integer coefficients:

    t_n(b) = -(n-1)! Z_n(b) / (b (1+b))

satisfying  t_2 = 0  and

    t_n = (n-2)(1+b) t_{n-1} + (n-3)! ((1+b)^(n-2) - 1) / b .

Composing with b -> b - 1 gives s_n(b) = t_n(b-1), which has its own
recurrence  s_n = (n-2) b s_{n-1} + (n-3)! (1 + b + ... + b^(n-3)) and
constant term (n-3)!.  The s_n coefficient sequences are nondecreasing,
hence unimodal; the t_n sequences are unimodal as a consequence (a
nonnegative-coefficient substitution b -> b+1 of a nondecreasing
sequence stays unimodal).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .poly import Polynomial


def family_poly(n: int) -> Polynomial:
    """t_n for n >= 2 (t_2 = 0, first nonzero at n = 3)."""
    if not isinstance(n, int) or n < 2:
        raise DomainError("family index must be an integer >= 2")
    one_plus = Polynomial((1, 1))
    t = Polynomial()
    for k in range(3, n + 1):
        # ((1+b)^(k-2) - 1)/b has coefficients C(k-2, r+1), r = 0..k-3.
        geom = Polynomial(tuple(math.comb(k - 2, r + 1) for r in range(k - 2)))
        t = (k - 2) * one_plus * t + math.factorial(k - 3) * geom
    return t


def shifted_family_poly(n: int) -> Polynomial:
    """s_n = t_n composed with b -> b - 1, for n >= 3, by its own
    recurrence (s_3 = 1)."""
    if not isinstance(n, int) or n < 3:
        raise DomainError("shifted family index must be an integer >= 3")
    b = Polynomial.x()
    s = Polynomial((1,))
    for k in range(4, n + 1):
        geom = Polynomial((1,) * (k - 2))  # 1 + b + ... + b^(k-3)
        s = (k - 2) * b * s + math.factorial(k - 3) * geom
    return s


def check_nondecreasing(p: Polynomial) -> tuple[bool, Optional[int]]:
    """Whether the coefficient sequence c_0..c_deg never decreases.

    Returns (True, None), or (False, i) for the first index i with
    c_i < c_(i-1).
    """
    cs = p.coeffs
    for i in range(1, len(cs)):
        if cs[i] < cs[i - 1]:
            return False, i
    return True, None


def check_unimodal(p: Polynomial) -> tuple[bool, Optional[int]]:
    """Whether the coefficients rise then fall (either part may be empty).

    Returns (True, peak) with the smallest index of a maximal
    coefficient, or (False, None).  A sequence is unimodal exactly when
    every strict rise happens before every strict fall.
    """
    cs = p.coeffs
    if not cs:
        return True, None
    rises = [i for i in range(len(cs) - 1) if cs[i] < cs[i + 1]]
    falls = [i for i in range(len(cs) - 1) if cs[i] > cs[i + 1]]
    if rises and falls and max(rises) > min(falls):
        return False, None
    peak = rises[-1] + 1 if rises else 0
    return True, peak


@dataclass(frozen=True)
class CoeffReport:
    """Shape summary for one member of a coefficient family."""

    n: int
    family: str  # "base" (t_n) or "shifted" (s_n)
    coeffs: tuple[Fraction, ...]
    degree: int
    all_nonneg_integers: bool
    nondecreasing: bool
    first_decrease: Optional[int]
    unimodal: bool
    peak: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "coeffs": [str(c) for c in self.coeffs],
            "degree": self.degree,
            "all_nonneg_integers": self.all_nonneg_integers,
            "nondecreasing": self.nondecreasing,
            "first_decrease": self.first_decrease,
            "unimodal": self.unimodal,
            "peak": self.peak,
        }


def coeff_report(n: int, family: str = "shifted") -> CoeffReport:
    if family == "base":
        p = family_poly(n)
    elif family == "shifted":
        p = shifted_family_poly(n)
    else:
        raise DomainError(f"unknown family {family!r}; use 'base' or 'shifted'")
    nondec, first_dec = check_nondecreasing(p)
    unimodal, peak = check_unimodal(p)
    return CoeffReport(
        n=n,
        family=family,
        coeffs=p.coeffs,
        degree=p.degree,
        all_nonneg_integers=all(c.denominator == 1 and c >= 0 for c in p.coeffs),
        nondecreasing=nondec,
        first_decrease=first_dec,
        unimodal=unimodal,
        peak=peak,
    )
