"""Tests for the closed-form value type and its canonical form."""

import json
import math
import random
from fractions import Fraction

import pytest

from logint import (
    ClosedForm,
    Dilog,
    DomainError,
    Log,
    LogPow,
    LogProd,
    PiSquared,
    Unit,
    dilog,
)
from logint.closedform import atom_from_json_dict


class TestAtomValidation:
    def test_log_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            Log(Fraction(0))
        with pytest.raises(DomainError):
            Log(Fraction(-3, 2))

    def test_log_rejects_float(self):
        with pytest.raises(TypeError):
            Log(0.5)

    def test_logpow_power(self):
        with pytest.raises(ValueError):
            LogPow(Fraction(2), 0)
        with pytest.raises(DomainError):
            LogPow(Fraction(-1), 2)

    def test_dilog_domain(self):
        with pytest.raises(DomainError):
            Dilog(Fraction(2, 3))
        Dilog(Fraction(1, 2))  # boundary allowed
        Dilog(Fraction(-100))

    def test_logprod_sorts_arguments(self):
        assert LogProd(Fraction(5), Fraction(2)) == LogProd(Fraction(2), Fraction(5))

    def test_atom_values(self):
        assert Unit().value() == 1.0
        assert PiSquared().value() == pytest.approx(math.pi**2, rel=1e-15)
        assert Log(Fraction(3)).value() == pytest.approx(math.log(3), rel=1e-15)
        assert LogPow(Fraction(2), 3).value() == pytest.approx(
            math.log(2) ** 3, rel=1e-14
        )
        assert LogProd(Fraction(2), Fraction(3)).value() == pytest.approx(
            math.log(2) * math.log(3), rel=1e-14
        )
        assert Dilog(Fraction(-1, 2)).value() == pytest.approx(
            dilog(-0.5).value, abs=1e-15
        )


class TestCanonical:
    def test_log_of_one_drops(self):
        cf = ClosedForm({Log(Fraction(1)): Fraction(5)})
        assert cf.canonical() == ClosedForm.zero()

    def test_reciprocal_argument_flips(self):
        # ln(1/2) = -ln(2)
        a = ClosedForm({Log(Fraction(1, 2)): Fraction(1)})
        b = ClosedForm({Log(Fraction(2)): Fraction(-1)})
        assert a == b

    def test_reciprocal_flip_in_logpow(self):
        # ln(1/3)^2 = ln(3)^2, ln(1/3)^3 = -ln(3)^3
        even = ClosedForm({LogPow(Fraction(1, 3), 2): Fraction(1)})
        assert even == ClosedForm({LogPow(Fraction(3), 2): Fraction(1)})
        odd = ClosedForm({LogPow(Fraction(1, 3), 3): Fraction(1)})
        assert odd == ClosedForm({LogPow(Fraction(3), 3): Fraction(-1)})

    def test_logpow_one_becomes_log(self):
        assert ClosedForm({LogPow(Fraction(7), 1): Fraction(2)}) == ClosedForm(
            {Log(Fraction(7)): Fraction(2)}
        )

    def test_logprod_equal_args_becomes_logpow(self):
        assert ClosedForm(
            {LogProd(Fraction(5), Fraction(5)): Fraction(1)}
        ) == ClosedForm({LogPow(Fraction(5), 2): Fraction(1)})

    def test_dilog_special_values(self):
        assert ClosedForm({Dilog(Fraction(0)): Fraction(3)}) == ClosedForm.zero()
        assert ClosedForm({Dilog(Fraction(-1)): Fraction(1)}) == ClosedForm(
            {PiSquared(): Fraction(-1, 12)}
        )

    def test_product_of_logs_not_split(self):
        # ln(6) stays one atom; it is not rewritten as ln(2) + ln(3).
        cf = ClosedForm({Log(Fraction(6)): Fraction(1)}).canonical()
        assert cf.terms() == ((Log(Fraction(6)), Fraction(1)),)

    def test_cancellation_drops_terms(self):
        cf = ClosedForm({Log(Fraction(2)): Fraction(1)})
        assert (cf - cf).canonical() == ClosedForm.zero()
        assert not (cf - cf)

    def test_canonical_idempotent_random(self):
        rng = random.Random(222)
        qs = [Fraction(k, d) for k in range(1, 8) for d in (1, 2, 3)]
        for _ in range(150):
            terms = {}
            for _ in range(rng.randint(0, 6)):
                kind = rng.randrange(6)
                if kind == 0:
                    atom = Unit()
                elif kind == 1:
                    atom = PiSquared()
                elif kind == 2:
                    atom = Log(rng.choice(qs))
                elif kind == 3:
                    atom = LogPow(rng.choice(qs), rng.randint(1, 4))
                elif kind == 4:
                    atom = LogProd(rng.choice(qs), rng.choice(qs))
                else:
                    atom = Dilog(-rng.choice(qs))
                coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                terms[atom] = terms.get(atom, Fraction(0)) + coeff
            cf = ClosedForm(terms)
            once = cf.canonical()
            assert once.canonical() == once
            # canonicalization must preserve the numeric value
            assert math.isclose(
                cf.evalf(), once.evalf(), rel_tol=1e-12, abs_tol=1e-12
            )


class TestArithmetic:
    def test_evalf_frozen_examples(self):
        assert ClosedForm({PiSquared(): Fraction(-1, 12)}).evalf() == pytest.approx(
            -0.8224670334241132, abs=1e-15
        )
        cf = ClosedForm({Log(Fraction(2)): Fraction(1), Unit(): Fraction(-1)})
        assert cf.evalf() == pytest.approx(-0.3068528194400547, abs=1e-15)

    def test_evalf_of_zero(self):
        assert ClosedForm.zero().evalf() == 0.0

    def test_homomorphism_random(self):
        rng = random.Random(333)
        for _ in range(80):
            x = self._random_form(rng)
            y = self._random_form(rng)
            bound = 1e-12 * (1.0 + abs(x.evalf()) + abs(y.evalf()))
            assert abs((x + y).evalf() - (x.evalf() + y.evalf())) <= bound
            assert abs((x - y).evalf() - (x.evalf() - y.evalf())) <= bound
            c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            assert abs((x * c).evalf() - float(c) * x.evalf()) <= abs(bound * c)
            assert (c * x) == (x * c)

    def test_division(self):
        cf = ClosedForm({Log(Fraction(2)): Fraction(3)})
        assert cf / 3 == ClosedForm({Log(Fraction(2)): Fraction(1)})
        with pytest.raises(ZeroDivisionError):
            cf / 0

    def test_neg(self):
        cf = ClosedForm({Unit(): Fraction(2)})
        assert -cf + cf == ClosedForm.zero()

    def test_constant_helper(self):
        assert ClosedForm.constant(Fraction(3, 4)).evalf() == 0.75

    @staticmethod
    def _random_form(rng):
        atoms = [
            Unit(),
            PiSquared(),
            Log(Fraction(2)),
            Log(Fraction(3, 2)),
            LogPow(Fraction(2), 2),
            LogProd(Fraction(2), Fraction(3)),
            Dilog(Fraction(-1, 2)),
        ]
        terms = {}
        for atom in rng.sample(atoms, rng.randint(0, 4)):
            terms[atom] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        return ClosedForm(terms)


class TestSerialization:
    def test_round_trip_bit_exact(self):
        rng = random.Random(444)
        for _ in range(60):
            cf = TestArithmetic._random_form(rng).canonical()
            blob = cf.to_json()
            back = ClosedForm.from_json(blob)
            assert back == cf
            assert back.terms() == cf.terms()  # exact Fractions, not approx

    def test_json_is_valid_and_stringly_typed(self):
        cf = ClosedForm({Log(Fraction(1, 3)): Fraction(-2, 7)}).canonical()
        doc = json.loads(cf.to_json())
        assert isinstance(doc["terms"], list)
        for term in doc["terms"]:
            assert isinstance(term["coeff"], str)  # "p/q", never a float

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            atom_from_json_dict({"kind": "hyperlog", "arg": "2"})

    def test_str_rendering(self):
        cf = ClosedForm({PiSquared(): Fraction(-1, 12)})
        assert "pi^2" in str(cf)
        assert str(ClosedForm.zero()) == "0"
