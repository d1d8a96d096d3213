"""Bump-comb number representations and the arithmetic identity checks."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavearith import (
    AXIOM_IDS,
    BumpComb,
    GridArrangement,
    check_axiom,
    eval_bump,
    mul_value,
    nat_value,
    pow_value,
    rational_value,
)
from wavearith.bump_model import _concat

from _oracles import trapezoid_integral

small_rationals = st.fractions(
    min_value=Fraction(-12), max_value=Fraction(12), max_denominator=8
)


class TestBumpComb:
    def test_natural_layout(self):
        c = BumpComb.natural(3)
        assert c.value == 3
        assert [t[0] for t in c.terms] == [1, 2, 3]
        assert all(t[1] == 1 for t in c.terms)
        assert c.centers.tolist() == [0.0, 1.0, 2.0]

    def test_natural_zero_is_the_empty_comb(self):
        assert BumpComb.natural(0).terms == ()

    def test_natural_rejects_bad_counts(self):
        for bad in (-1, 2.0):
            with pytest.raises(ValueError):
                BumpComb.natural(bad)

    def test_rational_value(self):
        c = BumpComb.rational(-7, 3)
        assert c.value == Fraction(-7, 3)

    def test_rational_validation(self):
        with pytest.raises(ValueError):
            BumpComb.rational(1, 0)
        with pytest.raises(ValueError):
            BumpComb.rational(200000, 3)

    def test_duplicate_shifts_rejected(self):
        with pytest.raises(ValueError):
            BumpComb(((1, Fraction(1)), (1, Fraction(2))))

    def test_pointwise_sum_of_bumps(self):
        c = BumpComb.rational(5, 2)
        xs = np.linspace(-1.0, 4.0, 301)
        want = np.zeros_like(xs)
        for shift, amp in c.terms:
            want = want + float(amp) * eval_bump(xs - (shift - 1))
        assert np.allclose(c(xs), want, rtol=0, atol=1e-15)

    def test_empty_comb(self, cfg):
        c = BumpComb()
        assert c.value == 0
        assert c.integral(cfg) == 0.0

    def test_integral_matches_trapezoid_oracle(self, cfg):
        c = BumpComb.rational(7, 4)
        lo, hi = c.support
        assert c.integral(cfg) == pytest.approx(
            trapezoid_integral(c, lo, hi, 40001), abs=1e-8
        )

    def test_scaled(self, cfg):
        c = BumpComb.natural(4)
        s = c.scaled(Fraction(3, 2))
        assert s.value == 6
        assert s.integral(cfg) == pytest.approx(6.0, abs=1e-9)

    def test_breakpoints_cover_cell_edges(self):
        c = BumpComb.natural(2)
        bps = c.breakpoints
        assert bps == tuple(sorted(bps))
        assert -0.5 in bps and 0.5 in bps and 1.5 in bps

    @given(r1=small_rationals, r2=small_rationals)
    @settings(max_examples=20, deadline=None)
    def test_concat_is_additive(self, r1, r2):
        a, b = BumpComb.from_value(r1), BumpComb.from_value(r2)
        both = _concat(a, b)
        assert both.value == r1 + r2
        assert both.integral() == pytest.approx(a.integral() + b.integral(), abs=1e-9)


class TestGridArrangement:
    def test_value(self):
        g = GridArrangement((3, 4), Fraction(1))
        assert g.value == 12

    def test_integral(self, cfg):
        g = GridArrangement((3, 4), Fraction(1))
        assert g.integral(cfg) == pytest.approx(12.0, abs=1e-8)

    def test_nonunit_spacing_has_no_separable_factors(self):
        g = GridArrangement((2, 2), Fraction(1), axis_spacings=(1.0, 2.0))
        with pytest.raises(ValueError):
            g.factors()

    def test_validation(self):
        with pytest.raises(ValueError):
            GridArrangement((0, 4), Fraction(1))


class TestValues:
    def test_nat_value_sample(self, cfg):
        for n in (1, 2, 9, 57):
            assert nat_value(n, cfg) == pytest.approx(float(n), abs=1e-9)

    def test_rational_value(self, cfg):
        assert rational_value(1, 3, cfg) == pytest.approx(1.0 / 3.0, abs=1e-9)
        assert rational_value(-5, 4, cfg) == pytest.approx(-1.25, abs=1e-9)

    def test_mul_value(self, cfg):
        assert mul_value(6, 7, cfg) == pytest.approx(42.0, abs=1e-8)

    def test_mul_requires_positive_integers(self):
        with pytest.raises(ValueError):
            mul_value(0, 3)
        with pytest.raises(ValueError):
            mul_value(2.5, 3)  # type: ignore[arg-type]

    def test_pow_value_against_trapezoid_oracle(self, cfg):
        # independent route: cube of a dense 1D trapezoid of the 2-comb
        c = BumpComb.natural(2)
        base = trapezoid_integral(c, -0.5, 1.5, 80001)
        assert pow_value(2, 3, cfg) == pytest.approx(base**3, abs=1e-7)

    def test_pow_value_small_table(self, cfg):
        for a, b in ((2, 5), (3, 3), (10, 2)):
            assert pow_value(a, b, cfg) == pytest.approx(float(a**b), rel=1e-11)

    def test_pow_overflow_guard(self):
        with pytest.raises(ValueError):
            pow_value(10, 20)

    def test_pow_validation(self):
        with pytest.raises(ValueError):
            pow_value(2, 0)


class TestAxioms:
    def test_axiom_ids_are_stable(self):
        assert AXIOM_IDS == (
            "add_comm",
            "add_assoc",
            "mul_comm",
            "mul_assoc",
            "distributive",
            "neutral_add",
            "neutral_mul",
            "linearity",
            "inversion",
        )

    @pytest.mark.parametrize(
        "axiom_id,operands",
        [
            ("add_comm", (Fraction(3, 4), Fraction(-2, 5))),
            ("add_assoc", (Fraction(1, 2), Fraction(5, 3), Fraction(-7, 4))),
            ("mul_comm", (3, 7)),
            ("mul_assoc", (2, 3, 4)),
            ("distributive", (3, 2, 5)),
            ("neutral_add", (Fraction(-9, 7),)),
            ("neutral_mul", (6,)),
            ("linearity", (Fraction(3, 2), Fraction(4, 3))),
            ("inversion", (Fraction(5, 6),)),
        ],
    )
    def test_each_axiom_holds(self, axiom_id, operands, cfg):
        holds, defect = check_axiom(axiom_id, operands, cfg)
        assert holds
        assert defect < 1e-8

    def test_unknown_axiom(self):
        with pytest.raises(ValueError):
            check_axiom("commutativity_of_wishes", (1, 2))

    def test_wrong_arity(self):
        with pytest.raises(ValueError):
            check_axiom("add_comm", (Fraction(1),))

    def test_multiplicative_axioms_require_integers(self):
        with pytest.raises(ValueError):
            check_axiom("mul_comm", (Fraction(1, 2), 3))

    def test_operand_size_cap(self):
        with pytest.raises(ValueError):
            check_axiom("add_comm", (Fraction(1001), Fraction(1)))
