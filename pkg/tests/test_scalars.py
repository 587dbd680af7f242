import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from strongrev.scalars import (
    GaussianRational,
    I,
    MINUS_ONE,
    ONE,
    ScalarParseError,
    ZERO,
    parse,
)

G = GaussianRational


class TestArithmetic:
    def test_product_of_conjugates(self):
        assert G(1, 1) * G(1, -1) == G(2)

    def test_rational_addition(self):
        assert G(Fraction(1, 2)) + G(Fraction(1, 3)) == G(Fraction(5, 6))

    def test_i_squared(self):
        assert I * I == MINUS_ONE

    def test_subtraction_and_negation(self):
        assert G(3, 2) - G(1, 5) == G(2, -3)
        assert -G(1, -1) == G(-1, 1)

    def test_division(self):
        z = G(Fraction(3, 2), Fraction(-1, 2))
        assert z / z == ONE
        assert (ONE + I) / (ONE - I) == I

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_int_coercion_both_sides(self):
        assert 2 + I == G(2, 1)
        assert I + 2 == G(2, 1)
        assert 2 - I == G(2, -1)
        assert 3 * G(1, 1) == G(3, 3)
        assert 1 / I == -I


class TestPow:
    def test_negative_exponent(self):
        assert G(2) ** -3 == G(Fraction(1, 8))

    def test_i_fourth(self):
        assert I**4 == ONE

    def test_zero_exponent(self):
        assert G(Fraction(-7, 3), 5) ** 0 == ONE

    def test_zero_base_negative_exponent(self):
        with pytest.raises(ZeroDivisionError):
            ZERO**-1

    def test_power_additivity_random(self):
        rng = random.Random(11)
        for _ in range(200):
            a = G(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            if not a:
                continue
            m, n = rng.randint(-20, 20), rng.randint(-20, 20)
            assert a ** (m + n) == a**m * a**n


class TestFieldLaws:
    def test_random_triples(self):
        rng = random.Random(5)

        def draw():
            return G(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                     Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

        for _ in range(1000):
            a, b, c = draw(), draw(), draw()
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c

    def test_inverse_identity(self):
        rng = random.Random(6)
        for _ in range(200):
            z = G(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            if z:
                assert z * z.inverse() == ONE

    def test_results_are_normalized(self):
        z = G(Fraction(2, 4), Fraction(-6, 9))
        assert z.re == Fraction(1, 2) and z.im == Fraction(-2, 3)
        w = z * z
        import math

        for part in (w.re, w.im):
            assert part.denominator >= 1
            assert math.gcd(abs(part.numerator), part.denominator) == 1


class TestParseFormat:
    def test_parse_examples(self):
        assert parse("3/2-1/2i") == G(Fraction(3, 2), Fraction(-1, 2))
        assert parse("-1") == MINUS_ONE
        assert parse("i") == I
        assert parse("-i") == -I
        assert parse("2i") == G(0, 2)
        assert parse("1/2+3/4i") == G(Fraction(1, 2), Fraction(3, 4))
        assert parse("-1/3") == G(Fraction(-1, 3))
        assert parse("1+i") == G(1, 1)

    def test_format_examples(self):
        assert str(G(Fraction(3, 2), Fraction(-1, 2))) == "3/2-1/2i"
        assert str(MINUS_ONE) == "-1"
        assert str(I) == "i"
        assert str(-I) == "-i"
        assert str(ZERO) == "0"
        assert str(G(1, 1)) == "1+i"
        assert str(G(0, Fraction(-1, 3))) == "-1/3i"

    @pytest.mark.parametrize("bad", ["", "abc", "1/0", "++i", "1+", "i2", "1 + i", "1/2/3"])
    def test_parse_errors(self, bad):
        with pytest.raises(ScalarParseError) as info:
            parse(bad)
        assert info.value.position >= 0

    @given(
        re_part=st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4),
        im_part=st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4),
    )
    def test_round_trip(self, re_part, im_part):
        z = G(re_part, im_part)
        assert parse(str(z)) == z


class TestOrderingAndHash:
    def test_sort_key_total_order(self):
        values = [I, -I, ONE, MINUS_ONE, G(2), G(Fraction(1, 2))]
        ordered = sorted(values, key=lambda v: v.sort_key)
        assert ordered == [MINUS_ONE, -I, I, G(Fraction(1, 2)), ONE, G(2)]

    def test_hash_consistent_with_int_equality(self):
        assert G(1) == 1 and hash(G(1)) == hash(1)
        assert G(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(G(Fraction(1, 2))) == hash(Fraction(1, 2))
        lookup = {G(2): "two", I: "i"}
        assert lookup[G(2)] == "two"

    def test_immutable(self):
        with pytest.raises(AttributeError):
            ONE.re = Fraction(2)
