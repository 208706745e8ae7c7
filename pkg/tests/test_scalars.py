"""Exact scalar arithmetic over the three supported fields."""

import random
from fractions import Fraction

import pytest

from queerhom.scalars import (
    QQ,
    QI,
    GaussianRational,
    ScalarError,
    field_from_spec,
    parse_field_flag,
)


def test_rational_parse_and_format_round_trip():
    for text in ["0", "1", "-3", "2/3", "-7/5"]:
        x = QQ.parse(text)
        assert QQ.parse(QQ.format(x)) == x
    assert QQ.parse("4/6") == Fraction(2, 3)


def test_rational_rejects_garbage():
    with pytest.raises(ScalarError):
        QQ.parse("1.5x")
    with pytest.raises(ScalarError):
        QQ.parse("")


def test_gaussian_square_of_two_plus_three_i():
    x = QI.parse("2+3i")
    assert x * x == GaussianRational(-5, 12)


def test_gaussian_i_squared_is_minus_one():
    i = QI.sqrt_minus_one()
    assert i is not None
    assert i * i == QI.from_int(-1)


def test_gaussian_division_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        a = GaussianRational(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        b = GaussianRational(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        if not b:
            continue
        assert (a / b) * b == a


def test_prime_field_inverse_of_two_mod_five():
    f5 = parse_field_flag("Fp:5")
    assert f5.invert(f5.from_int(2)) == f5.from_int(3)


def test_prime_field_rejects_characteristic_two_and_composites():
    with pytest.raises(ScalarError):
        parse_field_flag("Fp:2")
    with pytest.raises(ScalarError):
        parse_field_flag("Fp:9")
    with pytest.raises(ScalarError):
        parse_field_flag("Fp:1")


def test_sqrt_minus_one_presence_depends_on_the_field():
    assert QQ.sqrt_minus_one() is None
    f5 = parse_field_flag("Fp:5")
    r = f5.sqrt_minus_one()
    assert r is not None and r * r == f5.from_int(-1)
    # -1 is not a square mod 7
    assert parse_field_flag("Fp:7").sqrt_minus_one() is None


def test_field_from_spec_matches_flag_parser():
    assert field_from_spec("rationals") == QQ
    assert field_from_spec("gaussian-rationals") == QI
    assert field_from_spec("prime-field", 13) == parse_field_flag("Fp:13")
    with pytest.raises(ScalarError):
        field_from_spec("octonions")


def test_parse_field_flag_rejects_unknown_text():
    with pytest.raises(ScalarError):
        parse_field_flag("R")
    with pytest.raises(ScalarError):
        parse_field_flag("Fp:")


@pytest.mark.parametrize("flag", ["Q", "Qi", "Fp:5", "Fp:10007"])
def test_field_axioms_on_random_elements(flag):
    field = parse_field_flag(flag)
    rng = random.Random(7)
    elems = [field.from_int(rng.randint(-20, 20)) for _ in range(12)]
    for a in elems:
        for b in elems:
            for c in elems[:4]:
                assert (a + b) * c == a * c + b * c
            assert a * b == b * a
        assert a + field.zero == a
        assert a * field.one == a
        if a:
            assert a * field.invert(a) == field.one


def test_format_parse_round_trip_across_fields():
    for flag in ["Q", "Qi", "Fp:13"]:
        field = parse_field_flag(flag)
        rng = random.Random(3)
        for _ in range(20):
            x = field.from_int(rng.randint(-40, 40))
            assert field.parse(field.format(x)) == x
