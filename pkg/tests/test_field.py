from fractions import Fraction

import pytest

from bqalg.field import (
    GF,
    QQ,
    FieldMismatchError,
    Fp,
    field_from_spec,
    power_class,
    same_class,
)


def test_parse_literals():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse("-7") == -7
    assert QQ.parse(" + 2 / 6 ") == Fraction(1, 3)
    assert GF(7).parse("1/3") == Fp(5, 7)
    with pytest.raises(ValueError):
        QQ.parse("1.5")
    with pytest.raises(ZeroDivisionError):
        QQ.parse("1/0")


def test_prime_field_arithmetic():
    K = GF(7)
    x, y = K(3), K(5)
    assert x + y == K(1)
    assert x * y == K(1)
    assert x / y == K(2)  # 3 * 5^-1 = 3 * 3 = 9
    assert -x == K(4)
    assert x ** -1 == y
    assert str(K(-1)) == "6"


def test_fields_do_not_mix():
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        QQ(GF(5)(2))


def test_field_spec():
    assert field_from_spec("Q") is QQ
    assert field_from_spec("fp:11") == GF(11)
    for bad in ("fp:12", "fp:x", "R"):
        with pytest.raises(ValueError):
            field_from_spec(bad)


def test_rational_power_classes():
    # 12 = 3 * 2^2, -8 = -2 * 2^2, 48 = 3 * 2^4, 2/9 ~ 2
    assert QQ.power_class(12, 2).representative == 3
    assert QQ.power_class(-8, 2).representative == -2
    assert QQ.power_class(48, 4).representative == 3
    assert QQ.power_class(Fraction(2, 9), 2).representative == 2
    # odd n: the sign is absorbed, -8 = (-2)^3
    assert QQ.power_class(-8, 3).representative == 1
    assert same_class(Fraction(1, 2), 2, 2)
    assert not same_class(Fraction(1, 2), 3, 2)


def test_prime_field_power_classes():
    K = GF(7)
    squares = {K(x) * K(x) for x in range(1, 7)}
    assert squares == {K(1), K(2), K(4)}
    for x in K.nonzero_elements():
        pc = power_class(x, 2)
        assert pc.representative == (K(1) if x in squares else K(3))
    # cubes in GF(7) are {1, 6}; three cosets
    assert len({K.power_class(x, 3) for x in K.nonzero_elements()}) == 3
    # gcd(3, 10) = 1 in GF(11): every element is a cube
    assert {GF(11).power_class(x, 3).representative for x in GF(11).nonzero_elements()} == {GF(11)(1)}


def test_nth_root():
    assert QQ.nth_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert QQ.nth_root(2, 2) is None
    assert QQ.nth_root(-4, 2) is None
    K = GF(13)
    for x in K.nonzero_elements():
        r = K.nth_root(x, 4)
        if r is not None:
            assert r ** 4 == x
        assert (r is not None) == (K.power_class(x, 4).representative == 1)
