import pytest

from hilbcheck.scalars import is_prime, prime_field_element_class, rat
from hilbcheck.fields import GF, QQ, QT, field_from_tag


def test_rat_normalization():
    x = rat(2, -4)
    assert x.numerator == -1 and x.denominator == 2
    assert rat(0, 5) == rat(0)


def test_is_prime():
    primes = [2, 3, 5, 7, 11, 101, 1009, 104729]
    for p in primes:
        assert is_prime(p)
    for n in [1, 4, 9, 91, 1001, 104730]:
        assert not is_prime(n)


def test_prime_field_arithmetic():
    F = prime_field_element_class(7)
    a, b = F(3), F(5)
    assert (a + b).v == 1
    assert (a * b).v == 1
    assert (a - b).v == 5
    assert (a / b).v == 2  # 3 * 5^{-1} = 3 * 3 = 9 = 2
    assert (a ** 6).v == 1
    assert -F(0) == F(0)
    assert bool(F(7)) is False


def test_prime_field_rejects_small_characteristic():
    for p in (2, 3):
        with pytest.raises(ValueError):
            prime_field_element_class(p)
    with pytest.raises(ValueError):
        prime_field_element_class(6)


def test_field_descriptors():
    assert QQ.characteristic == 0
    assert GF(11).characteristic == 11
    assert QT.characteristic == 0
    assert field_from_tag("Q") == QQ
    assert field_from_tag("F", 13) == GF(13)
    assert field_from_tag("Qt") == QT
    assert QQ.one / QQ.from_int(4) == rat(1, 4)
    with pytest.raises(ZeroDivisionError):
        QQ.inv_int(0)
