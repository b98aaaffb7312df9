import random

import pytest

from hilbcheck.scalars import rat
from hilbcheck.upoly import (RATFUNC_T as t, RatFunc, zdiv_exact, zgcd, zmul,
                             zpoly_str, ztrim, zval)


def test_zpoly_basics():
    assert ztrim([1, 2, 0, 0]) == (1, 2)
    assert zmul((1, 1), (1, -1)) == (1, 0, -1)
    assert zval((0, 0, 3, 1)) == 2
    assert zval(()) is None
    assert zdiv_exact((1, 0, -1), (1, 1)) == (1, -1)
    with pytest.raises(ArithmeticError):
        zdiv_exact((1, 0, 1), (1, 1))


def test_zgcd():
    assert zgcd((0, 0, 1), (-1, 0, 1)) == (1,)
    assert zgcd((0, 0, 2), (0, 0, 0, 4)) == (0, 0, 1)
    # gcd of (t^2-1)(t+2) and (t+1)(t+2) is (t+1)(t+2)
    a = zmul((-1, 0, 1), (2, 1))
    b = zmul((1, 1), (2, 1))
    assert zgcd(a, b) == zmul((1, 1), (2, 1))


def test_ratfunc_normal_form():
    x = RatFunc((2, 2), (4,))       # (2t+2)/4 -> (t+1)/2
    assert x.num == (1, 1) and x.den == (2,)
    y = RatFunc((-1, 0, 1), (1, 1))  # (t^2-1)/(t+1) = t-1
    assert y.num == (-1, 1) and y.den == (1,)
    z = RatFunc((1,), (-2,))
    assert z.num == (-1,) and z.den == (2,)


def test_ratfunc_field_axioms_random():
    rng = random.Random(5)

    def rnd():
        while True:
            num = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 4)))
            den = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 3)))
            if any(den):
                return RatFunc(num, den)

    one = RatFunc.from_int(1)
    for _ in range(60):
        a, b, c = rnd(), rnd(), rnd()
        assert (a + b) * c == a * c + b * c
        assert a - a == RatFunc.from_int(0)
        if a:
            assert a / a == one
        assert (a * b) * c == a * (b * c)


def test_ratfunc_eval_and_valuation():
    f = (t ** 2 - RatFunc.from_int(1)) / (t + RatFunc.from_int(1))
    assert f == t - RatFunc.from_int(1)
    assert f.eval_at(rat(3)) == rat(2)
    assert (t ** 3).valuation() == 3
    assert (RatFunc.from_int(1) / t).valuation() == -1
    assert RatFunc.from_int(0).valuation() is None


def test_zpoly_str():
    assert zpoly_str(()) == "0"
    assert zpoly_str((0, -1, 2)) == "2*t^2 - t"
    assert zpoly_str((5,)) == "5"
