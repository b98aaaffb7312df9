"""Exact scalar backends: arbitrary-precision rationals, prime fields, Q(t).

The rational type is selected once at import: gmpy2's GMP-backed mpq when it
is installed (the compiled fast path), else fractions.Fraction (pure Python).
Set HILBCHECK_PURE=1 to force the pure fallback.  Everything downstream is
written against the common operator protocol, so both backends are exercised
by the same code.
"""

import os
from functools import lru_cache

if os.environ.get("HILBCHECK_PURE") == "1":
    from fractions import Fraction as _Rat
    RAT_BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as _Rat
        RAT_BACKEND = "gmpy2"
    except ImportError:
        from fractions import Fraction as _Rat
        RAT_BACKEND = "fractions"


def rat(num=0, den=1):
    """Exact rational from integers (stored reduced, positive denominator)."""
    return _Rat(num, den)


RAT_ZERO = rat(0)
RAT_ONE = rat(1)


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin, valid far beyond any prime used here
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def prime_field_element_class(p):
    """Class of residues mod p, p a prime >= 5 (characteristic 2 and 3 excluded)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < 5:
        raise ValueError(f"prime field F_{p} not supported (characteristic 2 and 3 excluded)")

    class Fp:
        __slots__ = ("v",)
        modulus = p

        def __init__(self, v):
            self.v = v % p

        def __add__(self, other):
            return Fp(self.v + other.v)

        def __sub__(self, other):
            return Fp(self.v - other.v)

        def __neg__(self):
            return Fp(-self.v)

        def __mul__(self, other):
            return Fp(self.v * other.v)

        def __truediv__(self, other):
            if other.v == 0:
                raise ZeroDivisionError(f"division by zero in F_{p}")
            return Fp(self.v * pow(other.v, -1, p))

        def __pow__(self, e):
            if e < 0:
                return Fp(1) / self ** (-e)
            return Fp(pow(self.v, e, p))

        def __eq__(self, other):
            return isinstance(other, Fp) and self.v == other.v

        def __hash__(self):
            return hash((p, self.v))

        def __bool__(self):
            return self.v != 0

        def __repr__(self):
            return str(self.v)

    Fp.__name__ = f"F{p}"
    return Fp
