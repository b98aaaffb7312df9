"""Univariate polynomials in the parameter t, and the fraction field Q(t).

Z[t] polynomials are tuples of int coefficients, ascending degree, no trailing
zeros, () for zero.  RatFunc is a reduced ratio of two such tuples; it is the
coefficient type for computations along one-parameter families.
"""

from math import gcd

from .scalars import rat


def ztrim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def zdeg(p):
    return len(p) - 1


def zadd(a, b):
    n = max(len(a), len(b))
    return ztrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def zneg(a):
    return tuple(-c for c in a)


def zsub(a, b):
    return zadd(a, zneg(b))


def zmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return ztrim(out)


def zscale(a, c):
    if c == 0:
        return ()
    return tuple(ca * c for ca in a)


def zcontent(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g


def zprim(a):
    g = zcontent(a)
    if g <= 1:
        return a
    return tuple(c // g for c in a)


def zval(a):
    """t-adic valuation; None for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def zeval(a, x):
    acc = rat(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def zdiv_exact(n, d):
    """Quotient n/d when d divides n in Q[t]; result must land back in Z[t]."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not n:
        return ()
    num = [rat(c) for c in n]
    q = [rat(0)] * (len(n) - len(d) + 1)
    lead = rat(d[-1])
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(d) - 1] / lead
        q[i] = c
        if c:
            for j, dc in enumerate(d):
                num[i + j] -= c * dc
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("non-integer quotient in Z[t] division")
        out.append(int(c))
    return ztrim(out)


def zgcd(a, b):
    """Primitive gcd in Z[t], positive leading coefficient."""
    if not a:
        return _poslc(zprim(b))
    if not b:
        return _poslc(zprim(a))
    # monic Euclid over Q, then primitive part; degrees stay small here
    fa = [rat(c) for c in a]
    fb = [rat(c) for c in b]
    while fb and any(fb):
        fa, fb = fb, _qrem(fa, fb)
    num_lcm = 1
    for c in fa:
        num_lcm = num_lcm * c.denominator // gcd(num_lcm, int(c.denominator))
    ints = ztrim([int(c * num_lcm) for c in fa])
    return _poslc(zprim(ints))


def _poslc(p):
    if p and p[-1] < 0:
        return zneg(p)
    return p


def _qrem(a, b):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    bl = list(b)
    while bl and not bl[-1]:
        bl.pop()
    lead = bl[-1]
    while len(a) >= len(bl):
        c = a[-1] / lead
        off = len(a) - len(bl)
        for j, dc in enumerate(bl):
            a[off + j] -= c * dc
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def zpoly_str(p, var="t"):
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class RatFunc:
    """Element of Q(t): reduced ratio of integer polynomials.

    Numerator and denominator share no polynomial factor and no integer
    content; the denominator has positive leading coefficient.  This makes
    equality a tuple comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), _reduced=False):
        num = ztrim(num)
        den = ztrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(t)")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def from_int(n):
        return RatFunc((n,), (1,), _reduced=True) if n else RatFunc((), (1,), _reduced=True)

    @staticmethod
    def from_rat(q):
        return RatFunc((int(q.numerator),), (int(q.denominator),), _reduced=True)

    def __add__(self, other):
        return RatFunc(zadd(zmul(self.num, other.den), zmul(other.num, self.den)),
                       zmul(self.den, other.den))

    def __sub__(self, other):
        return RatFunc(zsub(zmul(self.num, other.den), zmul(other.num, self.den)),
                       zmul(self.den, other.den))

    def __neg__(self):
        return RatFunc(zneg(self.num), self.den, _reduced=True)

    def __mul__(self, other):
        return RatFunc(zmul(self.num, other.num), zmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFunc(zmul(self.num, other.den), zmul(self.den, other.num))

    def __pow__(self, e):
        if e < 0:
            return RatFunc(self.den, self.num) ** (-e)
        out = RatFunc.from_int(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) <= 1

    def eval_at(self, x):
        d = zeval(self.den, x)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return zeval(self.num, x) / d

    def valuation(self):
        """t-adic valuation; None for zero."""
        if not self.num:
            return None
        return zval(self.num) - zval(self.den)

    def __repr__(self):
        if self.den == (1,):
            return zpoly_str(self.num)
        ns = zpoly_str(self.num)
        ds = zpoly_str(self.den)
        if len(self.num) > 1 or self.num and self.num[-1] < 0:
            ns = f"({ns})"
        if len(self.den) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"


def _reduce(num, den):
    if not num:
        return (), (1,)
    if den[-1] < 0:
        num, den = zneg(num), zneg(den)
    if len(den) > 1 or len(num) > 1:
        g = zgcd(num, den)
        if zdeg(g) > 0 or g != (1,):
            num = zdiv_exact(num, g)
            den = zdiv_exact(den, g)
            if den[-1] < 0:
                num, den = zneg(num), zneg(den)
    c = gcd(zcontent(num), zcontent(den))
    if c > 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


RATFUNC_T = RatFunc((0, 1), (1,), _reduced=True)
