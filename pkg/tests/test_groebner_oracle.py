"""Cross-check the Buchberger engine against an independent implementation
on randomized inputs (skipped when sympy is unavailable)."""

import random

import pytest

sympy = pytest.importorskip("sympy")

from hilbcheck.fields import QQ
from hilbcheck.groebner import Ideal, buchberger, intersect
from hilbcheck.poly import GREVLEX, Polynomial, context
from hilbcheck.scalars import rat


def to_sympy(p, syms):
    expr = 0
    for m, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for x, e in zip(syms, m):
            term *= x ** e
        expr += term
    return expr


def from_sympy(expr, ctx, syms):
    poly = sympy.Poly(expr, *syms)
    terms = {}
    for mono, coeff in poly.terms():
        q = sympy.Rational(coeff)
        terms[tuple(int(e) for e in mono)] = rat(int(q.p), int(q.q))
    return Polynomial(ctx, terms)


def random_ideal(ctx, rng, ngens=3, maxdeg=2):
    gens = []
    d = ctx.d
    while len(gens) < ngens:
        terms = {}
        for _ in range(rng.randint(2, 4)):
            m = tuple(rng.randint(0, maxdeg) for _ in range(d))
            if sum(m) > maxdeg + 1:
                continue
            c = rat(rng.randint(-4, 4))
            if c:
                terms[m] = c
        p = Polynomial(ctx, terms)
        if p:
            gens.append(p)
    return Ideal(ctx, gens)


def test_reduced_bases_match_sympy():
    rng = random.Random(106)
    ctx = context(QQ, "x y z")
    syms = sympy.symbols("x y z")
    for _ in range(12):
        I = random_ideal(ctx, rng)
        ours = buchberger(I, GREVLEX)
        theirs = sympy.groebner([to_sympy(g, syms) for g in I.gens],
                                *syms, order="grevlex")
        converted = sorted((from_sympy(e, ctx, syms).monic(GREVLEX)
                            for e in theirs.exprs),
                           key=lambda g: GREVLEX.key(g.lm(GREVLEX)))
        assert list(ours.elements) == converted


def test_intersection_matches_sympy():
    ctx = context(QQ, "x y")
    syms = sympy.symbols("x y u")
    rng = random.Random(107)
    for _ in range(4):
        I = random_ideal(ctx, rng, ngens=2)
        J = random_ideal(ctx, rng, ngens=2)
        ours = buchberger(intersect(I, J), GREVLEX)
        u = syms[2]
        gens = [u * to_sympy(g, syms[:2]) for g in I.gens]
        gens += [(1 - u) * to_sympy(g, syms[:2]) for g in J.gens]
        gb = sympy.groebner(gens, u, *syms[:2], order="lex")
        kept = [e for e in gb.exprs if u not in e.free_symbols]
        theirs = buchberger(Ideal(ctx, [from_sympy(e, ctx, syms[:2]) for e in kept]),
                            GREVLEX)
        assert list(ours.elements) == list(theirs.elements)
