"""Randomized cross-validations between independently implemented layers:
the skew-form criterion, the 24 x 24 syzygy reduction, the classifier, and
the splitting machinery must tell one consistent story."""

import random

from hilbcheck.fields import GF, QQ
from hilbcheck.fixtures import random_points
from hilbcheck.apolarity import ideal_from_inverse_system
from hilbcheck.artin import split_rational_support
from hilbcheck.groebner import Ideal, buchberger, ideal_equal, intersect, points_ideal
from hilbcheck.poly import Polynomial, context
from hilbcheck.scalars import rat
from hilbcheck.smooth import classify_smoothable, salmon_turnbull_pfaffian
from hilbcheck.tangent import build_tangent_machine, tangent_dimension


def random_quadric_span_ideal(rng, ctx):
    """A (1,4,3) ideal from a random 7-dimensional span of quadrics, or None
    when the draw is degenerate."""
    from hilbcheck.groebner import _monomials_of_degree
    deg2 = list(_monomials_of_degree(4, 2))
    gens = []
    for _ in range(7):
        terms = {m: rat(rng.randint(-3, 3)) for m in deg2}
        p = Polynomial(ctx, {m: c for m, c in terms.items() if c})
        if p:
            gens.append(p)
    gens += [ctx.monomial(m) for m in _monomials_of_degree(4, 3)]
    I = Ideal(ctx, gens)
    G = buchberger(I)
    if G.colength() != 8:
        return None
    from hilbcheck.artin import local_hilbert_function
    if tuple(local_hilbert_function(G)) != (1, 4, 3):
        return None
    return Ideal(ctx, G.elements)


def random_salmon_ideal(rng, dctx):
    """Apolar ideal of three partials of a random cubic, or None when the
    partials fail to span a 3-space with Hilbert function (1,4,3)."""
    from hilbcheck.groebner import _monomials_of_degree
    deg3 = list(_monomials_of_degree(4, 3))
    terms = {m: rat(rng.randint(-2, 2)) for m in deg3}
    c = Polynomial(dctx, {m: x for m, x in terms.items() if x})
    if not c:
        return None
    parts = [c.partial(i) for i in range(3)]
    if any(not p for p in parts):
        return None
    I = ideal_from_inverse_system(parts)
    from hilbcheck.artin import local_hilbert_function
    try:
        hf = local_hilbert_function(I)
    except Exception:
        return None
    if tuple(hf) != (1, 4, 3):
        return None
    return I


def test_pfaffian_determinant_and_classifier_agree():
    """det(hbar) = 0, the skew-form Pfaffian = 0, and the Smoothable verdict
    coincide on ideals generated in degree 2."""
    rng = random.Random(314)
    ctx = context(QQ, "x1 x2 x3 x4")
    dctx = ctx.dual_context()
    samples = []
    while len(samples) < 6:
        I = random_quadric_span_ideal(rng, ctx)
        if I is not None:
            samples.append(I)
    while len(samples) < 10:
        I = random_salmon_ideal(rng, dctx)
        if I is not None:
            samples.append(I)
    for I in samples:
        rep = salmon_turnbull_pfaffian(I)
        verdict = classify_smoothable(I)
        assert (verdict.outcome == "Smoothable") == rep.vanishes
        try:
            machine = build_tangent_machine(I)
        except Exception:
            continue
        assert bool(machine.det_hbar) == bool(rep.pfaffian_block)
        assert machine.singular == rep.vanishes
        # the second component has dimension 25 at its smooth points
        if not rep.vanishes:
            assert tangent_dimension(I) == 25


def test_split_of_composite_supports():
    rng = random.Random(315)
    ctx = context(QQ, "x y z")
    local = Ideal(ctx, [ctx.monomial((2, 0, 0)), ctx.monomial((0, 2, 0)),
                        ctx.monomial((1, 1, 0)), ctx.monomial((0, 0, 1))])
    for _ in range(4):
        pts = random_points(rng.randint(0, 10 ** 9), n=3, d=3)
        if any(all(not c for c in q) for q in pts):
            continue
        I = intersect(Ideal(ctx, points_ideal(pts, ctx).elements), local)
        pieces = split_rational_support(I)
        assert sorted(buchberger(p).colength() for _, p in pieces) == [1, 1, 1, 3]
        back = None
        for _, p in pieces:
            back = p if back is None else intersect(back, p)
        assert ideal_equal(back, I)
        # pairwise coprime: the sum of any two pieces is the unit ideal
        for a in range(len(pieces)):
            for b in range(a + 1, len(pieces)):
                both = Ideal(ctx, list(pieces[a][1].gens) + list(pieces[b][1].gens))
                assert buchberger(both).is_unit_ideal()
        assert classify_smoothable(I).outcome == "Smoothable"


def test_classifier_prime_field():
    from hilbcheck.fixtures import seven_quadrics_ideal, monomial_143_ideal
    for p in (5, 7):
        assert classify_smoothable(seven_quadrics_ideal(4, GF(p))).outcome == \
            "NotSmoothable"
        assert classify_smoothable(monomial_143_ideal(GF(p))).outcome == "Smoothable"
