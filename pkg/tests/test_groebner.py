import random

import pytest

from hilbcheck.errors import InfiniteColengthError, PreconditionError
from hilbcheck.fields import GF, QQ
from hilbcheck.fixtures import (degeneration_753, degeneration_axis_weight,
                                degeneration_chain, degeneration_cubic_pair,
                                degeneration_pencil_deg8,
                                degeneration_square_pair,
                                degeneration_two_quadrics, random_points,
                                seven_quadrics_ideal)
from hilbcheck.groebner import (Ideal, buchberger, delta_ratio, ideal_equal,
                                initial_ideal, intersect, linear_syzygies,
                                normal_form, points_ideal, schreyer_syzygies)
from hilbcheck.poly import GREVLEX, context, parse_polynomial, weight_order
from hilbcheck.scalars import rat


def P(s, ctx):
    return parse_polynomial(s, ctx)


def ideal(ctx, *texts):
    return Ideal(ctx, [P(s, ctx) for s in texts])


def test_buchberger_trivial():
    c1 = context(QQ, "x")
    G = buchberger(ideal(c1, "x - 1"))
    assert [str(g) for g in G.elements] == ["x - 1"]
    c2 = context(QQ, "x y")
    G2 = buchberger(ideal(c2, "x^2", "x*y", "y^2"))
    assert len(G2.elements) == 3
    assert G2.colength() == 3


def test_buchberger_pencil_colength_8():
    I, J, (J1, J2), w = degeneration_pencil_deg8()
    assert buchberger(J).colength() == 8
    assert buchberger(J1).colength() == 3
    assert buchberger(J2).colength() == 5


def test_quotient_basis_examples():
    c2 = context(QQ, "x y")
    assert list(buchberger(ideal(c2, "x", "y")).quotient_basis()) == [(0, 0)]
    qb = buchberger(ideal(c2, "x^2", "y^2")).quotient_basis()
    assert set(qb) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert buchberger(seven_quadrics_ideal(4)).colength() == 8
    c3 = context(QQ, "x y z")
    with pytest.raises(InfiniteColengthError):
        buchberger(ideal(c3, "x^2", "y^2")).quotient_basis()


def test_normal_form_membership_property():
    rng = random.Random(21)
    ctx = context(QQ, "x y z")
    I = ideal(ctx, "x^2 - y", "y^2 - z", "z^2")
    G = buchberger(I)
    for _ in range(15):
        f = ctx.zero()
        for g in I.gens:
            coeffs = {tuple(rng.randint(0, 2) for _ in range(3)): rat(rng.randint(-3, 3))
                      for _ in range(2)}
            mult = type(f)(ctx, {m: c for m, c in coeffs.items() if c})
            f = f + mult * g
        assert not G.normal_form(f)
    assert G.normal_form(P("x", ctx))           # x is not a member
    assert G.contains(P("x^2 - y", ctx))


def test_ideal_equal():
    ctx = context(QQ, "x y")
    assert ideal_equal(ideal(ctx, "x", "y"), ideal(ctx, "y", "x"))
    assert not ideal_equal(ideal(ctx, "x"), ideal(ctx, "x^2"))


def test_intersect_examples():
    ctx = context(QQ, "x y")
    I = ideal(ctx, "x")
    Jy = ideal(ctx, "y")
    assert ideal_equal(intersect(I, Jy), ideal(ctx, "x*y"))
    assert ideal_equal(intersect(I, I), I)
    # containment by membership and colength additivity for disjoint points
    A = ideal(ctx, "x", "y")
    B = ideal(ctx, "x - 1", "y - 2")
    C = intersect(A, B)
    GA, GB, GC = buchberger(A), buchberger(B), buchberger(C)
    for g in C.gens:
        assert GA.contains(g) and GB.contains(g)
    assert GC.colength() == GA.colength() + GB.colength()


def test_intersection_identity_pencil():
    I, J, (J1, J2), w = degeneration_pencil_deg8()
    assert ideal_equal(intersect(J1, J2), J)


def test_initial_ideal_identities():
    I, J, pair, w = degeneration_pencil_deg8()
    assert ideal_equal(initial_ideal(J, w), I)
    I, (J1, J2), w = degeneration_axis_weight()
    assert ideal_equal(initial_ideal(intersect(J1, J2), w), I)
    I, (J1, J2), w = degeneration_753()
    assert ideal_equal(initial_ideal(intersect(J1, J2), w), I)


def test_initial_753_printed_form_needs_sign_change():
    # with the cubic tail as x*y - z^3 the limit is the y -> -y image of the
    # target, so the two printed sides differ exactly by that relabeling
    ctx = context(QQ, "x y z")
    J1 = ideal(ctx, "x", "y", "z - 1")
    J2_printed = ideal(ctx, "x^2", "x*y - z^3", "y^2 - x*z", "y*z")
    got = initial_ideal(intersect(J1, J2_printed), (7, 5, 3))
    target = ideal(ctx, "x^2", "x*y - z^4", "y^2 - x*z", "y*z")
    flipped = ideal(ctx, "x^2", "x*y + z^4", "y^2 - x*z", "y*z")
    assert not ideal_equal(got, target)
    assert ideal_equal(got, flipped)


def test_initial_ideal_chain_and_strata():
    for d, m in ((2, 3), (3, 3), (3, 4)):
        I, J, (J1, J2), w = degeneration_chain(d, m)
        assert ideal_equal(intersect(J1, J2), J)
        assert ideal_equal(initial_ideal(J, w), I)
    for I, (J1, J2), w in (degeneration_two_quadrics(),
                           degeneration_cubic_pair(),
                           degeneration_square_pair()):
        assert ideal_equal(initial_ideal(intersect(J1, J2), w), I)


def test_initial_ideal_monomial_fixed_point():
    ctx = context(QQ, "x y z")
    I = ideal(ctx, "x^2", "y^3", "x*z")
    for w in ((1, 1, 1), (1, 0, 0), (5, 2, 7)):
        assert ideal_equal(initial_ideal(I, w), I)


def test_initial_ideal_negative_weights():
    ctx = context(QQ, "x y")
    # x - y^2 cuts a parabola; at the origin the lowest forms start with x
    I = ideal(ctx, "x - y^2", "y^3")
    gr = initial_ideal(I, (-1, -1))
    assert ideal_equal(gr, ideal(ctx, "x", "y^3"))
    J = ideal(ctx, "x^2 - x")   # not primary at the origin
    with pytest.raises(PreconditionError):
        initial_ideal(J, (-1, -1))


def test_initial_ideal_negative_weights_vs_local_hf():
    from hilbcheck.artin import local_hilbert_function
    ctx = context(QQ, "x y z")
    I = ideal(ctx, "x^2 - y^3", "y*x", "z^2 - x", "z*y")
    gr = initial_ideal(I, (-1, -1, -1))
    hf = local_hilbert_function(I)
    G = buchberger(gr)
    counts = {}
    for m in G.quotient_basis():
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    assert tuple(counts.get(j, 0) for j in range(len(hf))) == tuple(hf)


def test_schreyer_syzygies():
    ctx = context(QQ, "x y")
    G = buchberger(ideal(ctx, "x"))
    assert len(schreyer_syzygies(G)) == 0
    G2 = buchberger(ideal(ctx, "x", "y"))
    syz = schreyer_syzygies(G2)
    assert len(syz) == 1
    rel = syz.relations[0]
    # the Koszul relation, up to basis order and overall sign
    vals = sorted(str(p) for p in rel)
    assert vals in (["-x", "y"], ["-y", "x"])
    # relations verify against the generators by construction; spot-check one
    acc = ctx.zero()
    for r, g in zip(rel, syz.generators):
        acc = acc + r * g
    assert not acc


def test_schreyer_syzygies_generate_constraints():
    # the syzygy check inside SyzygyBasis would raise on any bad relation
    G = buchberger(seven_quadrics_ideal(4))
    syz = schreyer_syzygies(G)
    assert len(syz) >= len(G.elements) - 1


def test_linear_syzygies():
    ctx = context(QQ, "x1 x2 x3 x4")
    quads = list(seven_quadrics_ideal(4).gens)
    syz = linear_syzygies(quads, ctx)
    assert len(syz) == 8
    dependent = quads[:6] + [quads[0] + quads[1]]
    with pytest.raises(PreconditionError):
        linear_syzygies(dependent, ctx)
    with pytest.raises(PreconditionError):
        linear_syzygies(quads[:6] + [P("x1^3", ctx)], ctx)
    # seven quadrics needing a cubic generator: products of x1 with everything
    bad = [P(s, ctx) for s in
           ["x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4"]]
    with pytest.raises(PreconditionError):
        linear_syzygies(bad, ctx)


def test_points_ideal_examples():
    ctx1 = context(QQ, "x")
    G = points_ideal([(0,), (1,)], ctx1)
    assert [str(g) for g in G.elements] == ["x^2 - x"]
    ctx3 = context(QQ, "x y z")
    G0 = points_ideal([(0, 0, 0)], ctx3)
    assert sorted(str(g) for g in G0.elements) == ["x", "y", "z"]
    with pytest.raises(PreconditionError):
        points_ideal([(0, 0, 0), (0, 0, 0)], ctx3)


def test_points_ideal_against_intersection_oracle():
    rng = random.Random(8)
    ctx = context(QQ, "x y")
    for _ in range(5):
        pts = random_points(rng.randint(0, 10 ** 9), n=4, d=2)
        G = points_ideal(pts, ctx)
        acc = None
        for q in pts:
            pt_ideal = Ideal(ctx, [ctx.variable(0) - ctx.const(q[0]),
                                   ctx.variable(1) - ctx.const(q[1])])
            acc = pt_ideal if acc is None else intersect(acc, pt_ideal)
        assert ideal_equal(Ideal(ctx, G.elements), acc)
        assert G.colength() == len(pts)
        for g in G.elements:
            for q in pts:
                assert not g.evaluate(list(q))


def test_points_ideal_prime_field():
    F = GF(7)
    ctx = context(F, "x y")
    pts = [(F.from_int(0), F.from_int(1)), (F.from_int(2), F.from_int(3)),
           (F.from_int(5), F.from_int(5))]
    G = points_ideal(pts, ctx)
    assert G.colength() == 3


def test_delta_ratio_examples():
    ctx1 = context(QQ, "x")
    # one point: the chart coordinate of m is its value
    assert delta_ratio([(rat(5),)], [(0,)], (3,), (0,), ctx1) == rat(125)
    # two points 0, 1: the ratio for x^2 over the basis {1, x}
    assert delta_ratio([(0,), (1,)], [(0,), (1,)], (2,), (1,), ctx1) == rat(1)
    with pytest.raises(PreconditionError):
        delta_ratio([(0,), (0,)], [(0,), (1,)], (2,), (1,), ctx1)


def test_delta_ratio_matches_elimination_coefficients():
    rng = random.Random(12)
    for k in range(6):
        d = rng.choice((2, 3))
        n = rng.randint(3, 6)
        pts = random_points(rng.randint(0, 10 ** 9), n=n, d=d)
        ctx = context(QQ, [f"x{i+1}" for i in range(d)])
        G = points_ideal(pts, ctx)
        lam = list(G.quotient_basis())
        for g in G.elements:
            lt = g.lm(GREVLEX)
            for mp in lam:
                assert delta_ratio(pts, lam, lt, mp, ctx) == -g.terms.get(mp, QQ.zero)


def test_elimination_order_is_global_weight_order():
    w = weight_order((1, 0, 0))
    assert w.is_global(3)
    ctx = context(QQ, "u x y")
    G = buchberger(ideal(ctx, "u*x - 1", "y - u"), w)
    assert G.colength
