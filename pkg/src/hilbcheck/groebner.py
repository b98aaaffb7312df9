"""Buchberger engine, quotient bases, syzygies, ideal arithmetic, and the
vanishing-ideal-of-points algorithm.

All computations are deterministic: fixed S-pair selection, fixed tie
breaking, sorted reduced output.  Normal forms, initial ideals, ideal
intersection and equality, Schreyer syzygies from S-pair reduction traces,
and the evaluation-matrix construction of ideals of finite point sets all
live here.
"""

import heapq

from .errors import PreconditionError, InfiniteColengthError
from .linalg import DenseMatrix, RowSpace, determinant, kernel_basis
from .poly import (GREVLEX, Polynomial, VariableContext, mono_coprime,
                   mono_deg, mono_div, mono_divides, mono_lcm, mono_mul,
                   weight_order)


class Ideal:
    __slots__ = ("ctx", "gens")

    def __init__(self, ctx, gens):
        self.ctx = ctx
        self.gens = tuple(g for g in gens if g)
        for g in self.gens:
            if g.ctx != ctx:
                raise PreconditionError("generator from a different context")

    def __repr__(self):
        return "<" + ", ".join(map(str, self.gens)) + ">"


class QuotientBasis:
    """Standard monomials of a leading-term ideal: an order ideal of monomials."""

    __slots__ = ("monomials", "index")

    def __init__(self, monomials):
        self.monomials = tuple(monomials)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m):
        return m in self.index


class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, deterministically sorted."""

    __slots__ = ("ctx", "order", "elements", "lts", "_qb")

    def __init__(self, ctx, order, elements):
        self.ctx = ctx
        self.order = order
        self.elements = tuple(elements)
        self.lts = tuple(g.lm(order) for g in self.elements)
        self._qb = None

    def normal_form(self, f):
        if f.ctx != self.ctx:
            raise PreconditionError("polynomial from a different context")
        rem, _ = _divide(f, self.elements, self.order)
        return Polynomial(self.ctx, rem)

    def reduce_with_quotients(self, f):
        rem, quots = _divide(f, self.elements, self.order, track=True)
        return Polynomial(self.ctx, rem), [Polynomial(self.ctx, q) for q in quots]

    def contains(self, f):
        return not self.normal_form(f)

    def is_unit_ideal(self):
        zero_mono = (0,) * self.ctx.d
        return any(lt == zero_mono for lt in self.lts)

    def quotient_basis(self):
        if self._qb is None:
            self._qb = _standard_monomials(self)
        return self._qb

    def colength(self):
        return len(self.quotient_basis())

    def ideal(self):
        return Ideal(self.ctx, self.elements)

    def __repr__(self):
        return f"GB[{self.order}](" + ", ".join(map(str, self.elements)) + ")"


def _divide(f, basis, order, track=False):
    """Multivariate division; returns (remainder dict, quotient dicts)."""
    work = dict(f.terms)
    rem = {}
    quots = [{} for _ in basis] if track else None
    lminfo = [(g.lm(order), g.lc(order), g.terms) for g in basis]
    key = order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        for i, (lm, lc, terms) in enumerate(lminfo):
            if lm is not None and mono_divides(lm, m):
                mq = mono_div(m, lm)
                cq = c / lc
                for mm, cc in terms.items():
                    mt = mono_mul(mm, mq)
                    s = work.get(mt)
                    s = -(cq * cc) if s is None else s - cq * cc
                    if s:
                        work[mt] = s
                    elif mt in work:
                        del work[mt]
                if track:
                    q = quots[i]
                    q[mq] = q.get(mq, f.ctx.field.zero) + cq
                break
        else:
            rem[m] = c
            del work[m]
    return rem, quots


def normal_form(f, G):
    return G.normal_form(f)


def buchberger(ideal, order=GREVLEX):
    """Reduced Groebner basis of an ideal; deterministic for fixed input."""
    if isinstance(ideal, Ideal):
        ctx, gens = ideal.ctx, ideal.gens
    else:
        gens = tuple(g for g in ideal if g)
        if not gens:
            raise PreconditionError("empty generating set")
        ctx = gens[0].ctx
    if not order.is_global(ctx.d):
        raise PreconditionError(f"{order} is not a global monomial order")
    basis = []
    seen = set()
    for g in gens:
        if g:
            gm = g.monic(order)
            kk = tuple(sorted(gm.terms.items(), key=lambda kv: kv[0]))
            if kk not in seen:
                seen.add(kk)
                basis.append(gm)
    basis.sort(key=lambda g: order.key(g.lm(order)))
    lts = [g.lm(order) for g in basis]
    heap = []
    done = set()

    def push_pairs(j):
        for i in range(j):
            lcm = mono_lcm(lts[i], lts[j])
            heapq.heappush(heap, (mono_deg(lcm), i, j))

    for j in range(len(basis)):
        push_pairs(j)
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        li, lj = lts[i], lts[j]
        if mono_coprime(li, lj):
            continue
        lcm = mono_lcm(li, lj)
        if _chain_criterion(i, j, lcm, lts, done):
            continue
        spoly = (basis[i].mul_term(mono_div(lcm, li), ctx.field.one)
                 - basis[j].mul_term(mono_div(lcm, lj), ctx.field.one))
        rem, _ = _divide(spoly, basis, order)
        if rem:
            g = Polynomial(ctx, rem).monic(order)
            basis.append(g)
            lts.append(g.lm(order))
            push_pairs(len(basis) - 1)
    return GroebnerBasis(ctx, order, _reduce_basis(basis, order, ctx))


def _chain_criterion(i, j, lcm, lts, done):
    for k in range(len(lts)):
        if k in (i, j) or not mono_divides(lts[k], lcm):
            continue
        p1 = (min(i, k), max(i, k))
        p2 = (min(j, k), max(j, k))
        if p1 in done and p2 in done:
            return True
    return False


def _reduce_basis(basis, order, ctx):
    # minimalize leading terms, then inter-reduce tails
    items = sorted(basis, key=lambda g: order.key(g.lm(order)))
    kept = []
    for g in items:
        lm = g.lm(order)
        if not any(mono_divides(h.lm(order), lm) for h in kept):
            kept = [h for h in kept if not mono_divides(lm, h.lm(order))]
            kept.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            rem, _ = _divide(kept[i], others, order)
            g = Polynomial(ctx, rem).monic(order)
            if g.terms != kept[i].terms:
                kept[i] = g
                changed = True
    kept.sort(key=lambda g: order.key(g.lm(order)))
    return kept


def _standard_monomials(G):
    ctx, order, lts = G.ctx, G.order, G.lts
    d = ctx.d
    zero = (0,) * d
    if any(lt == zero for lt in lts):
        return QuotientBasis([])
    for i in range(d):
        if not any(all(e == 0 for k, e in enumerate(lt) if k != i) and lt[i] > 0
                   for lt in lts):
            raise InfiniteColengthError(
                f"no power of {ctx.names[i]} among leading terms: infinite colength")
    out = []
    seen = {zero}
    heap = [(order.key(zero), zero)]
    while heap:
        _, m = heapq.heappop(heap)
        if any(mono_divides(lt, m) for lt in lts):
            continue
        out.append(m)
        for i in range(d):
            mm = list(m)
            mm[i] += 1
            mm = tuple(mm)
            if mm not in seen:
                seen.add(mm)
                heapq.heappush(heap, (order.key(mm), mm))
    return QuotientBasis(out)


def quotient_basis(G):
    return G.quotient_basis()


def ideal_equal(I, J):
    """Exact equality of ideals: identical reduced grevlex bases."""
    if I.ctx != J.ctx:
        raise PreconditionError("ideals from different contexts")
    GI = buchberger(I, GREVLEX)
    GJ = buchberger(J, GREVLEX)
    return list(GI.elements) == list(GJ.elements)


def intersect(I, J):
    """Intersection of two ideals: eliminate u from u*I + (1-u)*J."""
    if I.ctx != J.ctx:
        raise PreconditionError("ideals from different contexts")
    ctx = I.ctx
    aux = "_u"
    while aux in ctx.names:
        aux = "_" + aux
    ext = VariableContext(ctx.field, (aux,) + ctx.names, dual=ctx.dual)
    u = ext.variable(0)
    one = ext.one()

    def lift(p):
        return Polynomial(ext, {(0,) + m: c for m, c in p.terms.items()})

    gens = [u * lift(f) for f in I.gens] + [(one - u) * lift(g) for g in J.gens]
    elim = weight_order((1,) + (0,) * ctx.d, tiebreak="grevlex")
    G = buchberger(Ideal(ext, gens), elim)
    out = []
    for g in G.elements:
        if all(m[0] == 0 for m in g.terms):
            out.append(Polynomial(ctx, {m[1:]: c for m, c in g.terms.items()}))
    return Ideal(ctx, out)


def initial_ideal(I, w):
    """Ideal of w-initial forms.

    Nonnegative w: Groebner basis under the w-refined order, initial forms of
    its elements.  Mixed or negative w: only for ideals containing a power of
    the maximal ideal, by exact linear algebra on the degree truncation (the
    all-degrees echelon makes this path noticeably slower in many variables).
    """
    w = tuple(w)
    if len(w) != I.ctx.d:
        raise PreconditionError("weight length must match the variable count")
    if all(wi >= 0 for wi in w):
        order = weight_order(w, tiebreak="grevlex")
        G = buchberger(I, order)
        return Ideal(I.ctx, [g.weight_initial_form(w) for g in G.elements])
    return _initial_ideal_truncated(I, w)


def _initial_ideal_truncated(I, w):
    ctx = I.ctx
    G = buchberger(I, GREVLEX)
    n = G.colength()
    for m in _monomials_of_degree(ctx.d, n):
        if not G.contains(ctx.monomial(m)):
            raise PreconditionError(
                "negative weights need an ideal containing a power of the maximal ideal")
    monos = [m for j in range(n + 1) for m in _monomials_of_degree(ctx.d, j)]
    # columns by w-weight descending, grevlex descending within a weight
    wkey = {m: (-sum(wi * ei for wi, ei in zip(w, m)),
                -mono_deg(m), tuple(reversed(m))) for m in monos}
    cols = sorted(monos, key=lambda m: wkey[m])
    col_of = {m: i for i, m in enumerate(cols)}
    field = ctx.field
    rs = RowSpace(field)
    for g in G.elements:
        og = g.order_of_vanishing()
        for a in range(0, n - og + 1):
            for am in _monomials_of_degree(ctx.d, a):
                prod = g.mul_term(am, field.one)
                vec = [field.zero] * len(cols)
                for m, c in prod.terms.items():
                    if mono_deg(m) <= n:
                        vec[col_of[m]] = c
                rs.add(vec)
    gens = []
    for _, row, _ in rs.rows:
        p = Polynomial(ctx, {cols[i]: c for i, c in enumerate(row) if c})
        gens.append(p.weight_initial_form(w))
    return Ideal(ctx, gens)


def _monomials_of_degree(d, j):
    if d == 1:
        yield (j,)
        return
    for e in range(j + 1):
        for rest in _monomials_of_degree(d - 1, j - e):
            yield (e,) + rest


class SyzygyBasis:
    """Relations among a fixed list of polynomials: each relation is a cofactor
    vector r with sum_i r[i] * g[i] == 0 exactly."""

    __slots__ = ("generators", "relations")

    def __init__(self, generators, relations):
        self.generators = tuple(generators)
        self.relations = tuple(tuple(r) for r in relations)
        for rel in self.relations:
            acc = self.generators[0].ctx.zero()
            for r, g in zip(rel, self.generators):
                acc = acc + r * g
            if acc:
                raise ArithmeticError("syzygy does not annihilate the generators")

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)


def schreyer_syzygies(G):
    """Generators of the syzygy module of a reduced basis, from S-pair traces.

    Coprime leading-term pairs contribute their Koszul relations, which is
    what the S-pair trace reduces to in that case; every other pair records
    its division trace.
    """
    ctx, order = G.ctx, G.order
    basis = list(G.elements)
    lts = G.lts
    one = ctx.field.one
    rels = []
    for j in range(len(basis)):
        for i in range(j):
            li, lj = lts[i], lts[j]
            if mono_coprime(li, lj):
                rel = [ctx.zero()] * len(basis)
                rel[i] = basis[j]
                rel[j] = -basis[i]
                rels.append(rel)
                continue
            lcm = mono_lcm(li, lj)
            mi = mono_div(lcm, li)
            mj = mono_div(lcm, lj)
            spoly = basis[i].mul_term(mi, one) - basis[j].mul_term(mj, one)
            rem, quots = _divide(spoly, basis, order, track=True)
            if rem:
                raise ArithmeticError("S-polynomial of a Groebner basis did not reduce to zero")
            rel = [-Polynomial(ctx, q) for q in quots]
            rel[i] = rel[i] + ctx.monomial(mi)
            rel[j] = rel[j] - ctx.monomial(mj)
            rels.append(rel)
    return SyzygyBasis(basis, rels)


def linear_syzygies(quadrics, ctx):
    """Linear-form relations among 7 independent quadrics in 4 variables.

    The kernel of the 28-dimensional multiplication map into the cubics; its
    dimension is 8 exactly when the quadrics span a 7-dimensional space whose
    ideal needs no cubic generators.
    """
    if ctx.d != 4:
        raise PreconditionError("linear syzygies are computed in 4 variables")
    if len(quadrics) != 7:
        raise PreconditionError("need exactly 7 quadrics")
    for q in quadrics:
        if not q or not q.is_homogeneous() or q.degree() != 2:
            raise PreconditionError("generators must be nonzero homogeneous quadrics")
    field = ctx.field
    deg2 = list(_monomials_of_degree(4, 2))
    rs = RowSpace(field)
    for q in quadrics:
        rs.add([q.terms.get(m, field.zero) for m in deg2])
    if rs.dim != 7:
        raise PreconditionError("quadrics are linearly dependent")
    deg3 = list(_monomials_of_degree(4, 3))
    row_of = {m: i for i, m in enumerate(deg3)}
    cols = []
    for q in quadrics:
        for j in range(4):
            e = [0, 0, 0, 0]
            e[j] = 1
            prod = q.mul_term(tuple(e), field.one)
            col = [field.zero] * len(deg3)
            for m, c in prod.terms.items():
                col[row_of[m]] = c
            cols.append(col)
    mat = DenseMatrix(field, [[cols[c][r] for c in range(28)] for r in range(len(deg3))])
    ker = kernel_basis(mat)
    if 28 - len(ker) != 20:
        raise PreconditionError(
            "quadrics do not span all cubics: Hilbert function is not (1,4,3) "
            "or a cubic generator is needed")
    rels = []
    xs = ctx.variables()
    for v in ker:
        rel = []
        for i in range(7):
            l = ctx.zero()
            for j in range(4):
                c = v[4 * i + j]
                if c:
                    l = l + xs[j].scale(c)
            rel.append(l)
        rels.append(rel)
    return SyzygyBasis(quadrics, rels)


def cyclic_annihilator_gb(ctx, apply_var, start, order=GREVLEX):
    """Reduced basis of the annihilator of a cyclic vector under commuting
    variable actions.

    apply_var(i, vec) is multiplication by the i-th variable.  Monomials are
    scanned in increasing order; a linear dependence of x^m * start on the
    smaller standard monomials yields a reduced basis element with leading
    term x^m.
    """
    field = ctx.field
    rs = RowSpace(field, track=True)
    lam = []
    lam_slot = {}   # insertion index in rs -> position in lam
    gb = []
    lts = []
    zero = (0,) * ctx.d
    heap = [(order.key(zero), zero)]
    seen = {zero}
    pending = {zero: list(start)}
    while heap:
        _, m = heapq.heappop(heap)
        vec = pending.pop(m)
        if any(mono_divides(lt, m) for lt in lts):
            continue
        combo = rs.add(vec)
        if combo is None:
            lam_slot[rs.count - 1] = len(lam)
            lam.append(m)
            for i in range(ctx.d):
                mm = list(m)
                mm[i] += 1
                mm = tuple(mm)
                if mm not in seen:
                    seen.add(mm)
                    heapq.heappush(heap, (order.key(mm), mm))
                    pending[mm] = apply_var(i, vec)
        else:
            terms = {m: field.one}
            for idx, c in combo.items():
                if c:
                    terms[lam[lam_slot[idx]]] = -c
            gb.append(Polynomial(ctx, terms))
            lts.append(m)
    gb.sort(key=lambda g: order.key(g.lm(order)))
    G = GroebnerBasis(ctx, order, gb)
    G._qb = QuotientBasis(lam)
    return G


def points_ideal(points, ctx, order=GREVLEX):
    """Reduced basis of the vanishing ideal of distinct points (evaluation
    matrix elimination, one monomial at a time in increasing order)."""
    field = ctx.field
    pts = [tuple(field.from_int(c) if isinstance(c, int) else c for c in q) for q in points]
    for q in pts:
        if len(q) != ctx.d:
            raise PreconditionError("point dimension does not match the context")
    if len({tuple(map(repr, q)) for q in pts}) != len(pts):
        raise PreconditionError("points must be pairwise distinct")
    n = len(pts)

    def apply_var(i, vec):
        return [v * q[i] for v, q in zip(vec, pts)]

    G = cyclic_annihilator_gb(ctx, apply_var, [field.one] * n, order)
    if len(G.quotient_basis()) != n:
        raise ArithmeticError("evaluation matrix did not reach full rank")
    return G


def _eval_mono(m, q, field):
    v = field.one
    for i, e in enumerate(m):
        for _ in range(e):
            v = v * q[i]
    return v


def delta_ratio(points, lam, m, m_prime, ctx):
    """Ratio of evaluation-matrix determinants giving a chart coordinate.

    lam is an ordered list of monomials whose evaluation matrix at the points
    is invertible; the numerator replaces m_prime by m in place.
    """
    field = ctx.field
    monos = list(lam)
    if m_prime not in monos:
        raise PreconditionError("m_prime must be one of the basis monomials")
    if m in monos:
        raise PreconditionError("m must lie outside the basis monomials")
    pts = [tuple(field.from_int(c) if isinstance(c, int) else c for c in q) for q in points]
    if len(pts) != len(monos):
        raise PreconditionError("need as many points as basis monomials")
    base = DenseMatrix(field, [[_eval_mono(mi, q, field) for q in pts] for mi in monos])
    d0 = determinant(base)
    if not d0:
        raise PreconditionError("points lie outside this chart (denominator vanishes)")
    replaced = [m if mi == m_prime else mi for mi in monos]
    num = DenseMatrix(field, [[_eval_mono(mi, q, field) for q in pts] for mi in replaced])
    return determinant(num) / d0
