"""Macaulay duality: polynomials acting on dual polynomials by formal
partial differentiation, perpendicular spaces, and apolar ideals.

Dual elements are ordinary Polynomial values whose context carries the dual
flag; the pairing of x^a with y^b is a! when a == b and 0 otherwise.  In
characteristic p all degrees in play must stay below p, where the pairing is
perfect; higher degrees are refused rather than silently degenerate.
"""

from .errors import PreconditionError
from .groebner import Ideal, _monomials_of_degree
from .linalg import DenseMatrix, RowSpace, kernel_basis
from .poly import Polynomial


def _char_guard(field, degree):
    p = field.characteristic
    if p and degree >= p:
        raise PreconditionError(
            f"degree {degree} not below the characteristic {p}: pairing degenerates")


def apply_operator(f, g):
    """Act by f as a constant-coefficient differential operator on dual g."""
    if f.ctx.dual or not g.ctx.dual:
        raise PreconditionError("apply_operator takes (primal, dual) arguments")
    if f.ctx.names != g.ctx.names or f.ctx.field != g.ctx.field:
        raise PreconditionError("operator and argument come from different rings")
    field = g.ctx.field
    if g.terms:
        _char_guard(field, g.degree())
    out = {}
    for a, c in f.terms.items():
        for b, e in g.terms.items():
            if all(ai <= bi for ai, bi in zip(a, b)):
                coeff = 1
                for ai, bi in zip(a, b):
                    for k in range(bi - ai + 1, bi + 1):
                        coeff *= k
                add = c * e * field.from_int(coeff)
                if add:
                    m = tuple(bi - ai for ai, bi in zip(a, b))
                    s = out.get(m)
                    s = add if s is None else s + add
                    if s:
                        out[m] = s
                    elif m in out:
                        del out[m]
    return Polynomial(g.ctx, out)


def pairing(p, q):
    """Scalar pairing of equal-degree forms: apply and read the constant."""
    res = apply_operator(p, q)
    return res.terms.get((0,) * p.ctx.d, p.ctx.field.zero)


def _factorial_int(m):
    out = 1
    for e in m:
        for k in range(2, e + 1):
            out *= k
    return out


def homogeneous_component_basis(I, j):
    """Echelonized coefficient rows spanning the degree-j part of a
    homogeneous ideal, together with the monomial column list."""
    ctx = I.ctx
    field = ctx.field
    for g in I.gens:
        if not g.is_homogeneous():
            raise PreconditionError("ideal is not homogeneous")
    monos = list(_monomials_of_degree(ctx.d, j))
    col = {m: i for i, m in enumerate(monos)}
    rs = RowSpace(field)
    for g in I.gens:
        dg = g.degree()
        if dg is None or dg > j:
            continue
        for am in _monomials_of_degree(ctx.d, j - dg):
            prod = g.mul_term(am, field.one)
            vec = [field.zero] * len(monos)
            for m, c in prod.terms.items():
                vec[col[m]] = c
            rs.add(vec)
    return [row for _, row, _ in rs.rows], monos


def perp(I, j):
    """Basis of the subspace of degree-j dual forms annihilated by I_j."""
    ctx = I.ctx
    field = ctx.field
    _char_guard(field, j)
    rows, monos = homogeneous_component_basis(I, j)
    dual_ctx = ctx.dual_context() if not ctx.dual else ctx
    if not rows:
        return [Polynomial(dual_ctx, {m: field.one}) for m in monos]
    scaled = [[r[i] * field.from_int(_factorial_int(monos[i])) for i in range(len(monos))]
              for r in rows]
    ker = kernel_basis(DenseMatrix(field, scaled))
    out = []
    for v in ker:
        out.append(Polynomial(dual_ctx, {m: c for m, c in zip(monos, v) if c}))
    return out


class InverseSystem:
    """Graded components of a differentiation-closed dual subspace."""

    __slots__ = ("ctx", "components")

    def __init__(self, ctx, components):
        self.ctx = ctx
        self.components = {j: tuple(polys) for j, polys in components.items() if polys}

    def dimensions(self):
        top = max(self.components, default=-1)
        return tuple(len(self.components.get(j, ())) for j in range(top + 1))


def inverse_system(gens):
    """Differentiation closure of homogeneous dual forms, echelonized by degree."""
    if not gens:
        raise PreconditionError("need at least one dual generator")
    ctx = gens[0].ctx
    if not ctx.dual:
        raise PreconditionError("inverse system generators must be dual elements")
    field = ctx.field
    spaces = {}
    work = []
    for g in gens:
        if not g:
            continue
        if not g.is_homogeneous():
            raise PreconditionError("inverse system generators must be homogeneous")
        _char_guard(field, g.degree())
        work.append(g)
    monos_by_deg = {}
    spans = {}

    def insert(p):
        j = p.degree()
        if j not in spans:
            monos_by_deg[j] = list(_monomials_of_degree(ctx.d, j))
            spans[j] = (RowSpace(field), [])
        rs, reps = spans[j]
        vec = [p.terms.get(m, field.zero) for m in monos_by_deg[j]]
        if rs.add(vec) is None:
            reps.append(p)
            return True
        return False

    while work:
        p = work.pop()
        if not p:
            continue
        if insert(p):
            if p.degree() > 0:
                for i in range(ctx.d):
                    q = p.partial(i)
                    if q:
                        work.append(q)
    comps = {j: reps for j, (rs, reps) in spans.items()}
    return InverseSystem(ctx, comps)


def ideal_from_inverse_system(gens):
    """The ideal orthogonal to the differentiation closure of dual forms.

    Degrees above the top generator degree are filled with every form, so the
    result is zero-dimensional with Hilbert function j -> dim of the closure
    in degree j.
    """
    system = inverse_system(gens)
    ctx = system.ctx
    field = ctx.field
    primal = ctx.dual_context()
    top = max(system.components, default=0)
    out = []
    for j in range(top + 1):
        monos = list(_monomials_of_degree(ctx.d, j))
        duals = system.components.get(j, ())
        if not duals:
            out.extend(Polynomial(primal, {m: field.one}) for m in monos)
            continue
        # orthogonal complement under the factorial pairing
        rows = [[q.terms.get(m, field.zero) * field.from_int(_factorial_int(m))
                 for m in monos] for q in duals]
        ker = kernel_basis(DenseMatrix(field, rows))
        for v in ker:
            out.append(Polynomial(primal, {m: c for m, c in zip(monos, v) if c}))
    for m in _monomials_of_degree(ctx.d, top + 1):
        out.append(Polynomial(primal, {m: field.one}))
    return Ideal(primal, out)
