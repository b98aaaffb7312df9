"""Zero-dimensional quotient algebras: multiplication operators, centroids,
recentering, local Hilbert functions, embedding reduction, splitting over
rational support, and the staircase census of local Hilbert functions.

The quotient S/I is carried as the list of multiplication operators X_i on
the standard-monomial basis; powers of the maximal ideal are tracked as the
chain of subspaces generated by 1 under products of at least j variables.
"""

from .errors import HilbcheckError, PreconditionError
from .fields import QQ
from .linalg import DenseMatrix, RowSpace, kernel_basis, rref
from .poly import GREVLEX, Polynomial, VariableContext, mono_deg
from .groebner import (GroebnerBasis, Ideal, buchberger, cyclic_annihilator_gb,
                       _monomials_of_degree)
from .scalars import rat


class IndeterminateSupport(HilbcheckError):
    """Support points could not be certified rational."""


class HilbertFunction(tuple):
    """Finite sequence h_j = dim m^j / m^(j+1), trailing zeros trimmed."""

    def __new__(cls, values):
        vals = list(values)
        while vals and vals[-1] == 0:
            vals.pop()
        return super().__new__(cls, vals)

    def colength(self):
        return sum(self)

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


class LocalAlgebraModel:
    """Colength-n quotient presented by n x n multiplication operators."""

    __slots__ = ("ctx", "qb", "ops", "n")

    def __init__(self, ctx, qb, ops):
        self.ctx = ctx
        self.qb = qb
        self.ops = ops
        self.n = len(qb)

    def unit_vector(self):
        """Coordinates of 1 in the standard-monomial basis."""
        field = self.ctx.field
        one_pos = self.qb.index[(0,) * self.ctx.d]
        return [field.one if i == one_pos else field.zero for i in range(self.n)]

    def vector_of(self, f, G):
        """Coordinates of f mod I."""
        nf = G.normal_form(f)
        field = self.ctx.field
        v = [field.zero] * self.n
        for m, c in nf.terms.items():
            v[self.qb.index[m]] = c
        return v

    def operator_of_polynomial(self, f):
        """Matrix of multiplication by f on S/I."""
        field = self.ctx.field
        cache = {}

        def power(m):
            if m in cache:
                return cache[m]
            i = next(i for i, e in enumerate(m) if e)
            prev = list(m)
            prev[i] -= 1
            base = power(tuple(prev))
            out = self.ops[i].matmul(base)
            cache[m] = out
            return out

        cache[(0,) * self.ctx.d] = DenseMatrix.identity(field, self.n)
        acc = DenseMatrix.zero(field, self.n, self.n)
        for m, c in f.terms.items():
            pm = power(m)
            acc = DenseMatrix(field, [[acc.rows[i][j] + c * pm.rows[i][j]
                                       for j in range(self.n)] for i in range(self.n)])
        return acc

    def maximal_ideal_chain(self):
        """Dimensions of the images of m^0, m^1, ... in S/I, and the spaces.

        Stops when the chain stabilizes; it reaches 0 exactly when I is
        primary at the origin.
        """
        field = self.ctx.field
        spaces = []
        current = RowSpace(field)
        for i in range(self.n):
            current.add([field.one if j == i else field.zero for j in range(self.n)])
        spaces.append(current)
        while True:
            prev = spaces[-1]
            nxt = RowSpace(field)
            for _, row, _ in prev.rows:
                for X in self.ops:
                    nxt.add(X.apply(row))
                    if nxt.dim == prev.dim:
                        break
                if nxt.dim == prev.dim:
                    break
            spaces.append(nxt)
            if nxt.dim == 0 or nxt.dim == prev.dim:
                return spaces


def multiplication_operators(G):
    """The d commuting matrices of multiplication by the variables on S/I."""
    qb = G.quotient_basis()
    ctx = G.ctx
    field = ctx.field
    n = len(qb)
    if n == 0:
        raise PreconditionError("unit ideal has no local algebra")
    ops = []
    for i in range(ctx.d):
        cols = []
        for m in qb:
            mm = list(m)
            mm[i] += 1
            xim = ctx.monomial(tuple(mm))
            nf = G.normal_form(xim)
            col = [field.zero] * n
            for mono, c in nf.terms.items():
                col[qb.index[mono]] = c
            cols.append(col)
        ops.append(DenseMatrix(field, [[cols[j][i2] for j in range(n)] for i2 in range(n)]))
    return LocalAlgebraModel(ctx, qb, ops)


def centroid(model):
    """Coordinate-wise average of the support: (tr X_1, ..., tr X_d) / n."""
    field = model.ctx.field
    if field.characteristic and model.n % field.characteristic == 0:
        raise PreconditionError(
            f"characteristic {field.characteristic} divides the colength {model.n}")
    inv_n = field.inv_int(model.n)
    return tuple(X.trace() * inv_n for X in model.ops)


def translate_ideal(I, a):
    """Image of I under x_i -> x_i + a_i (moves support by -a)."""
    ctx = I.ctx
    if len(a) != ctx.d:
        raise PreconditionError("translation vector length must match")
    images = []
    for i, ai in enumerate(a):
        if isinstance(ai, int):
            ai = ctx.field.from_int(ai)
        images.append(ctx.variable(i) + ctx.const(ai))
    return Ideal(ctx, [g.substitute(images) for g in I.gens])


def _model_of(I):
    if isinstance(I, LocalAlgebraModel):
        return I
    G = I if isinstance(I, GroebnerBasis) else buchberger(I)
    return multiplication_operators(G)


def is_primary_at_origin(I):
    """True when some power of (x_1, ..., x_d) lies in I."""
    model = _model_of(I)
    chain = model.maximal_ideal_chain()
    return chain[-1].dim == 0


def local_hilbert_function(I):
    """h_j = dim m^j/(m^(j+1)) for an ideal primary at the origin."""
    model = _model_of(I)
    chain = model.maximal_ideal_chain()
    if chain[-1].dim != 0:
        raise PreconditionError("ideal is not primary at the origin")
    dims = [s.dim for s in chain]
    return HilbertFunction(dims[j] - dims[j + 1] for j in range(len(dims) - 1))


def embedding_reduction(I):
    """Isomorphic presentation in h_1 = dim m/m^2 variables.

    Eliminates d - h_1 variables along ideal elements with independent linear
    parts; the image ideal is the exact kernel of the substitution map, so
    colength and local Hilbert function are preserved.
    """
    ctx = I.ctx
    G = buchberger(I)
    model = multiplication_operators(G)
    chain = model.maximal_ideal_chain()
    if chain[-1].dim != 0:
        raise PreconditionError("embedding reduction needs an ideal primary at the origin")
    dims = [s.dim for s in chain]
    h1 = dims[1] - dims[2] if len(dims) > 2 else dims[1]
    d = ctx.d
    if h1 == d:
        return I
    field = ctx.field
    n = model.n
    w2 = chain[2] if len(chain) > 2 else RowSpace(field)

    def reduce_mod(space, vec):
        v = list(vec)
        for piv, row, _ in space.rows:
            c = v[piv]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] - c * x
        return v

    unit = model.unit_vector()
    var_vecs = [model.ops[i].apply(unit) for i in range(d)]
    reduced_cols = [reduce_mod(w2, v) for v in var_vecs]
    mat = DenseMatrix(field, [[reduced_cols[i][r] for i in range(d)] for r in range(n)])
    combos = kernel_basis(mat)
    combo_rows, _ = rref(combos, field)
    # monomial vectors of degree 2..n, tracked, to solve for the m^2 tails
    tracked = RowSpace(field, track=True)
    tail_monos = []
    for j in range(2, n + 1):
        for m in _monomials_of_degree(d, j):
            tracked.add(model.vector_of(ctx.monomial(m), G))
            tail_monos.append(m)
    substitutions = {}
    for row in combo_rows:
        pivot = next(i for i, c in enumerate(row) if c)
        lin = ctx.zero()
        lvec = [field.zero] * n
        for i, c in enumerate(row):
            if c:
                lin = lin + ctx.variable(i).scale(c)
                lvec = [a + c * b for a, b in zip(lvec, var_vecs[i])]
        combo = tracked.add([-x for x in lvec])
        if combo is None:
            raise ArithmeticError("linear part not in the square of the maximal ideal")
        tail = ctx.zero()
        for idx, c in combo.items():
            if idx >= len(tail_monos):
                raise ArithmeticError("tail solve referenced a non-monomial vector")
            tail = tail + ctx.monomial(tail_monos[idx], c)
        g = lin + tail
        if G.normal_form(g):
            raise ArithmeticError("constructed element is not in the ideal")
        substitutions[pivot] = ctx.variable(pivot) - g

    keep = [i for i in range(d) if i not in substitutions]
    images = [substitutions.get(i, ctx.variable(i)) for i in range(d)]
    # iterate until the eliminated variables only occur above the colength degree
    final = list(images)
    for _ in range(n + 1):
        final = [_truncate_above(p.substitute(images), n) for p in final]
    for p in final:
        for m in p.terms:
            if any(m[i] for i in substitutions):
                raise ArithmeticError("substitution did not eliminate the variables")
    new_ctx = VariableContext(field, [ctx.names[i] for i in keep], dual=ctx.dual)
    proj = {i: k for k, i in enumerate(keep)}
    out = []
    for g in I.gens:
        img = g.substitute(final)
        terms = {}
        for m, c in img.terms.items():
            mm = tuple(m[i] for i in keep)
            terms[mm] = terms.get(mm, field.zero) + c
        p = Polynomial(new_ctx, terms)
        if p:
            out.append(p)
    return Ideal(new_ctx, out)


def _truncate_above(p, n):
    return Polynomial(p.ctx, {m: c for m, c in p.terms.items() if mono_deg(m) <= n})


def split_rational_support(I):
    """Primary decomposition over points with coordinates in the base field.

    Simultaneous generalized-eigenspace splitting of the commuting operators,
    eigenvalues found by rational-root search on characteristic polynomials.
    Raises IndeterminateSupport when a factor has no certified rational root.
    """
    G = buchberger(I)
    model = multiplication_operators(G)
    ctx, field, n = I.ctx, I.ctx.field, model.n
    # each part: list of ambient coordinate vectors spanning an invariant subspace
    parts = [[_unit(field, n, i) for i in range(n)]]
    for i in range(ctx.d):
        refined = []
        for basis in parts:
            refined.extend(_split_by(model.ops[i], basis, field))
        parts = refined
    out = []
    for basis in parts:
        point = []
        for i in range(ctx.d):
            point.append(_single_eigenvalue(_restrict(model.ops[i], basis, field), field))
        start = _project_of_unit(parts, basis, model, field)
        piece = cyclic_annihilator_gb(ctx, lambda j, v: model.ops[j].apply(v), start)
        if len(piece.quotient_basis()) != len(basis):
            raise ArithmeticError("component colength mismatch")
        out.append((tuple(point), piece))
    out.sort(key=lambda pi: tuple(repr(c) for c in pi[0]))
    if sum(len(piece.quotient_basis()) for _, piece in out) != n:
        raise ArithmeticError("component colengths do not sum to the total")
    return [(pt, Ideal(ctx, piece.elements)) for pt, piece in out]


def _unit(field, n, i):
    return [field.one if j == i else field.zero for j in range(n)]


def _restrict(X, basis, field):
    """Matrix of X on the invariant subspace spanned by basis (columns)."""
    rs = RowSpace(field, track=True)
    for v in basis:
        if rs.add(v) is not None:
            raise ArithmeticError("subspace basis is dependent")
    r = len(basis)
    cols = []
    for v in basis:
        combo = rs.add(X.apply(v))
        if combo is None:
            raise ArithmeticError("subspace is not invariant")
        cols.append([combo.get(idx, field.zero) for idx in range(r)])
    return DenseMatrix(field, [[cols[j][i] for j in range(r)] for i in range(r)])


def _split_by(X, basis, field):
    r = len(basis)
    if r == 0:
        return []
    R = _restrict(X, basis, field)
    coeffs = charpoly(R)
    roots = rational_roots(coeffs, field)
    if sum(roots.values()) != r:
        raise IndeterminateSupport("support not rational")
    if len(roots) == 1:
        return [basis]
    out = []
    for a in sorted(roots, key=repr):
        # generalized eigenspace: kernel of (R - a)^r in subspace coordinates
        shifted = DenseMatrix(field, [[R.rows[i][j] - (a if i == j else field.zero)
                                       for j in range(r)] for i in range(r)])
        power = DenseMatrix.identity(field, r)
        for _ in range(r):
            power = shifted.matmul(power)
        ker = kernel_basis(power)
        sub = []
        for kv in ker:
            vec = [field.zero] * len(basis[0])
            for c, bv in zip(kv, basis):
                if c:
                    vec = [x + c * y for x, y in zip(vec, bv)]
            sub.append(vec)
        out.append(sub)
    return out


def _single_eigenvalue(R, field):
    roots = rational_roots(charpoly(R), field)
    if len(roots) != 1 or sum(roots.values()) != R.nrows:
        raise IndeterminateSupport("support not rational")
    return next(iter(roots))


def _project_of_unit(parts, target, model, field):
    """Component of 1 in the target factor of the direct sum decomposition."""
    n = model.n
    rs = RowSpace(field, track=True)
    order = []
    for basis in parts:
        for v in basis:
            rs.add(v)
            order.append(basis is target)
    combo = rs.add(model.unit_vector())
    if combo is None:
        raise ArithmeticError("decomposition does not span")
    out = [field.zero] * n
    flat = [v for basis in parts for v in basis]
    for idx, c in combo.items():
        if order[idx] and c:
            out = [x + c * y for x, y in zip(out, flat[idx])]
    return out


def charpoly(M):
    """Characteristic polynomial det(xI - M), coefficients descending, monic.

    Berkowitz's division-free algorithm, valid over any field including small
    characteristic.
    """
    field = M.field
    n = M.nrows
    one, zero = field.one, field.zero
    if n == 0:
        return [one]
    A = M.rows
    C = [one, -A[0][0]]
    for i in range(1, n):
        R = A[i][:i]
        col = [A[k][i] for k in range(i)]
        sub = [row[:i] for row in A[:i]]
        vals = [one, -A[i][i]]
        v = col
        for k in range(2, i + 2):
            if k > 2:
                v = [sum((sub[r][c] * v[c] for c in range(i) if v[c]), start=zero)
                     for r in range(i)]
            dot = zero
            for c in range(i):
                if v[c]:
                    dot = dot + R[c] * v[c]
            vals.append(-dot)
        newC = [zero] * (i + 2)
        for r in range(i + 2):
            acc = zero
            for c in range(min(r, len(C) - 1) + 1):
                if r - c < len(vals):
                    acc = acc + vals[r - c] * C[c]
            newC[r] = acc
        C = newC
    return C


def rational_roots(coeffs_desc, field):
    """Roots in the base field with multiplicities, by explicit search.

    Over Q: rational-root candidates from divisor enumeration (trial-division
    factoring with a bound; an unfactorable constant term is reported as
    indeterminate rather than guessed).  Over F_p: all residues are tried for
    moderate p.
    """
    if field == QQ:
        return _rational_roots_qq(coeffs_desc)
    p = field.characteristic
    if p > 4096:
        raise IndeterminateSupport(f"root search over F_{p} is out of range")
    roots = {}
    coeffs = list(coeffs_desc)
    for v in range(p):
        a = field.from_int(v)
        while len(coeffs) > 1 and not _poly_eval(coeffs, a, field):
            coeffs = _deflate(coeffs, a, field)
            roots[a] = roots.get(a, 0) + 1
    return roots


def _poly_eval(coeffs, a, field):
    acc = field.zero
    for c in coeffs:
        acc = acc * a + c
    return acc


def _deflate(coeffs, a, field):
    out = []
    acc = field.zero
    for c in coeffs[:-1]:
        acc = acc * a + c
        out.append(acc)
    return out


def _rational_roots_qq(coeffs_desc):
    roots = {}
    coeffs = list(coeffs_desc)

    def strip_zero_roots():
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
            z = rat(0)
            roots[z] = roots.get(z, 0) + 1

    strip_zero_roots()
    while len(coeffs) > 1:
        den = 1
        for c in coeffs:
            q = int(c.denominator)
            den = den * q // _igcd(den, q)
        ints = [int(c * den) for c in coeffs]
        g = 0
        for c in ints:
            g = _igcd(g, abs(c))
        if g > 1:
            ints = [c // g for c in ints]
        dn = _bounded_divisors(abs(ints[-1]))
        dq = _bounded_divisors(abs(ints[0]))
        if dn is None or dq is None:
            raise IndeterminateSupport("support not rational (root search inconclusive)")
        found = None
        for pnum in sorted(dn):
            for qden in sorted(dq):
                if _igcd(pnum, qden) != 1:
                    continue
                for s in (1, -1):
                    cand = rat(s * pnum, qden)
                    if not _poly_eval(coeffs, cand, QQ):
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return roots
        while len(coeffs) > 1 and not _poly_eval(coeffs, found, QQ):
            coeffs = _deflate(coeffs, found, QQ)
            roots[found] = roots.get(found, 0) + 1
        strip_zero_roots()
    return roots


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


_DIVISOR_BOUND = 10 ** 6


def _bounded_divisors(n):
    if n == 0:
        return {1}
    if n > 10 ** 24:
        return None
    factors = {}
    m = n
    p = 2
    while p * p <= m and p <= _DIVISOR_BOUND:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        if m > _DIVISOR_BOUND * _DIVISOR_BOUND and not _is_prime_int(m):
            return None
        factors[m] = factors.get(m, 0) + 1
    divs = {1}
    for q, e in factors.items():
        divs = {d * q ** k for d in divs for k in range(e + 1)}
    return divs


def _is_prime_int(n):
    from .scalars import is_prime
    return is_prime(n)


def enumerate_local_hfs(d, n):
    """Hilbert functions of all order ideals of n monomials in d variables."""
    if not (1 <= d <= 4):
        raise PreconditionError("census is implemented for 1 <= d <= 4")
    if not (1 <= n <= 8):
        raise PreconditionError("census is implemented for 1 <= n <= 8")
    key = GREVLEX.key
    out = set()
    zero = (0,) * d

    def extend(current, last_key, degs):
        if len(current) == n:
            hf = [0] * (max(degs) + 1)
            for dg in degs:
                hf[dg] += 1
            out.add(HilbertFunction(hf))
            return
        candidates = set()
        for m in current:
            for i in range(d):
                mm = list(m)
                mm[i] += 1
                mm = tuple(mm)
                if mm in current or key(mm) <= last_key:
                    continue
                ok = True
                for j in range(d):
                    if mm[j]:
                        prev = list(mm)
                        prev[j] -= 1
                        if tuple(prev) not in current:
                            ok = False
                            break
                if ok:
                    candidates.add(mm)
        for mm in sorted(candidates, key=key):
            current.add(mm)
            extend(current, key(mm), degs + [mono_deg(mm)])
            current.remove(mm)

    extend({zero}, key(zero), [0])
    return out
