"""The rank-12 skew form of a (1,4,3) ideal, the projection to homogeneous
ideals, coordinate changes, and the top-level smoothability classifier.

A colength-8 local algebra with Hilbert function (1,4,3) corresponds to a
3-dimensional space of dual quadrics; the Pfaffian of the associated 12 x 12
skew-symmetric matrix vanishes exactly on the ideals that are limits of
distinct points.  Everything else of colength at most 8 is always such a
limit, which the classifier turns into a decision procedure.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .apolarity import pairing, perp
from .artin import (IndeterminateSupport, centroid, embedding_reduction,
                    is_primary_at_origin, local_hilbert_function,
                    multiplication_operators, split_rational_support,
                    translate_ideal)
from .groebner import (GroebnerBasis, Ideal, buchberger, ideal_equal,
                       initial_ideal)
from .linalg import DenseMatrix, RowSpace, determinant, kernel_basis, pfaffian
from .poly import mono_deg


@dataclass
class PfaffianReport:
    dual_quadrics: list
    block_matrix: DenseMatrix
    intrinsic_matrix: DenseMatrix
    pfaffian_block: object
    pfaffian_intrinsic: object
    vanishes: bool

    def ratio(self):
        """pfaffian_intrinsic / pfaffian_block when both are nonzero."""
        if not self.pfaffian_block:
            return None
        return self.pfaffian_intrinsic / self.pfaffian_block


def salmon_turnbull_pfaffian(arg):
    """Pfaffian report of a (1,4,3) ideal or of a 3-space of dual quadrics.

    The block matrix is assembled from the symmetric coefficient matrices of
    the dual quadrics; the intrinsic matrix represents the wedge-valued form
    on linear forms tensored with the quadric coquotient, in the basis dual
    to the halved quadrics, so the two Pfaffians agree up to one universal
    scalar and vanish together.
    """
    if isinstance(arg, (Ideal, GroebnerBasis)):
        G = arg if isinstance(arg, GroebnerBasis) else buchberger(arg)
        ctx = G.ctx
        if ctx.d != 4:
            raise PreconditionError("the Pfaffian criterion lives in 4 variables")
        hf = local_hilbert_function(G)
        if tuple(hf) != (1, 4, 3):
            raise PreconditionError(f"wrong Hilbert function {hf}, need (1,4,3)")
        quadrics = perp(Ideal(ctx, G.elements), 2)
    else:
        quadrics = list(arg)
    if len(quadrics) != 3:
        raise PreconditionError("need a 3-dimensional space of dual quadrics")
    dctx = quadrics[0].ctx
    if dctx.d != 4:
        raise PreconditionError("the Pfaffian criterion lives in 4 variables")
    field = dctx.field
    if field.characteristic in (2, 3):
        raise PreconditionError("characteristic 2 and 3 are excluded")
    for q in quadrics:
        if not q or not q.is_homogeneous() or q.degree() != 2:
            raise PreconditionError("dual generators must be nonzero quadrics")
    half = field.inv_int(2)
    mats = []
    for q in quadrics:
        A = [[field.zero] * 4 for _ in range(4)]
        for m, c in q.terms.items():
            idx = [i for i, e in enumerate(m) if e]
            if len(idx) == 1:
                i = idx[0]
                if m[i] == 2:
                    A[i][i] = c
                else:
                    raise PreconditionError("dual generators must be quadrics")
            else:
                i, j = idx
                A[i][j] = c * half
                A[j][i] = c * half
        mats.append(A)
    A1, A2, A3 = mats
    zero4 = [[field.zero] * 4 for _ in range(4)]

    def neg(A):
        return [[-x for x in row] for row in A]

    block = _stack_blocks([[zero4, A1, neg(A2)],
                           [neg(A1), zero4, A3],
                           [A2, neg(A3), zero4]], field)
    pf_block = pfaffian(block)
    intrinsic = _intrinsic_matrix(quadrics, field)
    pf_intrinsic = pfaffian(intrinsic)
    if bool(pf_block) != bool(pf_intrinsic):
        raise ArithmeticError("block and intrinsic Pfaffians disagree on vanishing")
    return PfaffianReport(dual_quadrics=quadrics, block_matrix=block,
                          intrinsic_matrix=intrinsic, pfaffian_block=pf_block,
                          pfaffian_intrinsic=pf_intrinsic, vanishes=not pf_block)


def _stack_blocks(blocks, field):
    rows = []
    for brow in blocks:
        for i in range(4):
            rows.append([x for blk in brow for x in blk[i]])
    return DenseMatrix(field, rows)


def _intrinsic_matrix(quadrics, field):
    """Gram matrix of (l1 l2) wedge q1 wedge q2 on the 12-dimensional space,
    computed through multiplication in the quotient of the quadrics."""
    deg2 = list(_deg2_monos())
    # primal quadrics orthogonal to the three duals: rows of the pairing kernel
    pair_rows = [[q.terms.get(m, field.zero) * field.from_int(_fact(m)) for m in deg2]
                 for q in quadrics]
    orth = kernel_basis(DenseMatrix(field, pair_rows))
    if len(orth) != 7:
        raise PreconditionError("dual quadrics are linearly dependent")
    # coquotient basis dual to the halved quadrics, as combinations of monomials
    # whose pairing matrix against the quadrics is invertible
    rs = RowSpace(field, track=True)
    for v in orth:
        rs.add(v)
    cob = []
    cob_slot = {}   # insertion index in rs -> position in cob
    for i, m in enumerate(deg2):
        vec = [field.zero] * len(deg2)
        vec[i] = field.one
        if rs.add(vec) is None:
            cob_slot[7 + i] = len(cob)
            cob.append(m)
    if len(cob) != 3:
        raise ArithmeticError("coquotient basis extraction failed")
    P = [[_pair_mono(m, q, field) for q in quadrics] for m in cob]
    two = field.from_int(2)
    Pinv = _inverse_3x3(P, field)
    # mbar_i = sum_a C[a][i] cob_a with C = 2 * Pinv^T  (so <mbar_i, Q_j> = 2 delta_ij)
    C = [[two * Pinv[i][a] for i in range(3)] for a in range(3)]
    # multiplication table x_j x_j' expressed over mbar
    red_cache = {}

    def mbar_coords(j, jp):
        key = (min(j, jp), max(j, jp))
        if key in red_cache:
            return red_cache[key]
        m = [0, 0, 0, 0]
        m[j] += 1
        m[jp] += 1
        vec = [field.zero] * len(deg2)
        vec[deg2.index(tuple(m))] = field.one
        combo = rs.add(vec)
        if combo is None:
            raise ArithmeticError("quadric monomial escaped the span")
        ucoords = [field.zero] * 3
        for idx, c in combo.items():
            if idx >= 7:
                ucoords[cob_slot[idx]] = c
        # coords over mbar: solve C * w = ucoords
        w = _solve_3x3(C, ucoords, field)
        red_cache[key] = w
        return w

    # basis x_1 (x) mbar_3, ..., x_4 (x) mbar_1: block i runs over 3, 2, 1
    blocks = [2, 1, 0]
    n = 12
    rows = [[field.zero] * n for _ in range(n)]
    for bi, i in enumerate(blocks):
        for j in range(4):
            r = 4 * bi + j
            for bip, ip in enumerate(blocks):
                for jp in range(4):
                    c = 4 * bip + jp
                    if i == ip:
                        continue
                    ipp = 3 - i - ip
                    coeff = mbar_coords(j, jp)[ipp]
                    sign = _perm_sign((ipp, i, ip))
                    rows[r][c] = coeff * field.from_int(sign)
    return DenseMatrix(field, rows)


def _deg2_monos():
    out = []
    for i in range(4):
        for j in range(i, 4):
            m = [0, 0, 0, 0]
            m[i] += 1
            m[j] += 1
            out.append(tuple(m))
    return out


def _fact(m):
    out = 1
    for e in m:
        for k in range(2, e + 1):
            out *= k
    return out


def _pair_mono(m, q, field):
    c = q.terms.get(m, field.zero)
    return c * field.from_int(_fact(m))


def _inverse_3x3(P, field):
    M = DenseMatrix(field, P)
    det = determinant(M)
    if not det:
        raise ArithmeticError("pairing matrix is singular")
    cof = [[field.zero] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [[P[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
            sign = field.one if (i + j) % 2 == 0 else -field.one
            cof[j][i] = sign * minor / det
    return cof


def _solve_3x3(C, b, field):
    M = DenseMatrix(field, C)
    det = determinant(M)
    if not det:
        raise ArithmeticError("singular basis change")
    out = []
    for k in range(3):
        Mk = [[C[i][j] if j != k else b[i] for j in range(3)] for i in range(3)]
        out.append(determinant(DenseMatrix(field, Mk)) / det)
    return out


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def project_to_graded(I):
    """Top-degree-form projection onto homogeneous (1,4,3) ideals.

    For an ideal in the chart of a (1,4,3) monomial ideal this is the initial
    ideal for weight (1,1,1,1); the result must have graded Hilbert function
    (1,4,3).  An ideal that is itself local with that Hilbert function
    projects to itself, which is verified.
    """
    ctx = I.ctx
    if ctx.d != 4:
        raise PreconditionError("projection is defined in 4 variables")
    out = initial_ideal(I, (1, 1, 1, 1))
    Gout = buchberger(out)
    qb = Gout.quotient_basis()
    counts = {}
    for m in qb:
        counts[mono_deg(m)] = counts.get(mono_deg(m), 0) + 1
    hf = tuple(counts.get(j, 0) for j in range(max(counts, default=0) + 1))
    if hf != (1, 4, 3):
        raise PreconditionError(f"wrong Hilbert function {hf} after projection, need (1,4,3)")
    if is_primary_at_origin(I):
        if tuple(local_hilbert_function(I)) == (1, 4, 3) and not ideal_equal(out, I):
            raise ArithmeticError("local (1,4,3) ideal failed to project to itself")
    return Ideal(ctx, Gout.elements)


def change_coordinates(I, g):
    """Image of I under the linear substitution x -> g x."""
    ctx = I.ctx
    field = ctx.field
    rows = [[field.from_int(x) if isinstance(x, int) else x for x in row] for row in g]
    if len(rows) != ctx.d or any(len(r) != ctx.d for r in rows):
        raise PreconditionError("coordinate change must be a d x d matrix")
    if not determinant(DenseMatrix(field, rows)):
        raise PreconditionError("coordinate change is singular")
    xs = ctx.variables()
    images = []
    for i in range(ctx.d):
        img = ctx.zero()
        for j in range(ctx.d):
            if rows[i][j]:
                img = img + xs[j].scale(rows[i][j])
        images.append(img)
    return Ideal(ctx, [p.substitute(images) for p in I.gens])


@dataclass
class SmoothabilityVerdict:
    outcome: str                 # "Smoothable" | "NotSmoothable" | "Indeterminate"
    evidence: tuple
    pfaffian: object = None

    def __bool__(self):
        return self.outcome == "Smoothable"


def classify_smoothable(I):
    """Decide membership in the closure of the distinct-point locus.

    Split over rational support; local pieces of colength at most 7 are
    always limits of distinct points, as are colength-8 pieces whose local
    Hilbert function differs from (1,4,3).  The (1,4,3) case reduces to four
    variables and is decided by the vanishing of the Pfaffian.
    """
    ctx = I.ctx
    if ctx.field.characteristic in (2, 3):
        raise PreconditionError("characteristic 2 and 3 are excluded")
    G = buchberger(I)
    n = G.colength()
    if n == 0:
        raise PreconditionError("unit ideal is out of range")
    if n > 8:
        raise PreconditionError(f"colength {n} > 8: outside the supported range")
    evidence = [f"colength {n}"]
    try:
        pieces = split_rational_support(Ideal(ctx, G.elements))
    except IndeterminateSupport as exc:
        evidence.append(f"splitting failed: {exc}")
        return SmoothabilityVerdict("Indeterminate", tuple(evidence))
    evidence.append("split into colengths " +
                    str([buchberger(p).colength() for _, p in pieces]))
    pf_value = None
    for point, piece in pieces:
        Gp = buchberger(piece)
        np = Gp.colength()
        if np <= 7:
            continue
        model = multiplication_operators(Gp)
        center = centroid(model)
        local = translate_ideal(piece, center)
        evidence.append("recentered colength-8 piece")
        hf = local_hilbert_function(local)
        evidence.append(f"local Hilbert function {hf}")
        if tuple(hf) != (1, 4, 3):
            continue
        reduced = embedding_reduction(local)
        if reduced.ctx.d != 4:
            raise ArithmeticError("embedding reduction did not reach 4 variables")
        if reduced.ctx != local.ctx:
            evidence.append("reduced to 4 variables")
        graded = project_to_graded(reduced)
        report = salmon_turnbull_pfaffian(graded)
        pf_value = report.pfaffian_block
        evidence.append("pfaffian zero" if report.vanishes
                        else f"pfaffian {report.pfaffian_block}")
        if not report.vanishes:
            return SmoothabilityVerdict("NotSmoothable", tuple(evidence), pf_value)
    return SmoothabilityVerdict("Smoothable", tuple(evidence), pf_value)
