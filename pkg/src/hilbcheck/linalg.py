"""Dense exact linear algebra over the scalar fields.

Everything here is exact: pivoted elimination for rank and kernels, Bareiss
fraction-free elimination for determinants, skew elimination for Pfaffians,
and a discrete-valuation elimination for the t-adic valuation of the gcd of
the maximal minors of a polynomial matrix.
"""

import random

from .fields import QQ, QT
from .scalars import rat
from .upoly import RatFunc, zgcd, ztrim, zprim, zval


class DenseMatrix:
    """Row-major exact matrix; all entries live in one coefficient field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = [[_coerce(field, x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    @staticmethod
    def identity(field, n):
        one, zero = field.one, field.zero
        return DenseMatrix(field, [[one if i == j else zero for j in range(n)]
                                   for i in range(n)])

    @staticmethod
    def zero(field, nrows, ncols):
        z = field.zero
        return DenseMatrix(field, [[z] * ncols for _ in range(nrows)])

    def copy_rows(self):
        return [row[:] for row in self.rows]

    def transpose(self):
        return DenseMatrix(self.field, [[self.rows[i][j] for i in range(self.nrows)]
                                        for j in range(self.ncols)])

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        z = self.field.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    if a:
                        acc = acc + a * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return DenseMatrix(self.field, out)

    def apply(self, vec):
        z = self.field.zero
        out = []
        for i in range(self.nrows):
            acc = z
            row = self.rows[i]
            for k, v in enumerate(vec):
                if v:
                    acc = acc + row[k] * v
            out.append(acc)
        return out

    def trace(self):
        acc = self.field.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and self.field == other.field
                and self.rows == other.rows)

    def __repr__(self):
        return "\n".join("[" + ", ".join(map(str, row)) + "]" for row in self.rows)


def _coerce(field, x):
    if isinstance(x, int):
        return field.from_int(x)
    if field == QQ:
        if type(x) is type(rat(0)):
            return x
        if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, RatFunc):
            return rat(int(x.numerator), int(x.denominator))
        raise TypeError(f"mixed coefficient domains: {x!r} is not rational")
    if field == QT:
        if isinstance(x, RatFunc):
            return x
        if hasattr(x, "numerator") and hasattr(x, "denominator"):
            return RatFunc((int(x.numerator),), (int(x.denominator),))
        raise TypeError(f"mixed coefficient domains: {x!r} is not in Q(t)")
    if type(x) is field.elem:
        return x
    raise TypeError(f"mixed coefficient domains: {x!r} is not in {field}")


class RowSpace:
    """Incremental echelon span with optional dependency coefficients.

    add(v) returns None when v enlarges the span, else (when track=True) the
    coefficients expressing v over the vectors added so far.
    """

    __slots__ = ("field", "track", "rows", "pivots", "count")

    def __init__(self, field, track=False):
        self.field = field
        self.track = track
        self.rows = []      # (pivot_col, vector, combo dict idx -> coeff)
        self.pivots = []
        self.count = 0

    @property
    def dim(self):
        return len(self.rows)

    def add(self, vec):
        v = list(vec)
        combo = {self.count: self.field.one} if self.track else None
        self.count += 1
        for piv, row, rcombo in self.rows:
            c = v[piv]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] - c * x
                if self.track:
                    for idx, x in rcombo.items():
                        combo[idx] = combo.get(idx, self.field.zero) - c * x
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            # residual 0 = vec + sum(combo[i] * earlier_i): report vec over the earlier vectors
            if self.track:
                combo.pop(self.count - 1)
                return {idx: -c for idx, c in combo.items() if c}
            return {}
        lead = v[piv]
        if lead != self.field.one:
            v = [x / lead for x in v]
            if self.track:
                combo = {idx: c / lead for idx, c in combo.items()}
        self.rows.append((piv, v, combo))
        self.pivots.append(piv)
        return None

    def contains(self, vec):
        v = list(vec)
        for piv, row, _ in self.rows:
            c = v[piv]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] - c * x
        return not any(v)


def rref(rows, field):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        lead = mat[r][c]
        if lead != field.one:
            mat[r] = [x / lead for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [mat[i][j] - f * mat[r][j] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r], pivots


def mat_rank(m):
    """Rank over the entry field by exact elimination."""
    if m.field == QQ:
        return _rank_int(_integer_rows(m.rows))
    rs = RowSpace(m.field)
    for row in m.rows:
        rs.add(row)
    return rs.dim


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = int(x.denominator)
            den = den * d // _gcd(den, d)
        out.append([int(x.numerator) * (den // int(x.denominator)) for x in row])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _rank_int(mat):
    # fraction-free forward elimination (Bareiss), integer arithmetic only
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, nrows):
            mic = mat[i][c]
            row_i, row_r = mat[i], mat[r]
            if mic:
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] * piv - mic * row_r[j]) // prev
            else:
                for j in range(c, ncols):
                    row_i[j] = row_i[j] * piv // prev
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def kernel_basis(m):
    """Basis of the right null space; len == ncols - rank."""
    red, pivots = rref(m.rows, m.field)
    field = m.field
    pivset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def determinant(m):
    """Exact determinant via Bareiss fraction-free elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.field.one
    a = m.copy_rows()
    field = m.field
    sign = field.one
    prev = field.one
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return field.zero
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - aik * a[k][j]) / prev
            a[i][k] = field.zero
        prev = piv
    return sign * a[n - 1][n - 1]


def pfaffian(m):
    """Pfaffian of a skew-symmetric even-size matrix, pf([[0,a],[-a,0]]) = a."""
    if m.nrows != m.ncols:
        raise ValueError("pfaffian needs a square matrix")
    if m.nrows % 2 != 0:
        raise ValueError("pfaffian needs even size")
    for i in range(m.nrows):
        if m.rows[i][i]:
            raise ValueError("matrix is not skew-symmetric")
        for j in range(i + 1, m.ncols):
            if m.rows[i][j] != -m.rows[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    return _pf(m.copy_rows(), m.field)


def _pf(a, field):
    n = len(a)
    if n == 0:
        return field.one
    j = next((c for c in range(1, n) if a[0][c]), None)
    if j is None:
        return field.zero
    sign = field.one
    if j != 1:
        # simultaneous row and column swap 1 <-> j flips the sign
        a[1], a[j] = a[j], a[1]
        for row in a:
            row[1], row[j] = row[j], row[1]
        sign = -sign
    piv = a[0][1]
    u = a[0][2:]
    v = a[1][2:]
    schur = []
    for i in range(2, n):
        ui, vi = u[i - 2], v[i - 2]
        row = []
        for k in range(2, n):
            x = a[i][k] + (vi * u[k - 2] - ui * v[k - 2]) / piv
            row.append(x)
        schur.append(row)
    return sign * piv * _pf(schur, field)


# ---------------------------------------------------------------------------
# t-adic valuation of the gcd of maximal minors


def t_adic_minor_valuation(m, size, cross_check=True):
    """Valuation of gcd of all size x size minors of a Q[t]-matrix.

    Computed by elimination over the local ring at t (pivots of minimal
    valuation; the answer is the sum of the pivot valuations), and optionally
    cross-checked against a seeded sample of full minors.  Returns None when
    the rank over Q(t) is below `size` (the valuation is infinite).
    """
    if m.field != QT:
        raise TypeError("t-adic valuation needs entries in Q(t)")
    if m.nrows < size or m.ncols < size:
        raise ValueError("matrix smaller than requested minor size")
    polys = _polynomial_entries(m)
    if not _full_rank_certificate(m, polys, size):
        return None
    total = _dvr_pivot_valuations(polys, size)
    if cross_check:
        g = minor_gcd_sample(m, size, count=32, seed=271828)
        if not g:
            raise ArithmeticError("sampled minors all vanish yet rank is full")
        if zval(g) != total:
            raise ArithmeticError(
                f"valuation certificate {total} disagrees with sampled gcd t^{zval(g)}")
    return total


def _polynomial_entries(m):
    """Entries as Q-coefficient lists; denominators must be t-free."""
    out = []
    for row in m.rows:
        prow = []
        for x in row:
            if len(x.den) > 1:
                raise ValueError("entry is not a polynomial in t")
            d = rat(x.den[0])
            prow.append([rat(c) / d for c in x.num])
        out.append(prow)
    return out


def _full_rank_certificate(m, polys, size):
    # rank at any specialization is a lower bound for the rank over Q(t)
    for c in (rat(1), rat(-2), rat(5, 3), rat(7), rat(-11, 4)):
        rows = []
        for prow in polys:
            row = []
            for coeffs in prow:
                acc = rat(0)
                for cf in reversed(coeffs):
                    acc = acc * c + cf
                row.append(acc)
            rows.append(row)
        if _rank_int(_integer_rows(rows)) >= size:
            return True
    # inconclusive by sampling: decide exactly over Q(t)
    rs = RowSpace(QT)
    for row in m.rows:
        rs.add(row)
        if rs.dim >= size:
            return True
    return False


def _dvr_pivot_valuations(polys, size):
    prec = 48
    while True:
        result = _dvr_eliminate(polys, size, prec)
        if result is not None:
            return result
        prec *= 2
        if prec > 4096:
            raise ArithmeticError("t-adic precision exhausted")


def _series_val(s):
    for i, c in enumerate(s):
        if c:
            return i
    return None


def _dvr_eliminate(polys, size, prec):
    # truncated power series elimination; None means precision ran out
    rows = [[list(coeffs[:prec]) for coeffs in prow] for prow in polys]
    live_rows = list(range(len(rows)))
    live_cols = list(range(len(rows[0])))
    total = 0
    p = prec
    for _ in range(size):
        best = None
        for r in live_rows:
            for c in live_cols:
                v = _series_val(rows[r][c][:p])
                if v is not None and (best is None or v < best[0]):
                    best = (v, r, c)
        if best is None or best[0] * 2 + 8 > p:
            return None
        v, pr, pc = best
        total += v
        newp = p - v
        unit = rows[pr][pc][v:p]
        inv = _series_inv(unit, newp)
        pivrow = {c: rows[pr][c][:p] for c in live_cols}
        for r in live_rows:
            if r == pr:
                continue
            e = rows[r][pc][:p]
            ev = _series_val(e)
            if ev is None:
                continue
            f = _series_mul(e[v:], inv, newp)
            for c in live_cols:
                acc = _series_mul(f, pivrow[c], newp)
                tgt = rows[r][c]
                if len(tgt) < newp:
                    tgt.extend([rat(0)] * (newp - len(tgt)))
                for i in range(newp):
                    tgt[i] = tgt[i] - acc[i]
                del tgt[newp:]
        live_rows.remove(pr)
        live_cols.remove(pc)
        p = newp
    return total


def _series_mul(a, b, prec):
    out = [rat(0)] * prec
    for i, ca in enumerate(a):
        if i >= prec:
            break
        if ca:
            top = min(len(b), prec - i)
            for j in range(top):
                if b[j]:
                    out[i + j] += ca * b[j]
    return out


def _series_inv(a, prec):
    if not a or not a[0]:
        raise ZeroDivisionError("series inverse of non-unit")
    inv0 = rat(1) / a[0]
    out = [rat(0)] * prec
    out[0] = inv0
    for k in range(1, prec):
        acc = rat(0)
        top = min(k, len(a) - 1)
        for i in range(1, top + 1):
            if a[i]:
                acc += a[i] * out[k - i]
        out[k] = -acc * inv0
    return out


def minor_gcd_sample(m, size, count=32, seed=271828):
    """Gcd (primitive, in Z[t]) of a seeded sample of nonzero size x size minors.

    Vanishing minors contribute nothing to the gcd, so candidate subsets are
    screened by specialization and rejected when they look singular; a pivot
    subset from one elimination is always included so the sample is nonempty
    whenever the rank is full.
    """
    rng = random.Random(seed)
    polys = _polynomial_entries(m)
    nrows, ncols = len(polys), len(polys[0])
    test_points = (rat(3), rat(5), rat(-7, 2))

    def specialized_det(rsel, csel, x):
        rows = []
        for r in rsel:
            row = []
            for c in csel:
                acc = rat(0)
                for cf in reversed(polys[r][c]):
                    acc = acc * x + cf
                row.append(acc)
            rows.append(row)
        return _det_rat(rows)

    def looks_nonzero(rsel, csel):
        return any(specialized_det(rsel, csel, x) for x in test_points)

    g = ()
    collected = 0
    base = _pivot_minor(polys, size, rat(3))
    if base is not None and looks_nonzero(*base):
        sub = [[polys[r][c] for c in base[1]] for r in base[0]]
        g = zgcd(g, _det_poly_interpolated(sub))
        collected += 1
    attempts = 0
    while collected < count and attempts < 60 * count:
        attempts += 1
        rsel = sorted(rng.sample(range(nrows), size))
        csel = sorted(rng.sample(range(ncols), size))
        if not looks_nonzero(rsel, csel):
            continue
        sub = [[polys[r][c] for c in csel] for r in rsel]
        det = _det_poly_interpolated(sub)
        if not det:
            continue
        g = zgcd(g, det)
        collected += 1
        if g == (1,):
            break
    return g


def _pivot_minor(polys, size, x):
    """Row and column subset carrying a nonzero minor at the specialization x,
    from one pivoted elimination; None when the rank there is below size."""
    rows = []
    for prow in polys:
        row = []
        for coeffs in prow:
            acc = rat(0)
            for cf in reversed(coeffs):
                acc = acc * x + cf
            row.append(acc)
        rows.append(row)
    nrows, ncols = len(rows), len(rows[0])
    used_rows, used_cols = [], []
    live_rows = list(range(nrows))
    work = {r: rows[r][:] for r in live_rows}
    for c in range(ncols):
        if len(used_cols) == size:
            break
        pr = next((r for r in live_rows if work[r][c]), None)
        if pr is None:
            continue
        used_rows.append(pr)
        used_cols.append(c)
        live_rows.remove(pr)
        piv = work[pr][c]
        for r in live_rows:
            f = work[r][c] / piv
            if f:
                work[r] = [a - f * b for a, b in zip(work[r], work[pr])]
    if len(used_cols) < size:
        return None
    return sorted(used_rows), sorted(used_cols)


def _det_poly_interpolated(sub):
    """Determinant of a Q[t]-matrix (coefficient-list entries), primitive in Z[t]."""
    n = len(sub)
    bound = sum(max((len(c) - 1 for c in row), default=0) for row in sub) + 1
    xs = [rat(k) for k in range(bound)]
    ys = []
    for x in xs:
        rows = []
        for row in sub:
            out = []
            for coeffs in row:
                acc = rat(0)
                for cf in reversed(coeffs):
                    acc = acc * x + cf
                out.append(acc)
            rows.append(out)
        ys.append(_det_rat(rows))
    coeffs = _newton_interpolate(xs, ys)
    den = 1
    for c in coeffs:
        d = int(c.denominator)
        den = den * d // _gcd(den, d)
    ints = ztrim([int(c * den) for c in coeffs])
    if not ints:
        return ()
    p = zprim(ints)
    if p[-1] < 0:
        p = tuple(-c for c in p)
    return p


def _det_rat(rows):
    scale = 1
    int_rows = []
    for row in rows:
        den = 1
        for x in row:
            d = int(x.denominator)
            den = den * d // _gcd(den, d)
        scale *= den
        int_rows.append([int(x.numerator) * (den // int(x.denominator)) for x in row])
    d = _det_int(int_rows)
    return rat(d, scale)


def _det_int(a):
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _newton_interpolate(xs, ys):
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form into monomial coefficients
    poly = [rat(0)] * n
    acc = [rat(1)] + [rat(0)] * (n - 1)
    deg = 0
    for j in range(n):
        for i in range(deg + 1):
            poly[i] += coef[j] * acc[i]
        if j < n - 1:
            new = [rat(0)] * n
            for i in range(deg + 1):
                new[i + 1] += acc[i]
                new[i] -= xs[j] * acc[i]
            acc = new
            deg += 1
    while poly and not poly[-1]:
        poly.pop()
    return poly
