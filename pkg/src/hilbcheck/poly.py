"""Multivariate monomials, monomial orders, polynomials, and the text format.

Monomials are bare exponent tuples.  Polynomials are dicts from exponent
tuple to a nonzero field element, tagged with a VariableContext that fixes
the field and the variable names.  A context may be flagged dual, in which
case its elements are differential polynomials acting on the primal ring.
"""

import re

from .errors import ParseError, PreconditionError
from .fields import QQ, QT, GF

# --- monomial helpers (exponent tuples) ------------------------------------


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        return None
    return out


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MonomialOrder:
    """Total order on monomials: grevlex, lex, or a weight order with tiebreak.

    key(m) is a tuple that sorts consistently with the order, so max() over
    keys picks the leading monomial.
    """

    __slots__ = ("kind", "weight", "tiebreak")

    def __init__(self, kind, weight=None, tiebreak="grevlex"):
        if kind not in ("grevlex", "lex", "weight"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "weight" and weight is None:
            raise ValueError("weight order needs a weight vector")
        if tiebreak not in ("grevlex", "lex"):
            raise ValueError(f"unknown tiebreak {tiebreak!r}")
        self.kind = kind
        self.weight = tuple(weight) if weight is not None else None
        self.tiebreak = tiebreak

    def key(self, m):
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "lex":
            return m
        w = sum(wi * ei for wi, ei in zip(self.weight, m))
        if self.tiebreak == "grevlex":
            return (w, sum(m), tuple(-e for e in reversed(m)))
        return (w, m)

    def compare(self, a, b):
        if len(a) != len(b):
            raise PreconditionError("monomials from different contexts")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def is_global(self, d):
        """True when every variable exceeds 1, i.e. the order is a well-order."""
        one = self.key((0,) * d)
        for i in range(d):
            e = [0] * d
            e[i] = 1
            if self.key(tuple(e)) <= one:
                return False
        return True

    def __repr__(self):
        if self.kind == "weight":
            return f"weight{self.weight}/{self.tiebreak}"
        return self.kind

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.weight == other.weight and self.tiebreak == other.tiebreak)

    def __hash__(self):
        return hash((self.kind, self.weight, self.tiebreak))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def weight_order(w, tiebreak="grevlex"):
    return MonomialOrder("weight", weight=w, tiebreak=tiebreak)


class VariableContext:
    """A polynomial ring presentation: coefficient field plus named variables."""

    __slots__ = ("field", "names", "dual")

    def __init__(self, field, names, dual=False):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        if not names:
            raise ValueError("need at least one variable")
        self.field = field
        self.names = names
        self.dual = dual

    @property
    def d(self):
        return len(self.names)

    def dual_context(self):
        return VariableContext(self.field, self.names, dual=not self.dual)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.d: self.field.one})

    def const(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.d: c})

    def variable(self, i):
        e = [0] * self.d
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def variables(self):
        return [self.variable(i) for i in range(self.d)]

    def monomial(self, mono, coeff=1):
        if isinstance(coeff, int):
            coeff = self.field.from_int(coeff)
        if not coeff:
            return self.zero()
        return Polynomial(self, {tuple(mono): coeff})

    def __eq__(self, other):
        return (isinstance(other, VariableContext) and self.field == other.field
                and self.names == other.names and self.dual == other.dual)

    def __hash__(self):
        return hash((self.field, self.names, self.dual))

    def __repr__(self):
        star = "*" if self.dual else ""
        return f"{self.field}[{', '.join(self.names)}]{star}"


def context(field, names):
    if isinstance(names, str):
        names = names.split()
    return VariableContext(field, names)


class Polynomial:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {m: c for m, c in terms.items() if c}

    def _check(self, other):
        if self.ctx != other.ctx:
            raise PreconditionError("polynomials from different contexts")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ctx == other.ctx and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = -c if s is None else s - c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ctx, out)

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.ctx, out)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = self.ctx.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c):
        if isinstance(c, int):
            c = self.ctx.field.from_int(c)
        if not c:
            return self.ctx.zero()
        return Polynomial(self.ctx, {m: c * x for m, x in self.terms.items()})

    def mul_term(self, mono, coeff):
        if not coeff:
            return self.ctx.zero()
        return Polynomial(self.ctx, {mono_mul(m, mono): coeff * c for m, c in self.terms.items()})

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono_deg(m) for m in self.terms)

    def order_of_vanishing(self):
        """Smallest total degree of a term, or None for zero."""
        if not self.terms:
            return None
        return min(mono_deg(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, j):
        return Polynomial(self.ctx, {m: c for m, c in self.terms.items() if mono_deg(m) == j})

    def weight_initial_form(self, w):
        """Sum of the terms of maximal w-weight; requires a nonzero input."""
        if not self.terms:
            raise PreconditionError("initial form of the zero polynomial")
        w = tuple(w)
        best = max(sum(wi * ei for wi, ei in zip(w, m)) for m in self.terms)
        return Polynomial(self.ctx, {
            m: c for m, c in self.terms.items()
            if sum(wi * ei for wi, ei in zip(w, m)) == best})

    def lm(self, order=GREVLEX):
        if not self.terms:
            return None
        return max(self.terms, key=order.key)

    def lc(self, order=GREVLEX):
        m = self.lm(order)
        return self.ctx.field.zero if m is None else self.terms[m]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        c = self.terms[self.lm(order)]
        if c == self.ctx.field.one:
            return self
        return Polynomial(self.ctx, {m: x / c for m, x in self.terms.items()})

    def partial(self, i):
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                mm = tuple(mm)
                add = c * self.ctx.field.from_int(e)
                s = out.get(mm)
                s = add if s is None else s + add
                if s:
                    out[mm] = s
                elif mm in out:
                    del out[mm]
        return Polynomial(self.ctx, out)

    def substitute(self, images):
        """Evaluate at polynomial images of the variables (same context)."""
        if len(images) != self.ctx.d:
            raise PreconditionError("need one image per variable")
        target = images[0].ctx
        powers = [{0: target.one()} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        out = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def evaluate(self, point):
        if len(point) != self.ctx.d:
            raise PreconditionError("need one value per variable")
        acc = self.ctx.field.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                for _ in range(e):
                    v = v * point[i]
            acc = acc + v
        return acc

    def sorted_terms(self, order=GREVLEX):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __repr__(self):
        return poly_str(self)


def compare(order, a, b):
    """Three-way comparison of monomials: -1, 0, or 1."""
    return order.compare(tuple(a), tuple(b))


# --- printing ----------------------------------------------------------------

_SIMPLE_COEFF = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def _mono_str(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p, order=GREVLEX):
    if not p.terms:
        return "0"
    names = p.ctx.names
    chunks = []
    for m, c in p.sorted_terms(order):
        mono = _mono_str(m, names)
        cs = str(c)
        simple = bool(_SIMPLE_COEFF.match(cs))
        if not mono:
            body = cs if simple else f"({cs})"
        elif simple and cs == "1":
            body = mono
        elif simple and cs == "-1":
            body = f"-{mono}"
        elif simple:
            body = f"{cs}*{mono}"
        else:
            body = f"({cs})*{mono}"
        if not chunks:
            chunks.append(body)
        elif body.startswith("-"):
            chunks.append("- " + body[1:])
        else:
            chunks.append("+ " + body)
    return " ".join(chunks)


# --- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^]))")


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.pos = 0
        self.tokens = []
        self._tokenize()
        self.i = 0

    def _tokenize(self):
        pos = 0
        while pos < len(self.text):
            m = _TOKEN.match(self.text, pos)
            if m is None:
                rest = self.text[pos:].strip()
                if not rest:
                    break
                raise ParseError(f"unexpected character {rest[0]!r}", column=pos + 1)
            if m.group(1) is not None:
                self.tokens.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, col = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", column=col + 1)

    def parse(self):
        p = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", column=col + 1)
        return p

    def expr(self):
        sign = 1
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                if val == "-":
                    sign = -sign
            else:
                break
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val, col = self.peek()
            if kind == "op" and val == "*":
                self.next()
                p = p * self.factor()
            elif kind == "op" and val == "/":
                self.next()
                q = self.factor()
                if q.degree() not in (None, 0):
                    raise ParseError("division by a non-constant", column=col + 1)
                if not q:
                    raise ParseError("division by zero", column=col + 1)
                c = q.terms[(0,) * q.ctx.d]
                p = p.scale(self.ctx.field.one / c)
            else:
                return p

    def factor(self):
        kind, val, col = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return -self.factor()
        p = self.atom()
        kind, val, col = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, e, col = self.next()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", column=col + 1)
            p = p ** e
        return p

    def atom(self):
        kind, val, col = self.next()
        if kind == "int":
            return self.ctx.const(val)
        if kind == "name":
            if val in self.ctx.names:
                return self.ctx.variable(self.ctx.names.index(val))
            if val == "t" and self.ctx.field == QT:
                return self.ctx.const(QT.t)
            raise ParseError(f"unknown variable {val!r}", column=col + 1)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected token {val!r}", column=col + 1)


def parse_polynomial(text, ctx):
    """Parse one polynomial in the ideal-file expression grammar."""
    return _Parser(text, ctx).parse()


# --- ideal file format --------------------------------------------------------


def parse_ideal_file(text):
    """Parse the ideal file format; returns (ctx, [Polynomial])."""
    lines = text.splitlines()
    meat = []
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            meat.append((lineno, body))
    if len(meat) < 3:
        raise ParseError("ideal file needs a field line, a vars line, and 'ideal:'")
    (_, field_line), (_, vars_line), (hdrno, header) = meat[0], meat[1], meat[2]
    ftok = field_line.split()
    if not ftok or ftok[0] != "field":
        raise ParseError("first line must be 'field Q' | 'field F <p>' | 'field Qt'", line=meat[0][0])
    if ftok[1:] == ["Q"]:
        field = QQ
    elif ftok[1:] == ["Qt"]:
        field = QT
    elif len(ftok) == 3 and ftok[1] == "F":
        try:
            field = GF(int(ftok[2]))
        except ValueError as exc:
            raise ParseError(str(exc), line=meat[0][0])
    else:
        raise ParseError(f"bad field line {field_line!r}", line=meat[0][0])
    vtok = vars_line.split()
    if not vtok or vtok[0] != "vars" or len(vtok) < 2:
        raise ParseError("second line must be 'vars <name_1> ... <name_d>'", line=meat[1][0])
    names = vtok[1:]
    if field == QT and "t" in names:
        raise ParseError("'t' is the field parameter and cannot be a variable", line=meat[1][0])
    try:
        ctx = VariableContext(field, names)
    except ValueError as exc:
        raise ParseError(str(exc), line=meat[1][0]) from None
    if header != "ideal:":
        raise ParseError("expected 'ideal:' line", line=hdrno)
    polys = []
    for lineno, body in meat[3:]:
        try:
            polys.append(parse_polynomial(body, ctx))
        except ParseError as exc:
            raise ParseError(f"{exc.args[0].split(' (line')[0]}", line=lineno,
                             column=exc.column) from None
    return ctx, polys


def format_ideal_file(ctx, polys, comment=None):
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    if ctx.field == QQ:
        lines.append("field Q")
    elif ctx.field == QT:
        lines.append("field Qt")
    else:
        lines.append(f"field F {ctx.field.p}")
    lines.append("vars " + " ".join(ctx.names))
    lines.append("ideal:")
    for p in polys:
        lines.append(poly_str(p))
    return "\n".join(lines) + "\n"


def parse_points_file(text, field, d=None):
    """One point per line, comma-separated field literals."""
    pts = []
    scratch = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        coords = [c.strip() for c in body.split(",")]
        if d is not None and len(coords) != d:
            raise ParseError(f"expected {d} coordinates, got {len(coords)}", line=lineno)
        if scratch is None:
            scratch = VariableContext(field, [f"_p{i}" for i in range(len(coords))])
        vals = []
        for c in coords:
            p = parse_polynomial(c, scratch)
            if p.degree() not in (None, 0):
                raise ParseError(f"coordinate {c!r} is not a constant", line=lineno)
            vals.append(p.terms.get((0,) * scratch.d, field.zero))
        pts.append(tuple(vals))
    if pts and len({len(p) for p in pts}) != 1:
        raise ParseError("points have inconsistent dimensions")
    return pts
