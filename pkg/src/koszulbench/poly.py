"""Multivariate polynomials over an exact field, graded slices, ideals.

Monomials are plain exponent tuples; polynomials are {monomial: coefficient}
maps that never store zeros.  All operations are pure and values are treated
as immutable.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InputError
from .fields import QQ
from .linalg import Matrix, SpanBuilder
from .orders import degrevlex

MAX_EXPONENT = 2**15  # overflow guard; desk-scale degrees stay far below this


# ---------------------------------------------------------------- monomials

def mono_mul(a, b):
    m = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in m):
        raise InputError("monomial exponent overflow")
    return m


def mono_divides(a, b):
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


@lru_cache(maxsize=None)
def monomials_of_degree(n, d):
    """All degree-d monomials in n variables, descending degrevlex (x1 > ... > xn)."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []

    def rec(prefix, remaining, pos):
        if pos == n - 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, pos + 1)

    rec((), d, 0)
    order = degrevlex(n)
    out.sort(key=order.key, reverse=True)
    return tuple(out)


# -------------------------------------------------------------------- rings

class Ring:
    """Descriptor of K[x_1..x_n]: variable count, names, coefficient field."""

    __slots__ = ("n", "names", "field")

    def __init__(self, n, field=QQ, names=None):
        if n < 1:
            raise InputError("ring needs at least one variable")
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(n))
        names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise InputError("variable names must be distinct and match the count")
        self.n = n
        self.names = names
        self.field = field

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(self.field.one)

    def const(self, c):
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {(0,) * self.n: c})

    def var(self, i):
        mono = tuple(1 if j == i else 0 for j in range(self.n))
        return Poly(self, {mono: self.field.one})

    def monomial(self, mono, coeff=1):
        coeff = self.field.coerce(coeff)
        if self.field.is_zero(coeff):
            return Poly(self, {})
        return Poly(self, {tuple(mono): coeff})

    def poly(self, terms):
        F = self.field
        clean = {}
        for mono, c in terms.items():
            c = F.coerce(c)
            if not F.is_zero(c):
                clean[tuple(mono)] = c
        return Poly(self, clean)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.n == other.n
                and self.names == other.names and self.field == other.field)

    def __hash__(self):
        return hash((self.n, self.names, self.field))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.names)}]"


# -------------------------------------------------------------- polynomials

class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # dict mono -> nonzero coeff; owned, never mutated

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        if not self.is_homogeneous():
            raise InputError("polynomial is not homogeneous")
        return self.degree()

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise InputError("operands live in different rings")

    def __add__(self, other):
        self._check_ring(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if F.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.ring.field
        c = F.coerce(c)
        if F.is_zero(c):
            return Poly(self.ring, {})
        return Poly(self.ring, {m: F.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, mono, coeff):
        F = self.ring.field
        if F.is_zero(coeff):
            return Poly(self.ring, {})
        return Poly(self.ring, {mono_mul(m, mono): F.mul(coeff, c)
                                for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check_ring(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.ring, out)

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative polynomial power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def leading(self, order):
        """(monomial, coefficient) of the leading term; None for zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order):
        lead = self.leading(order)
        if lead is None:
            return self
        _, c = lead
        F = self.ring.field
        if c == F.one:
            return self
        return self.scale(F.inv(c))

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def partial(self, i):
        """Formal partial derivative with respect to variable i."""
        F = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            dm = tuple(v - 1 if j == i else v for j, v in enumerate(m))
            nc = F.mul(c, F.of(e))
            if not F.is_zero(nc):
                s = F.add(out.get(dm, F.zero), nc)
                if F.is_zero(s):
                    out.pop(dm, None)
                else:
                    out[dm] = s
        return Poly(self.ring, out)

    def evaluate(self, point):
        """Exact evaluation at a coordinate tuple of field elements."""
        F = self.ring.field
        point = [F.coerce(v) for v in point]
        total = F.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                for _ in range(e):
                    v = F.mul(v, point[i])
            total = F.add(total, v)
        return total

    def substitute_linear(self, matrix):
        """Apply the change of coordinates x_i -> sum_j M[i][j] x_j.

        The matrix must be invertible over the coefficient field.
        """
        if not isinstance(matrix, Matrix):
            matrix = Matrix(self.ring.field, matrix)
        n = self.ring.n
        if matrix.nrows != n or matrix.ncols != n:
            raise InputError("substitution matrix has wrong shape")
        if not matrix.is_invertible():
            raise InputError("substitution matrix is singular")
        images = []
        for i in range(n):
            img = self.ring.zero()
            for j in range(n):
                c = matrix.rows[i][j]
                if not self.ring.field.is_zero(c):
                    img = img + self.ring.var(j).scale(c)
            images.append(img)
        power_cache = [{0: self.ring.one()} for _ in range(n)]

        def var_power(i, e):
            cache = power_cache[i]
            if e not in cache:
                cache[e] = var_power(i, e - 1) * images[i]
            return cache[e]

        out = self.ring.zero()
        for m, c in self.terms.items():
            term = self.ring.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * var_power(i, e)
            out = out + term
        return out

    def linear_coefficients(self):
        """Coefficient vector of a degree-<=1 form (constant part must vanish)."""
        F = self.ring.field
        vec = [F.zero] * self.ring.n
        for m, c in self.terms.items():
            if sum(m) != 1:
                raise InputError("not a linear form")
            vec[m.index(1)] = c
        return vec

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def format_poly(f, order=None):
    """Render in the ideal-file grammar: `c*x1^2*x3 - x2` etc."""
    if f.is_zero():
        return "0"
    if order is None:
        order = degrevlex(f.ring.n)
    F = f.ring.field
    parts = []
    for m in order.sorted_desc(f.terms):
        c = f.terms[m]
        text = F.format(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f.ring.names[i])
            elif e > 1:
                factors.append(f"{f.ring.names[i]}^{e}")
        if factors:
            body = "*".join(factors)
            if text != "1":
                body = f"{text}*{body}"
        else:
            body = text
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)


def poly_matrix_det(rows):
    """Determinant of a square matrix of polynomials (Laplace with memo)."""
    size = len(rows)
    if size == 0:
        raise InputError("empty matrix")
    ring = rows[0][0].ring
    cols0 = tuple(range(size))
    memo = {}

    def minor(r, cols):
        if r == size:
            return ring.one()
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = ring.zero()
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = minor(r + 1, cols[:idx] + cols[idx + 1:])
            term = entry * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, cols0)


# ------------------------------------------------------------------- ideals

class Ideal:
    __slots__ = ("ring", "gens", "_homog")

    def __init__(self, ring, gens):
        gens = tuple(g for g in gens)
        for g in gens:
            if not isinstance(g, Poly) or g.ring != ring:
                raise InputError("ideal generators must live in the ideal's ring")
            if g.is_zero():
                raise InputError("zero generator in ideal")
        self.ring = ring
        self.gens = gens
        self._homog = None

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        # computed from the given generators, never assumed
        if self._homog is None:
            self._homog = all(g.is_homogeneous() for g in self.gens)
        return self._homog

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.gens == other.gens

    def __repr__(self):
        inside = ", ".join(format_poly(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


class LinearSpace:
    """A subspace of the degree-1 piece, given by an independent basis of forms."""

    __slots__ = ("ring", "basis", "_span")

    def __init__(self, ring, basis):
        basis = tuple(basis)
        span = SpanBuilder(ring.field, ring.n)
        for f in basis:
            if f.is_zero() or not f.is_homogeneous() or f.degree() != 1:
                raise InputError("linear space basis must consist of nonzero linear forms")
            if span.add(f.linear_coefficients()) is None:
                raise InputError("linear space basis is dependent")
        self.ring = ring
        self.basis = basis
        self._span = span

    @property
    def dim(self):
        return len(self.basis)

    def contains_form(self, f):
        return self._span.contains(f.linear_coefficients())

    def contains_space(self, other):
        return all(self.contains_form(f) for f in other.basis)

    def signature(self):
        return self._span.signature()

    def extended(self, form):
        return LinearSpace(self.ring, self.basis + (form,))

    def canonical_forms(self):
        """Basis read off the reduced echelon rows (deterministic)."""
        out = []
        for row in self._span.rows:
            f = self.ring.zero()
            for i, c in enumerate(row):
                if not self.ring.field.is_zero(c):
                    f = f + self.ring.var(i).scale(c)
            out.append(f)
        return out

    def __eq__(self, other):
        return (isinstance(other, LinearSpace) and self.ring == other.ring
                and self.signature() == other.signature())

    def __repr__(self):
        return f"LinearSpace<{', '.join(format_poly(f) for f in self.basis)}>"


class GradedSlice:
    """The degree-d piece of a homogeneous ideal, as a row space over S_d."""

    __slots__ = ("ring", "degree", "monos", "index", "span")

    def __init__(self, ring, degree, monos, span):
        self.ring = ring
        self.degree = degree
        self.monos = monos
        self.index = {m: i for i, m in enumerate(monos)}
        self.span = span

    @property
    def dim(self):
        return self.span.rank

    def vector_of(self, f):
        F = self.ring.field
        vec = [F.zero] * len(self.monos)
        for m, c in f.terms.items():
            if sum(m) != self.degree:
                raise InputError("polynomial degree does not match the slice")
            vec[self.index[m]] = c
        return vec

    def poly_of(self, vec):
        F = self.ring.field
        return Poly(self.ring, {self.monos[i]: c for i, c in enumerate(vec)
                                if not F.is_zero(c)})

    def contains(self, f):
        return self.span.contains(self.vector_of(f))

    def matrix(self):
        return Matrix(self.ring.field, [list(r) for r in self.span.rows], len(self.monos))


def graded_slice(ideal, d):
    """Row space of I_d in the monomial basis of S_d (basis in rref)."""
    if not ideal.is_homogeneous():
        raise InputError("graded slice of a non-homogeneous ideal")
    ring = ideal.ring
    monos = monomials_of_degree(ring.n, d)
    slice_ = GradedSlice(ring, d, monos, SpanBuilder(ring.field, len(monos)))
    for g in ideal.gens:
        dg = g.homogeneous_degree()
        if dg > d:
            continue
        for u in monomials_of_degree(ring.n, d - dg):
            slice_.span.add(slice_.vector_of(g.mul_term(u, ring.field.one)))
    return slice_
