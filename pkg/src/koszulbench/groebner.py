"""Buchberger engine and the ideal calculus built on it.

Deterministic by construction: normal pair selection (lcm degree, then the
term order on lcms, then insertion indices), leftmost reducer choice, and a
final interreduction that sorts the basis by leading monomial.  Two runs on
permuted generator lists give byte-identical reduced bases.
"""

from __future__ import annotations

from .errors import InputError, InternalCheckError
from .linalg import SpanBuilder
from .orders import TermOrder, degrevlex
from .poly import (Ideal, Poly, Ring, format_poly, mono_coprime, mono_div,
                   mono_divides, mono_lcm, mono_mul, monomials_of_degree)

# When True every buchberger() run re-checks that all S-pairs of the final
# basis reduce to zero (enabled by the test suite; certificate-producing
# callers request it explicitly).
POST_CHECK = False


def s_poly(f, g, order):
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    lcm = mono_lcm(mf, mg)
    F = f.ring.field
    a = f.mul_term(mono_div(lcm, mf), F.inv(cf))
    b = g.mul_term(mono_div(lcm, mg), F.inv(cg))
    return a - b


def normal_form(f, basis, order, leads=None):
    """Remainder of f on division by `basis`: no term divisible by a leading term.

    Reducer choice is deterministic (first match in list order); for a
    Groebner basis the result is the canonical normal form.
    """
    if leads is None:
        leads = [g.leading(order) for g in basis]
    F = f.ring.field
    work = dict(f.terms)
    tail = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        hit = None
        for g, (lm, lc) in zip(basis, leads):
            if mono_divides(lm, m):
                hit = (g, lm, lc)
                break
        if hit is None:
            tail[m] = c
            continue
        g, lm, lc = hit
        factor = F.div(c, lc)
        shift = mono_div(m, lm)
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            mm = mono_mul(gm, shift)
            s = F.sub(work.get(mm, F.zero), F.mul(factor, gc))
            if F.is_zero(s):
                work.pop(mm, None)
            else:
                work[mm] = s
    return Poly(f.ring, tail)


def interreduce(polys, order):
    """Fully autoreduced, monic generating set, sorted by leading monomial."""
    basis = [p for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda p: order.key(p.leading(order)[0]))
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = normal_form(basis[i], others, order)
            if r.terms != basis[i].terms:
                changed = True
                if r.is_zero():
                    basis.pop(i)
                else:
                    basis[i] = r
                break
    return [p.monic(order) for p in sorted(basis, key=lambda p: order.key(p.leading(order)[0]))]


class GroebnerBasis:
    __slots__ = ("ring", "order", "elements", "ideal", "stats", "truncated",
                 "degree_cap", "aborted_degree", "_leads")

    def __init__(self, ring, order, elements, ideal=None, stats=None,
                 truncated=False, degree_cap=None, aborted_degree=None):
        self.ring = ring
        self.order = order
        self.elements = list(elements)
        self.ideal = ideal
        self.stats = stats or {}
        self.truncated = truncated
        self.degree_cap = degree_cap
        self.aborted_degree = aborted_degree
        self._leads = [g.leading(order) for g in self.elements]

    def leading_monomials(self):
        return [lm for lm, _ in self._leads]

    def normal_form(self, f):
        return normal_form(f, self.elements, self.order, self._leads)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def max_degree(self):
        return max((g.degree() for g in self.elements), default=0)

    def is_quadratic(self):
        """All reduced basis elements have degree exactly 2."""
        return bool(self.elements) and all(g.degree() == 2 for g in self.elements)

    def initial_ideal(self):
        """Minimal monomial generators of the initial ideal."""
        lms = self.leading_monomials()
        return minimalize_monomials(lms)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.order == other.order
                and [g.terms for g in self.elements] == [g.terms for g in other.elements])

    def __repr__(self):
        inside = "; ".join(format_poly(g) for g in self.elements)
        return f"GB[{inside}]"


def minimalize_monomials(monos):
    """Minimal generating set of a monomial ideal (no generator divides another)."""
    out = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def buchberger(ideal, order=None, degree_cap=None, stop_beyond_degree=None,
               post_check=False):
    """Reduced Groebner basis of `ideal` under `order`.

    degree_cap: for homogeneous input, compute only up to that S-pair degree
    and flag the result as truncated.  stop_beyond_degree: abort as soon as a
    new basis element of larger degree appears (sound for homogeneous input,
    where pairs are processed by ascending degree); `aborted_degree` records
    the offending degree.
    """
    if isinstance(ideal, Ideal):
        ring, gens = ideal.ring, list(ideal.gens)
    else:
        raise InputError("buchberger expects an Ideal")
    if order is None:
        order = degrevlex(ring.n)
    homogeneous = ideal.is_homogeneous()
    if degree_cap is not None and not homogeneous:
        raise InputError("degree_cap requires a homogeneous ideal")
    if stop_beyond_degree is not None and not homogeneous:
        raise InputError("stop_beyond_degree requires a homogeneous ideal")

    basis = interreduce(gens, order)
    stats = {"s_pairs": 0, "zero_reductions": 0, "basis_growth": 0}
    if not basis:
        return GroebnerBasis(ring, order, [], ideal, stats)

    if stop_beyond_degree is not None:
        for g in basis:
            if g.degree() > stop_beyond_degree:
                return GroebnerBasis(ring, order, basis, ideal, stats,
                                     aborted_degree=g.degree())

    leads = [g.leading(order)[0] for g in basis]

    def pair_key(i, j):
        lcm = mono_lcm(leads[i], leads[j])
        return (sum(lcm), order.key(lcm), i, j)

    pending = {}
    for j in range(len(basis)):
        for i in range(j):
            pending[(i, j)] = pair_key(i, j)

    truncated = False
    while pending:
        (i, j) = min(pending, key=lambda p: pending[p])
        key = pending.pop((i, j))
        lcm_deg = key[0]
        if degree_cap is not None and lcm_deg > degree_cap:
            truncated = True
            continue
        lcm = mono_lcm(leads[i], leads[j])
        if mono_coprime(leads[i], leads[j]):
            continue
        # chain criterion: some other leading monomial divides the lcm and
        # both companion pairs are no longer pending
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(leads[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        stats["s_pairs"] += 1
        r = normal_form(s_poly(basis[i], basis[j], order), basis, order)
        if r.is_zero():
            stats["zero_reductions"] += 1
            continue
        if stop_beyond_degree is not None and r.degree() > stop_beyond_degree:
            return GroebnerBasis(ring, order, basis, ideal, stats,
                                 aborted_degree=r.degree())
        r = r.monic(order)
        basis.append(r)
        leads.append(r.leading(order)[0])
        stats["basis_growth"] += 1
        new = len(basis) - 1
        for k in range(new):
            pending[(k, new)] = pair_key(k, new)

    reduced = interreduce(basis, order)
    gb = GroebnerBasis(ring, order, reduced, ideal, stats,
                       truncated=truncated, degree_cap=degree_cap)
    if (post_check or POST_CHECK) and not truncated:
        check_buchberger_criterion(gb)
    return gb


def check_buchberger_criterion(gb):
    """Re-verify that every S-pair of the basis reduces to zero."""
    for j in range(len(gb.elements)):
        for i in range(j):
            r = gb.normal_form(s_poly(gb.elements[i], gb.elements[j], gb.order))
            if not r.is_zero():
                raise InternalCheckError(
                    f"S-pair ({i},{j}) does not reduce to zero: {format_poly(r)}")


# --------------------------------------------------------------- ring utils

def extend_ring(ring, extra_names, front=True):
    """Ring with extra variables prepended (front=True) or appended."""
    for name in extra_names:
        if name in ring.names:
            raise InputError(f"variable name clash: {name}")
    if front:
        names = tuple(extra_names) + ring.names
    else:
        names = ring.names + tuple(extra_names)
    return Ring(len(names), ring.field, names)


def embed_poly(f, big_ring, offset):
    """Reinterpret f in a larger ring; its variables start at `offset`."""
    pad_front = offset
    pad_back = big_ring.n - f.ring.n - offset
    out = {}
    for m, c in f.terms.items():
        out[(0,) * pad_front + m + (0,) * pad_back] = c
    return Poly(big_ring, out)


def project_poly(f, small_ring, offset):
    """Drop the first `offset` variables (exponents there must be zero)."""
    out = {}
    for m, c in f.terms.items():
        if any(e != 0 for e in m[:offset]) or any(e != 0 for e in m[offset + small_ring.n:]):
            raise InputError("polynomial involves eliminated variables")
        out[m[offset:offset + small_ring.n]] = c
    return Poly(small_ring, out)


# ----------------------------------------------------- ideal-level calculus

def eliminate(ideal, k, post_check=False):
    """Generators of I ∩ K[x_{k+1}..x_n] from a block-order Groebner basis."""
    order = TermOrder("block", perm=tuple(range(ideal.ring.n)), block=k)
    gb = buchberger(ideal, order, post_check=post_check)
    kept = [g for g in gb.elements if all(e == 0 for m in g.terms for e in m[:k])]
    return kept


def intersect(I, J):
    """I ∩ J via the single auxiliary variable t: eliminate t from t·I + (1-t)·J."""
    if I.ring != J.ring:
        raise InputError("intersection of ideals in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    aux = extend_ring(ring, ("@t",), front=True)
    t = aux.var(0)
    one = aux.one()
    gens = [t * embed_poly(f, aux, 1) for f in I.gens]
    gens += [(one - t) * embed_poly(g, aux, 1) for g in J.gens]
    kept = eliminate(Ideal(aux, gens), 1)
    out = [project_poly(g, ring, 1) for g in kept]
    return Ideal(ring, out)


def poly_divide_exact(g, f, order=None):
    """Quotient g/f when f divides g; raises otherwise."""
    if order is None:
        order = degrevlex(g.ring.n)
    F = g.ring.field
    lm, lc = f.leading(order)
    quotient = g.ring.zero()
    rest = g
    while not rest.is_zero():
        m, c = rest.leading(order)
        if not mono_divides(lm, m):
            raise InputError("exact division failed")
        qm, qc = mono_div(m, lm), F.div(c, lc)
        quotient = quotient + g.ring.monomial(qm, qc)
        rest = rest - f.mul_term(qm, qc)
    return quotient


def colon(I, f):
    """I : (f) computed as (I ∩ (f)) / f."""
    if f.is_zero():
        raise InputError("colon by the zero polynomial")
    ring = I.ring
    inter = intersect(I, Ideal(ring, [f]))
    gens = [poly_divide_exact(g, f) for g in inter.gens]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return Ideal(ring, [])
    out = Ideal(ring, gens)
    if out.is_homogeneous():
        out = Ideal(ring, minimal_generators(out))
    return out


def colon_ideal(I, J):
    """I : J as the intersection of I : (g) over the generators of J."""
    if J.is_zero():
        raise InputError("colon by the zero ideal")
    result = None
    for g in J.gens:
        piece = colon(I, g)
        result = piece if result is None else intersect(result, piece)
    gens = minimal_generators(result) if result.gens else []
    return Ideal(I.ring, gens)


def ideals_equal(I, J, order=None):
    """Exact ideal equality via reduced Groebner bases."""
    if I.ring != J.ring:
        return False
    if order is None:
        order = degrevlex(I.ring.n)
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    return buchberger(I, order) == buchberger(J, order)


# -------------------------------------------------- minimal generators

def minimal_generators(ideal, order=None, gb=None):
    """Minimal homogeneous generators, computed degreewise by linear algebra.

    In each degree d the candidates are reduced against S_1 · I_{d-1}; the
    survivors are minimal generators.  Independent of the term order used for
    the underlying basis.
    """
    if ideal.is_zero():
        return []
    if not ideal.is_homogeneous():
        raise InputError("minimal generators need a homogeneous ideal")
    ring = ideal.ring
    if gb is None:
        if order is None:
            order = degrevlex(ring.n)
        gb = buchberger(ideal, order)
    elements = gb.elements
    if not elements:
        return []
    degrees = sorted({g.degree() for g in elements})
    max_deg = degrees[-1]
    out = []
    # I_d = S_1 * I_{d-1} + span(basis elements of degree d), so a spanning
    # set of each slice is carried along and multiplied up degree by degree.
    prev_polys = []
    for d in range(degrees[0], max_deg + 1):
        monos = monomials_of_degree(ring.n, d)
        index = {m: i for i, m in enumerate(monos)}
        span = SpanBuilder(ring.field, len(monos), reduced=False)

        def vec(p):
            v = [ring.field.zero] * len(monos)
            for m, c in p.terms.items():
                v[index[m]] = c
            return v

        cur_polys = []
        for p in prev_polys:
            for i in range(ring.n):
                q = p.mul_term(tuple(1 if j == i else 0 for j in range(ring.n)),
                               ring.field.one)
                if span.add(vec(q)) is not None:
                    cur_polys.append(q)
        for g in elements:
            if g.degree() == d and span.add(vec(g)) is not None:
                out.append(g)
                cur_polys.append(g)
        prev_polys = cur_polys
    return out


def minimal_generator_degrees(ideal, order=None, gb=None):
    degs = {}
    for g in minimal_generators(ideal, order=order, gb=gb):
        degs[g.degree()] = degs.get(g.degree(), 0) + 1
    return degs


def is_quadratic_gb(gb):
    return gb.is_quadratic()


def is_quadratic_ideal(ideal, order=None, gb=None):
    """True iff all minimal homogeneous generators sit in degree 2.

    The zero ideal counts as (vacuously) quadratic; degree checks run up to
    the maximal degree of the reduced basis, which bounds all generator
    degrees.
    """
    if ideal.is_zero():
        return True
    degs = minimal_generator_degrees(ideal, order=order, gb=gb)
    return set(degs) == {2}


# --------------------------------------------------------------- toric side

def toric_ideal(monomials, n=None, field=None, t_names=None, post_check=False):
    """Kernel of t_i -> m_i for equal-degree monomials, by x-elimination.

    Returns the presentation ideal inside K[t_1..t_m]; its generators are the
    t-only elements of a block-order reduced basis.
    """
    from .fields import QQ
    monomials = [tuple(m) for m in monomials]
    if not monomials:
        raise InputError("toric ideal needs at least one monomial")
    if len(set(monomials)) != len(monomials):
        raise InputError("monomials must be distinct")
    degs = {sum(m) for m in monomials}
    if len(degs) != 1:
        raise InputError("monomials must have equal degree")
    if n is None:
        n = len(monomials[0])
    if field is None:
        field = QQ
    m = len(monomials)
    if t_names is None:
        t_names = tuple(f"t{i + 1}" for i in range(m))
    t_ring = Ring(m, field, t_names)
    if m == 1:
        return Ideal(t_ring, [])
    x_names = tuple(f"x{i + 1}" for i in range(n))
    big = Ring(n + m, field, x_names + t_names)
    gens = []
    for i, mono in enumerate(monomials):
        t_i = big.var(n + i)
        xm = big.monomial(mono + (0,) * m, field.one)
        gens.append(t_i - xm)
    kept = eliminate(Ideal(big, gens), n, post_check=post_check)
    out = [project_poly(g, t_ring, n) for g in kept]
    return Ideal(t_ring, out)


def toric_fiber_generator_degrees(monomials, up_to_degree):
    """Counts of minimal toric-ideal generators per degree, up to a bound.

    Works fiber by fiber in the multigrading by image exponent vectors, so
    each linear-algebra step is tiny; used for presentations too large for
    elimination at desk scale, and as a cross-check on small ones.
    """
    from itertools import combinations_with_replacement

    from .fields import QQ
    monomials = [tuple(m) for m in monomials]
    m = len(monomials)
    counts = {}
    prev_kernels = {}  # image vector -> difference pairs spanning that fiber's kernel
    for d in range(1, up_to_degree + 1):
        fibers = {}
        for combo in combinations_with_replacement(range(m), d):
            img = tuple(sum(monomials[i][k] for i in combo) for k in range(len(monomials[0])))
            fibers.setdefault(img, []).append(combo)
        kernels = {}
        for img, members in fibers.items():
            if len(members) < 2:
                continue
            index = {u: i for i, u in enumerate(members)}
            width = len(members)
            span = SpanBuilder(QQ, width)
            if d > 1:
                # push the kernels of one degree lower up by every t_j
                for j in range(m):
                    base_img = tuple(img[k] - monomials[j][k] for k in range(len(img)))
                    if any(v < 0 for v in base_img):
                        continue
                    for u, v in prev_kernels.get(base_img, ()):
                        lifted = [QQ.zero] * width
                        lifted[index[tuple(sorted(u + (j,)))]] = QQ.one
                        iv = index[tuple(sorted(v + (j,)))]
                        lifted[iv] = QQ.sub(lifted[iv], QQ.one)
                        span.add(lifted)
            new_here = (len(members) - 1) - span.rank
            if new_here > 0:
                counts[d] = counts.get(d, 0) + new_here
            kernels[img] = [(members[0], members[i]) for i in range(1, len(members))]
        prev_kernels = kernels
    return counts
