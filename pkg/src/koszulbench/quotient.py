"""Quotient rings R = S/I with normal-form arithmetic and graded bookkeeping.

Standard monomials (monomials outside the initial ideal) give a canonical
vector-space basis of each graded piece; multiplication-by-variable maps
between consecutive pieces are cached, since the resolution engine applies
them constantly.
"""

from __future__ import annotations

from .errors import InputError
from .groebner import GroebnerBasis, buchberger, mono_divides
from .orders import degrevlex
from .poly import Ideal, Poly, monomials_of_degree


class QuotientRing:
    __slots__ = ("ring", "gb", "_std", "_std_index", "_var_maps")

    def __init__(self, gb_or_ideal, order=None):
        if isinstance(gb_or_ideal, GroebnerBasis):
            gb = gb_or_ideal
        elif isinstance(gb_or_ideal, Ideal):
            order = order or degrevlex(gb_or_ideal.ring.n)
            gb = buchberger(gb_or_ideal, order)
        else:
            raise InputError("QuotientRing needs an Ideal or a GroebnerBasis")
        if gb.truncated:
            raise InputError("cannot build a quotient on a truncated basis")
        self.ring = gb.ring
        self.gb = gb
        self._std = {}
        self._std_index = {}
        self._var_maps = {}

    @property
    def defining_ideal(self):
        return self.gb.ideal

    def is_graded(self):
        ideal = self.gb.ideal
        return ideal is None or ideal.is_zero() or ideal.is_homogeneous()

    def nf(self, f):
        return self.gb.normal_form(f)

    def std_monomials(self, d):
        """Degree-d monomials outside the initial ideal, descending in the order."""
        if d not in self._std:
            leads = self.gb.leading_monomials()
            monos = [m for m in monomials_of_degree(self.ring.n, d)
                     if not any(mono_divides(lm, m) for lm in leads)]
            monos.sort(key=self.gb.order.key, reverse=True)
            self._std[d] = tuple(monos)
            self._std_index[d] = {m: i for i, m in enumerate(monos)}
        return self._std[d]

    def dim_degree(self, d):
        return len(self.std_monomials(d))

    def hilbert_prefix(self, D):
        return [self.dim_degree(d) for d in range(D + 1)]

    def coords(self, f, d):
        """Coefficient vector of nf(f) in the degree-d standard basis."""
        F = self.ring.field
        self.std_monomials(d)
        index = self._std_index[d]
        vec = [F.zero] * len(index)
        for m, c in f.terms.items():
            if sum(m) != d:
                raise InputError("degree mismatch in quotient coordinates")
            vec[index[m]] = c
        return vec

    def poly_from_coords(self, vec, d):
        F = self.ring.field
        monos = self.std_monomials(d)
        return Poly(self.ring, {monos[i]: c for i, c in enumerate(vec)
                                if not F.is_zero(c)})

    def var_map(self, j, d):
        """Columns of multiplication by x_j from degree d to d+1 (sparse lists).

        Entry i holds [(row, coeff), ...] for the image of the i-th standard
        monomial of degree d.
        """
        key = (j, d)
        if key not in self._var_maps:
            F = self.ring.field
            monos = self.std_monomials(d)
            self.std_monomials(d + 1)
            target = self._std_index[d + 1]
            cols = []
            xj = tuple(1 if i == j else 0 for i in range(self.ring.n))
            for m in monos:
                image = self.nf(self.ring.monomial(tuple(a + b for a, b in zip(m, xj)),
                                                   F.one))
                cols.append([(target[mm], c) for mm, c in image.terms.items()])
            self._var_maps[key] = cols
        return self._var_maps[key]

    def multiply_coords(self, j, d, vec):
        """Image of a degree-d coordinate vector under multiplication by x_j."""
        F = self.ring.field
        out = [F.zero] * self.dim_degree(d + 1)
        cols = self.var_map(j, d)
        for i, c in enumerate(vec):
            if F.is_zero(c):
                continue
            for row, w in cols[i]:
                out[row] = F.add(out[row], F.mul(c, w))
        return out

    def __repr__(self):
        return f"QuotientRing({self.ring!r} / {len(self.gb.elements)} relations)"


def quotient_hilbert_basis(Q, d):
    """Standard monomials of degree d (canonical order)."""
    return list(Q.std_monomials(d))
