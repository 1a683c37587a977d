"""Dense exact linear algebra: reduced row echelon form, nullspaces, inverses.

Pivoting is deterministic (leftmost nonzero column, first nonzero row) so every
downstream object -- Groebner bases, Betti tables, certificates -- is
reproducible byte for byte.
"""

from __future__ import annotations

from .errors import InputError


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise InputError("ragged matrix rows")
        else:
            width = 0 if ncols is None else ncols
        if ncols is not None and rows and width != ncols:
            raise InputError(f"expected {ncols} columns, got {width}")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width if rows else (ncols or 0)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    def copy(self):
        return Matrix(self.field, [list(r) for r in self.rows], self.ncols)

    def transpose(self):
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)]
                                   for j in range(self.ncols)], self.nrows)

    def mul(self, other):
        if self.ncols != other.nrows:
            raise InputError("matrix shape mismatch in product")
        F = self.field
        out = []
        for i in range(self.nrows):
            row = []
            a = self.rows[i]
            for j in range(other.ncols):
                s = F.zero
                for k in range(self.ncols):
                    if not F.is_zero(a[k]):
                        s = F.add(s, F.mul(a[k], other.rows[k][j]))
                row.append(s)
            out.append(row)
        return Matrix(F, out, other.ncols)

    def __mul__(self, other):
        return self.mul(other)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.ncols == other.ncols)

    def rref(self):
        """Return (reduced row echelon form, pivot columns, rank)."""
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        pr = 0
        for pc in range(self.ncols):
            src = None
            for i in range(pr, len(rows)):
                if not F.is_zero(rows[i][pc]):
                    src = i
                    break
            if src is None:
                continue
            rows[pr], rows[src] = rows[src], rows[pr]
            inv = F.inv(rows[pr][pc])
            if inv != F.one:
                rows[pr] = [F.mul(inv, v) for v in rows[pr]]
            for i in range(len(rows)):
                if i != pr and not F.is_zero(rows[i][pc]):
                    c = rows[i][pc]
                    rows[i] = [F.sub(rows[i][j], F.mul(c, rows[pr][j]))
                               for j in range(self.ncols)]
            pivots.append(pc)
            pr += 1
            if pr == len(rows):
                break
        return Matrix(F, rows, self.ncols), tuple(pivots), len(pivots)

    def rank(self):
        return self.rref()[2]

    def kernel_basis(self):
        """Basis of the right nullspace; free columns ascending, free coordinate 1."""
        F = self.field
        red, pivots, _ = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = [F.zero] * self.ncols
            vec[free] = F.one
            for r, pc in enumerate(pivots):
                vec[pc] = F.neg(red.rows[r][free])
            basis.append(vec)
        return basis

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self):
        if self.nrows != self.ncols:
            raise InputError("inverse of a non-square matrix")
        F = self.field
        n = self.nrows
        aug = Matrix(F, [list(self.rows[i]) + list(Matrix.identity(F, n).rows[i])
                         for i in range(n)], 2 * n)
        red, pivots, rank = aug.rref()
        if rank != n or any(p >= n for p in pivots):
            raise InputError("matrix is singular")
        return Matrix(F, [r[n:] for r in red.rows], n)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"


class SpanBuilder:
    """Incrementally maintained row space kept in reduced echelon form.

    The workhorse behind graded slices, minimal generator extraction and
    syzygy bookkeeping: `reduce` gives the canonical residual of a vector
    against the space, `add` grows the space when the residual is nonzero.
    """

    __slots__ = ("field", "width", "rows", "pivots", "reduced")

    def __init__(self, field, width, reduced=True):
        self.field = field
        self.width = width
        self.reduced = reduced  # False: forward-only echelon (faster, not canonical)
        self.rows = []    # echelon rows with pivot coefficient 1
        self.pivots = []  # ascending pivot columns, parallel to rows

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        F = self.field
        is_zero, sub, mul = F.is_zero, F.sub, F.mul
        out = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if not is_zero(c):
                out = [sub(a, mul(c, b)) if not is_zero(b) else a
                       for a, b in zip(out, row)]
        return out

    def add(self, vec):
        """Reduce `vec` against the space; absorb it if independent.

        Returns the new echelon row, or None if `vec` was already in the span.
        """
        F = self.field
        res = self.reduce(vec)
        pivot = None
        for j, v in enumerate(res):
            if not F.is_zero(v):
                pivot = j
                break
        if pivot is None:
            return None
        inv = F.inv(res[pivot])
        if inv != F.one:
            res = [F.mul(inv, v) for v in res]
        if self.reduced:
            # back-eliminate to keep the basis canonical
            is_zero, sub, mul = F.is_zero, F.sub, F.mul
            for i, row in enumerate(self.rows):
                c = row[pivot]
                if not is_zero(c):
                    self.rows[i] = [sub(a, mul(c, b)) if not is_zero(b) else a
                                    for a, b in zip(row, res)]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pivot:
            at += 1
        self.rows.insert(at, res)
        self.pivots.insert(at, pivot)
        return res

    def contains(self, vec):
        F = self.field
        return all(F.is_zero(v) for v in self.reduce(vec))

    def signature(self):
        """Hashable canonical form of the row space."""
        return tuple(tuple(r) for r in self.rows)
