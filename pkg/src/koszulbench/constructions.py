"""Constructors for structured inputs: pinched Veronese monomial sets, seeded
generic forms, projective point ideals, the symmetric-determinant cubic.

"Generic" always means: coefficients drawn by a seeded generator from a
documented finite set {-B..B} minus 0 (default B = 50), so genericity claims
can be probed but every run is reproducible.
"""

from __future__ import annotations

import random

from .errors import InputError
from .fields import QQ
from .groebner import intersect, minimal_generators
from .linalg import Matrix
from .poly import Ideal, Poly, Ring, monomials_of_degree, poly_matrix_det

COEFF_BOUND = 50


def seeded_rng(seed):
    return random.Random(seed)


def random_coeff(rng, bound=COEFF_BOUND):
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return c


def pinched_veronese(n, d, s):
    """Degree-d monomials in n variables with at most s nonzero exponents,
    listed in descending degrevlex order."""
    if not 1 <= s <= n or d < 1:
        raise InputError("need 1 <= s <= n and d >= 1")
    return [m for m in monomials_of_degree(n, d)
            if sum(1 for e in m if e > 0) <= s]


def generic_form(ring, degree, rng, bound=COEFF_BOUND):
    """Dense degree-d form with every coefficient from {-B..B} \\ {0}."""
    f = ring.zero()
    for m in monomials_of_degree(ring.n, degree):
        f = f + ring.monomial(m, ring.field.of(random_coeff(rng, bound)))
    return f


def generic_quadrics(ring, count, rng, bound=COEFF_BOUND):
    return [generic_form(ring, 2, rng, bound) for _ in range(count)]


def symmetric_det_cubic(field=QQ):
    """det [[x1,x2,x3],[x2,x4,x5],[x3,x5,x6]] in 6 variables."""
    R = Ring(6, field)
    x = [R.var(i) for i in range(6)]
    rows = [[x[0], x[1], x[2]],
            [x[1], x[3], x[4]],
            [x[2], x[4], x[5]]]
    return poly_matrix_det(rows)


# ------------------------------------------------------------------- points

def generic_points(ring, count, rng, bound=9):
    """Seeded projective points with small nonzero rational coordinates."""
    points = []
    seen = set()
    guard = 0
    while len(points) < count:
        guard += 1
        if guard > 1000 * count:
            raise InputError("could not sample enough distinct points")
        pt = tuple(QQ.of(rng.randint(-bound, bound)) for _ in range(ring.n))
        if all(c == 0 for c in pt):
            continue
        sig = _projective_signature(pt)
        if sig in seen:
            continue
        seen.add(sig)
        points.append(pt)
    return points


def _projective_signature(point):
    lead = next(c for c in point if c != 0)
    return tuple(c / lead for c in point)


def in_general_linear_position(ring, points):
    """Every subset of at most n points is linearly independent."""
    from itertools import combinations
    F = ring.field
    k = min(ring.n, len(points))
    for size in range(2, k + 1):
        for combo in combinations(points, size):
            m = Matrix(F, [[F.coerce(c) for c in p] for p in combo])
            if m.rank() != size:
                return False
    return True


def general_position_points(ring, count, seed, bound=2):
    """Seeded small-coordinate points validated to be in general linear
    position (flag witnesses for such configurations stay small)."""
    rng = seeded_rng(seed)
    for _ in range(200):
        pts = generic_points(ring, count, rng, bound=bound)
        if in_general_linear_position(ring, pts):
            return pts
    raise InputError("could not sample points in general position")


def point_linear_ideal(ring, point):
    """The prime ideal of a projective point: all linear forms vanishing on it."""
    F = ring.field
    point = [F.coerce(c) for c in point]
    if all(F.is_zero(c) for c in point):
        raise InputError("projective points need a nonzero coordinate vector")
    m = Matrix(F, [point])
    forms = []
    for vec in m.kernel_basis():
        f = ring.zero()
        for i, c in enumerate(vec):
            if not F.is_zero(c):
                f = f + ring.var(i).scale(c)
        forms.append(f)
    return Ideal(ring, forms)


def points_ideal(ring, points):
    """Vanishing ideal of distinct projective points: intersection of their
    linear prime ideals, with generators minimalized."""
    F = ring.field
    pts = [[F.coerce(c) for c in p] for p in points]
    if not pts:
        raise InputError("need at least one point")
    sigs = set()
    for p in pts:
        if all(F.is_zero(c) for c in p):
            raise InputError("zero coordinate vector is not a projective point")
        sig = _proj_sig_field(F, p)
        if sig in sigs:
            raise InputError("repeated projective point")
        sigs.add(sig)
    result = point_linear_ideal(ring, pts[0])
    for p in pts[1:]:
        result = intersect(result, point_linear_ideal(ring, p))
    return Ideal(ring, minimal_generators(result))


def _proj_sig_field(F, point):
    lead = next(c for c in point if not F.is_zero(c))
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in point)


def evaluate_at_point(f, point):
    return f.evaluate(point)
