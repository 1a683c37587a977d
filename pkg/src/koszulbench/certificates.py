"""Finite positive certificates and bounded searches.

A Koszul filtration certifies Koszulness; a Groebner flag certifies
G-quadraticity; a verified quadratic reduced basis after a coordinate change
certifies G-quadraticity; a verified lift certifies LG-quadraticity.  Failed
searches are always UndeterminedAtBound: non-existence over all coordinate
systems is out of finite reach, so searches produce certificates and never
assume them.

Colon ideals of linear-generated ideals in R are computed in S on preimages
(J + I_0) : (x) and read modulo I_0, which reuses the polynomial-ring
calculus exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError
from .groebner import (buchberger, colon, ideals_equal, is_quadratic_ideal,
                       minimal_generator_degrees)
from .linalg import Matrix, SpanBuilder
from .orders import degrevlex
from .poly import Ideal, Poly, format_poly
from .quotient import QuotientRing
from .series import TruncatedSeries
from .verdicts import NO, UNDETERMINED, YES, Verdict

FLAG_ATTEMPTS = 500
POOL_SMALL_BOUND = 2


class RSpace:
    """A linear-generated ideal of R = S/I_0, given by degree-1 forms."""

    __slots__ = ("Q", "forms", "span")

    def __init__(self, Q, forms):
        span = SpanBuilder(Q.ring.field, Q.dim_degree(1))
        kept = []
        for f in forms:
            g = Q.nf(f)
            if g.is_zero():
                continue
            if g.degree() != 1 or not g.is_homogeneous():
                raise InputError("filtration members must be generated by linear forms")
            if span.add(Q.coords(g, 1)) is not None:
                kept.append(g)
        self.Q = Q
        self.forms = tuple(kept)
        self.span = span

    @property
    def dim(self):
        return self.span.rank

    def signature(self):
        return self.span.signature()

    def contains_form(self, f):
        g = self.Q.nf(f)
        if g.is_zero():
            return True
        if g.degree() != 1:
            return False
        return self.span.contains(self.Q.coords(g, 1))

    def contains_space(self, other):
        return all(self.contains_form(f) for f in other.forms)

    def extended(self, form):
        return RSpace(self.Q, list(self.forms) + [form])

    def s_ideal(self):
        """Preimage ideal in S: the forms plus the defining relations."""
        defining = list(self.Q.gb.elements)
        return Ideal(self.Q.ring, list(self.forms) + defining)

    def canonical_forms(self):
        out = []
        for row in self.span.rows:
            out.append(self.Q.poly_from_coords(row, 1))
        return out

    def __eq__(self, other):
        return (isinstance(other, RSpace) and self.Q is other.Q
                and self.signature() == other.signature())

    def __repr__(self):
        return f"RSpace({', '.join(format_poly(f) for f in self.forms) or '0'})"


def full_space(Q):
    F = Q.ring.field
    return RSpace(Q, [Q.ring.monomial(m, F.one) for m in Q.std_monomials(1)])


class _GBCache:
    """Reduced bases of member preimage ideals, keyed by member signature."""

    def __init__(self, Q):
        self.Q = Q
        self.order = degrevlex(Q.ring.n)
        self._data = {}

    def gb(self, space):
        key = space.signature()
        if key not in self._data:
            ideal = space.s_ideal()
            if ideal.is_zero():
                self._data[key] = buchberger(Ideal(self.Q.ring, []), self.order)
            else:
                self._data[key] = buchberger(ideal, self.order)
        return self._data[key]

    def equals(self, ideal, space):
        """ideal (in S, containing I_0) == (space) + I_0?"""
        if ideal.is_zero():
            return space.dim == 0 and not self.Q.gb.elements
        got = buchberger(ideal, self.order)
        return got == self.gb(space)


@dataclass
class FiltrationWitness:
    member: int   # index of I
    parent: int   # index of J with J ⊂ I
    form: Poly    # x with I = J + (x)
    colon: int    # index of J : I in the family

    def as_dict(self):
        return {"member": self.member, "parent": self.parent,
                "form": format_poly(self.form), "colon": self.colon}


@dataclass
class KoszulFiltration:
    Q: QuotientRing
    members: list              # RSpace, member 0 convention-free
    witnesses: list = field(default_factory=list)  # FiltrationWitness per nonzero member

    def member_index(self, space):
        sig = space.signature()
        for i, m in enumerate(self.members):
            if m.signature() == sig:
                return i
        return None

    def as_dict(self):
        from .ideal_io import ring_header
        return {
            "type": "koszul_filtration",
            "ring": ring_header(self.Q.ring),
            "defining": [format_poly(g) for g in self.Q.gb.elements],
            "members": [[format_poly(f) for f in m.forms] for m in self.members],
            "witnesses": [w.as_dict() for w in self.witnesses],
        }

    @classmethod
    def from_dict(cls, data):
        from .ideal_io import parse_ideal_file, parse_poly
        header = data["ring"]
        body = [header] + list(data["defining"])
        ring, ideal = parse_ideal_file("\n".join(body))
        Q = QuotientRing(ideal)
        members = [RSpace(Q, [parse_poly(s, ring) for s in forms])
                   for forms in data["members"]]
        witnesses = [FiltrationWitness(member=w["member"], parent=w["parent"],
                                       form=parse_poly(w["form"], ring),
                                       colon=w["colon"])
                     for w in data["witnesses"]]
        return cls(Q=Q, members=members, witnesses=witnesses)


def verify_filtration(filtration):
    """Check the filtration conditions by exact colon computations.

    CertifiedYes means: R is Koszul and every member has a linear resolution
    over R.  A failure report is about this certificate, never about R.
    """
    Q = filtration.Q
    members = filtration.members
    cache = _GBCache(Q)
    claim = "R is Koszul (certificate: Koszul filtration)"

    def fail(reason, **extra):
        return Verdict(claim=claim, outcome=NO,
                       witness={"kind": "certificate_failed", "reason": reason, **extra})

    if not any(m.dim == 0 for m in members):
        return fail("the zero ideal is not a member")
    nR = Q.dim_degree(1)
    if not any(m.dim == nR for m in members):
        return fail("the maximal homogeneous ideal is not a member")
    by_member = {w.member: w for w in filtration.witnesses}
    for idx, member in enumerate(members):
        if member.dim == 0:
            continue
        w = by_member.get(idx)
        if w is None:
            return fail("missing witness", member=idx)
        if not (0 <= w.parent < len(members)) or not (0 <= w.colon < len(members)):
            return fail("witness points outside the family", member=idx)
        parent = members[w.parent]
        if not member.contains_space(parent):
            return fail("claimed parent is not contained in the member", member=idx)
        if parent.contains_form(w.form):
            return fail("cyclic generator already lies in the parent", member=idx)
        extended = parent.extended(w.form)
        if extended.signature() != member.signature():
            return fail("parent plus the cyclic generator is not the member", member=idx)
        colon_result = colon(parent.s_ideal(), Q.nf(w.form))
        if not cache.equals(colon_result, members[w.colon]):
            return fail("colon identity fails", member=idx,
                        expected_member=w.colon)
    return Verdict(claim=claim, outcome=YES,
                   witness={"kind": "koszul_filtration",
                            "members": len(members)})


def monomial_filtration(Q):
    """The variable-subset filtration of a quadratic monomial quotient.

    Witnesses peel the largest variable of each subset; colon targets are
    located by computing each (J + I_0) : x and matching a subset.
    """
    gb = Q.gb
    for g in gb.elements:
        if len(g.terms) != 1 or g.degree() != 2:
            raise InputError("defining ideal must be generated by quadratic monomials")
    n = Q.ring.n
    if n > 16:
        raise InputError("variable-subset filtration limited to 16 variables")
    F = Q.ring.field
    variables = [Q.ring.var(i) for i in range(n)]
    subsets = []
    for mask in range(1 << n):
        subsets.append(tuple(i for i in range(n) if mask >> i & 1))
    members = [RSpace(Q, [variables[i] for i in s]) for s in subsets]
    index_of = {members[i].signature(): i for i in range(len(members))}
    witnesses = []
    cache = _GBCache(Q)
    for idx, subset in enumerate(subsets):
        if not subset:
            continue
        x_i = subset[-1]
        parent_subset = subset[:-1]
        parent_idx = subsets.index(parent_subset)
        colon_result = colon(members[parent_idx].s_ideal(), variables[x_i])
        target = RSpace(Q, [g for g in colon_result.gens if g.degree() == 1])
        target_idx = index_of.get(target.signature())
        if target_idx is None or not cache.equals(colon_result, members[target_idx]):
            raise InputError("colon of a variable subset is not a variable subset "
                             "(is the defining ideal quadratic monomial?)")
        witnesses.append(FiltrationWitness(member=idx, parent=parent_idx,
                                           form=variables[x_i], colon=target_idx))
    return KoszulFiltration(Q=Q, members=members, witnesses=witnesses)


# -------------------------------------------------------------------- flags

@dataclass
class GroebnerFlag:
    Q: QuotientRing
    spaces: list       # V_0 ⊂ V_1 ⊂ ... ⊂ V_n, dim V_i = i
    chain_forms: list  # x_i with V_i = V_{i-1} + (x_i)
    colon_map: dict    # i -> j with (V_i):(V_{i+1}) = (V_j)

    def as_dict(self):
        from .ideal_io import ring_header
        return {
            "type": "groebner_flag",
            "ring": ring_header(self.Q.ring),
            "defining": [format_poly(g) for g in self.Q.gb.elements],
            "chain": [format_poly(f) for f in self.chain_forms],
            "colon_map": {str(i): j for i, j in self.colon_map.items()},
        }

    @classmethod
    def from_dict(cls, data):
        from .ideal_io import parse_ideal_file, parse_poly
        body = [data["ring"]] + list(data["defining"])
        ring, ideal = parse_ideal_file("\n".join(body))
        Q = QuotientRing(ideal)
        chain = [parse_poly(s, ring) for s in data["chain"]]
        spaces = [RSpace(Q, [])]
        for f in chain:
            spaces.append(spaces[-1].extended(f))
        colon_map = {int(i): j for i, j in data["colon_map"].items()}
        return cls(Q=Q, spaces=spaces, chain_forms=chain, colon_map=colon_map)

    def as_filtration(self):
        """Repackage the flag as a Koszul filtration (members V_0..V_n)."""
        witnesses = []
        for i in range(1, len(self.spaces)):
            witnesses.append(FiltrationWitness(
                member=i, parent=i - 1, form=self.chain_forms[i - 1],
                colon=self.colon_map[i - 1]))
        return KoszulFiltration(Q=self.Q, members=list(self.spaces),
                                witnesses=witnesses)


def verify_flag(flag):
    """Check nesting, dimensions and every colon identity of a flag.

    CertifiedYes certifies that R is G-quadratic.
    """
    Q = flag.Q
    claim = "R is G-quadratic (certificate: Groebner flag)"

    def fail(reason, **extra):
        return Verdict(claim=claim, outcome=NO,
                       witness={"kind": "certificate_failed", "reason": reason, **extra})

    nR = Q.dim_degree(1)
    if len(flag.spaces) != nR + 1:
        return fail("flag length does not match dim R_1")
    for i, space in enumerate(flag.spaces):
        if space.dim != i:
            return fail("flag dimensions are not 0..n", position=i)
        if i and not space.contains_space(flag.spaces[i - 1]):
            return fail("flag is not nested", position=i)
    if flag.spaces[-1].dim != nR:
        return fail("top of the flag is not the maximal ideal")
    cache = _GBCache(Q)
    for i in range(nR):
        if i not in flag.colon_map:
            return fail("missing colon assignment", position=i)
        j = flag.colon_map[i]
        if not 0 <= j <= nR:
            return fail("colon assignment out of range", position=i)
        x = flag.chain_forms[i]
        if flag.spaces[i].contains_form(x):
            return fail("chain form lies in the previous space", position=i)
        colon_result = colon(flag.spaces[i].s_ideal(), Q.nf(x))
        if not cache.equals(colon_result, flag.spaces[j]):
            return fail("colon identity fails", position=i, expected=j)
    return Verdict(claim=claim, outcome=YES,
                   witness={"kind": "groebner_flag",
                            "colon_map": {str(i): flag.colon_map[i] for i in range(nR)}})


def _pool_r1(Q, rng, extra=48, coeff_bound=9):
    """Candidate degree-1 elements of R with small coefficients (seeded order)."""
    from itertools import product
    F = Q.ring.field
    basis = Q.std_monomials(1)
    pool = []
    seen = set()
    for coeffs in product(range(-POOL_SMALL_BOUND, POOL_SMALL_BOUND + 1),
                          repeat=len(basis)):
        if all(c == 0 for c in coeffs):
            continue
        first = next(c for c in coeffs if c)
        if first < 0:
            continue
        seen.add(coeffs)
        pool.append(coeffs)
    rng.shuffle(pool)
    for _ in range(extra):
        coeffs = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in basis)
        if any(coeffs) and coeffs not in seen:
            seen.add(coeffs)
            pool.append(coeffs)
    out = []
    for coeffs in pool:
        f = Q.ring.zero()
        for c, m in zip(coeffs, basis):
            if c:
                f = f + Q.ring.monomial(m, F.of(c))
        out.append(f)
    return out


def _linear_part_space(Q, ideal_in_s):
    return RSpace(Q, [g for g in ideal_in_s.gens if g.degree() == 1])


def search_flag(Q, seed=0, attempts=FLAG_ATTEMPTS, level_retries=6):
    """Bounded randomized-greedy search for a Groebner flag.

    Chains grow from a seeded pool of small-coefficient forms.  Every colon
    must land on a chain member; a colon that overshoots becomes a target the
    chain is steered through, a colon of the current dimension restarts the
    level inside it, and every linear colon part feeds a learned candidate
    pool.  Returns the first verified flag or None -- which is data, not an
    error: searches never certify non-existence.
    """
    rng = random.Random(seed)
    nR = Q.dim_degree(1)
    pool = _pool_r1(Q, rng)
    cache = _GBCache(Q)
    for _attempt in range(attempts):
        spaces = [RSpace(Q, [])]
        chain = []
        records = []   # per level: the colon's linear part
        targets = {}   # dim -> space the chain must pass through
        ok = True
        while ok and len(spaces) <= nR:
            k = len(spaces)
            current = spaces[-1]
            placed = False
            for _retry in range(level_retries):
                pending = sorted(t for t in targets if t >= k)
                candidate = None
                if pending:
                    goal = targets[pending[0]]
                    if not goal.contains_space(current):
                        break
                    candidate = _random_member_outside(goal, current, rng)
                else:
                    for _ in range(24):
                        f = rng.choice(pool)
                        if not current.contains_form(f):
                            candidate = f
                            break
                if candidate is None:
                    break
                new_space = current.extended(candidate)
                if k in targets and new_space.signature() != targets[k].signature():
                    continue
                colon_result = colon(current.s_ideal(), Q.nf(candidate))
                linear = _linear_part_space(Q, colon_result)
                if not cache.equals(colon_result, linear):
                    continue  # colon not generated by linear forms: retry the level
                known = [s.signature() for s in spaces] + [new_space.signature()]
                if linear.signature() in known:
                    pass
                elif linear.dim > k and linear.contains_space(new_space):
                    existing = targets.get(linear.dim)
                    if existing is not None and existing.signature() != linear.signature():
                        continue
                    targets[linear.dim] = linear
                else:
                    continue
                records.append(linear)
                chain.append(candidate)
                spaces.append(new_space)
                placed = True
                break
            if not placed:
                ok = False
        if not ok:
            continue
        colon_map = {}
        for i, linear in enumerate(records):
            j = next((jj for jj, s in enumerate(spaces)
                      if s.signature() == linear.signature()), None)
            if j is None:
                ok = False
                break
            colon_map[i] = j
        if not ok:
            continue
        flag = GroebnerFlag(Q=Q, spaces=spaces, chain_forms=chain,
                            colon_map=colon_map)
        if verify_flag(flag).is_yes():
            return flag
    return None


def _random_member_outside(space, avoid, rng, tries=12):
    F = space.Q.ring.field
    forms = space.canonical_forms()
    for _ in range(tries):
        f = space.Q.ring.zero()
        for g in forms:
            c = rng.randint(-2, 2)
            if c:
                f = f + g.scale(F.of(c))
        if not f.is_zero() and not avoid.contains_form(f):
            return f
    for g in forms:
        if not avoid.contains_form(g):
            return g
    return None


# ---------------------------------------------------------- G-quadraticity

@dataclass(frozen=True)
class CoordinateChange:
    matrix: Matrix
    provenance: str  # "identity" | "seeded-random" | "user"

    def as_dict(self):
        return {"provenance": self.provenance,
                "matrix": [[str(c) for c in row] for row in self.matrix.rows]}


def gquadratic_search(ideal, orders=None, changes=20, seed=0, post_check=True):
    """Search for a quadratic reduced basis over coordinate changes and orders.

    Listed orders are tried on the given coordinates first, then on seeded
    random coordinate changes.  The first hit is returned with its witness;
    exhaustion is UndeterminedAtBound (never a no: the quantifier over all
    coordinate systems is not finitely checkable here).
    """
    ring = ideal.ring
    claim = "R is G-quadratic"
    if not ideal.is_homogeneous():
        raise InputError("G-quadraticity needs a homogeneous ideal")
    if ideal.is_zero():
        return Verdict(claim=claim, outcome=YES,
                       witness={"kind": "zero_ideal"})
    if not is_quadratic_ideal(ideal):
        degs = minimal_generator_degrees(ideal)
        bad = sorted(d for d in degs if d != 2)
        return Verdict(claim=claim, outcome=NO,
                       witness={"kind": "non_quadratic_minimal_generator",
                                "degrees": bad})
    if orders is None:
        orders = [degrevlex(ring.n)]
    rng = random.Random(seed)
    candidates = [CoordinateChange(Matrix.identity(ring.field, ring.n), "identity")]
    for _ in range(changes):
        while True:
            m = Matrix(ring.field, [[ring.field.of(rng.randint(-3, 3))
                                     for _ in range(ring.n)] for _ in range(ring.n)])
            if m.is_invertible():
                break
        candidates.append(CoordinateChange(m, "seeded-random"))
    tried = 0
    for change in candidates:
        moved = Ideal(ring, [g.substitute_linear(change.matrix) for g in ideal.gens])
        for order in orders:
            tried += 1
            gb = buchberger(moved, order, stop_beyond_degree=2)
            if gb.aborted_degree is not None:
                continue
            if gb.is_quadratic():
                if post_check:
                    from .groebner import check_buchberger_criterion
                    check_buchberger_criterion(gb)
                return Verdict(claim=claim, outcome=YES,
                               witness={"kind": "quadratic_reduced_basis",
                                        "change": change.as_dict(),
                                        "order": order.describe(ring.names),
                                        "basis": [format_poly(g) for g in gb.elements]},
                               bounds={"orders": [o.describe(ring.names) for o in orders],
                                       "changes": changes, "seed": seed})
    return Verdict(claim=claim, outcome=UNDETERMINED,
                   witness={"kind": "search_exhausted", "combinations": tried},
                   bounds={"orders": [o.describe(ring.names) for o in orders],
                           "changes": changes, "seed": seed})


def replay_gquadratic_witness(ideal, witness):
    """Re-run a stored witness; returns the reduced basis strings."""
    ring = ideal.ring
    rows = [[ring.field.coerce(_parse_fraction(ring.field, s)) for s in row]
            for row in witness["change"]["matrix"]]
    matrix = Matrix(ring.field, rows)
    from .orders import parse_order
    order = _order_from_description(witness["order"], ring)
    moved = Ideal(ring, [g.substitute_linear(matrix) for g in ideal.gens])
    gb = buchberger(moved, order, post_check=True)
    return [format_poly(g) for g in gb.elements]


def _parse_fraction(field, text):
    if "/" in text:
        a, b = text.split("/")
        return field.of(int(a), int(b))
    return field.of(int(text))


def _order_from_description(text, ring):
    kind, _, varlist = text.partition(":")
    names = [v for v in varlist.split(",") if v]
    perm = tuple(ring.names.index(v) for v in names) if names else None
    from .orders import TermOrder
    if kind.startswith("block"):
        raise InputError("block orders are not valid witness orders")
    return TermOrder(kind, perm=perm, nvars=ring.n)


# ------------------------------------------------------------------ LG lift

def verify_lg_lift(base_ideal, lift_ideal, form_names, order, trunc=12,
                   post_check=True):
    """Verify an LG-quadraticity certificate.

    The lift lives in the base ring plus the named variables; those variables
    are the claimed regular sequence.  Checks: (a) the lift has a quadratic
    reduced basis under `order`; (b) the Hilbert identity
    H_base = (1-z)^s H_lift holds to the truncation (regularity); (c) setting
    the named variables to zero recovers the base ideal exactly.
    """
    claim = "R is LG-quadratic (certificate: quadratic deformation)"
    lift_ring = lift_ideal.ring
    base_ring = base_ideal.ring
    if not lift_ideal.is_homogeneous():
        raise InputError("lift ideal must be homogeneous")
    form_names = list(form_names)
    for name in form_names:
        if name not in lift_ring.names:
            raise InputError(f"form variable {name!r} is not in the lift ring")
        if name in base_ring.names:
            raise InputError(f"form variable {name!r} clashes with the base ring")
    remaining = [n for n in lift_ring.names if n not in form_names]
    if tuple(remaining) != base_ring.names:
        raise InputError("lift ring must be the base ring plus the form variables")

    def fail(reason, **extra):
        return Verdict(claim=claim, outcome=NO,
                       witness={"kind": "certificate_failed", "reason": reason, **extra})

    s = len(form_names)
    gb = buchberger(lift_ideal, order, stop_beyond_degree=2,
                    post_check=post_check)
    if gb.aborted_degree is not None or not gb.is_quadratic():
        found = gb.aborted_degree or gb.max_degree()
        return fail("lift basis is not quadratic", degree=found)
    lift_Q = QuotientRing(gb)
    base_Q = QuotientRing(base_ideal) if not base_ideal.is_zero() \
        else QuotientRing(Ideal(base_ring, []))
    h_lift = TruncatedSeries(lift_Q.hilbert_prefix(trunc), trunc)
    h_base = TruncatedSeries(base_Q.hilbert_prefix(trunc), trunc)
    drop = TruncatedSeries([1, -1], trunc)
    predicted = h_lift
    for _ in range(s):
        predicted = predicted.mul(drop)
    if predicted != h_base:
        d = next(i for i in range(trunc + 1)
                 if predicted.coeffs[i] != h_base.coeffs[i])
        return fail("Hilbert identity fails: the forms are not a regular sequence",
                    degree=d)
    # quotient by the form variables
    form_idx = [lift_ring.names.index(n) for n in form_names]
    keep_idx = [i for i in range(lift_ring.n) if i not in form_idx]
    dropped = []
    for g in lift_ideal.gens:
        terms = {}
        for m, c in g.terms.items():
            if any(m[i] for i in form_idx):
                continue
            terms[tuple(m[i] for i in keep_idx)] = c
        h = Poly(base_ring, terms)
        if not h.is_zero():
            dropped.append(h)
    quotient_ideal = Ideal(base_ring, dropped)
    if not ideals_equal(quotient_ideal, base_ideal):
        return fail("quotient by the forms is not the base ideal")
    return Verdict(claim=claim, outcome=YES,
                   witness={"kind": "lg_lift",
                            "order": order.describe(lift_ring.names),
                            "forms": form_names,
                            "basis": [format_poly(g) for g in gb.elements]},
                   bounds={"trunc": trunc})


# --------------------------------------------------------- rank screening

@dataclass
class QuadricRankScreen:
    min_rank: int | None
    witness: tuple | None      # coefficient vector of the minimizer
    exhaustive: bool           # grid path ran (dim <= 3)
    grid_bound: int
    samples: int

    def excludes_rank_lt3(self):
        return self.exhaustive and (self.min_rank is None or self.min_rank >= 3)

    def as_dict(self):
        return {"min_rank": self.min_rank,
                "witness": [str(c) for c in self.witness] if self.witness else None,
                "exhaustive": self.exhaustive,
                "grid_bound": self.grid_bound,
                "samples": self.samples}


def min_quadric_rank(quadrics, seed=0, samples=400, grid_bound=7):
    """Smallest symmetric rank over a space of quadrics.

    Randomized screening always runs; for spaces of dimension <= 3 the
    projective grid of integer coefficient vectors with entries bounded by
    grid_bound is swept exhaustively, and only that path supports the
    "no member of rank < 3" report (rational points of larger height are
    outside the screen, which the caller must surface).
    """
    from itertools import product

    from .apolarity import quadric_rank
    quadrics = list(quadrics)
    if not quadrics:
        raise InputError("empty quadric space")
    ring = quadrics[0].ring
    F = ring.field
    for q in quadrics:
        if q.is_zero() or q.degree() != 2 or not q.is_homogeneous():
            raise InputError("rank screening needs nonzero quadrics")
    k = len(quadrics)
    rng = random.Random(seed)
    best = None
    best_vec = None

    def consider(coeffs):
        nonlocal best, best_vec
        member = ring.zero()
        for c, q in zip(coeffs, quadrics):
            if c:
                member = member + q.scale(F.of(c))
        if member.is_zero():
            return
        r = quadric_rank(member)
        if best is None or r < best:
            best, best_vec = r, tuple(coeffs)

    exhaustive = k <= 3
    if exhaustive:
        from math import gcd
        seen = set()
        for coeffs in product(range(-grid_bound, grid_bound + 1), repeat=k):
            if all(c == 0 for c in coeffs):
                continue
            g = 0
            for c in coeffs:
                g = gcd(g, abs(c))
            normal = tuple(c // g for c in coeffs)
            first = next(c for c in normal if c)
            if first < 0:
                normal = tuple(-c for c in normal)
            if normal in seen:
                continue
            seen.add(normal)
            consider(normal)
    for _ in range(samples):
        coeffs = tuple(rng.randint(-9, 9) for _ in range(k))
        if any(coeffs):
            consider(coeffs)
    return QuadricRankScreen(min_rank=best, witness=best_vec,
                             exhaustive=exhaustive, grid_bound=grid_bound,
                             samples=samples)
