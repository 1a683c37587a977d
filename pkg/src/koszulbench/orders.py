"""Monomial orders: lex, graded reverse-lex, and block elimination orders.

Every order carries an explicit variable permutation (most significant
variable first), so e.g. reverse-lex with t > x > y > z on K[x,y,z,t] is
``TermOrder("degrevlex", perm=(3, 0, 1, 2))``.  Orders produce sort keys:
m1 < m2 in the order iff key(m1) < key(m2) as tuples.
"""

from __future__ import annotations

from .errors import InputError

KINDS = ("lex", "degrevlex", "block")


class TermOrder:
    __slots__ = ("kind", "perm", "block")

    def __init__(self, kind, perm=None, block=0, nvars=None):
        if kind not in KINDS:
            raise InputError(f"unknown term order kind {kind!r}")
        if perm is None:
            if nvars is None:
                raise InputError("TermOrder needs a permutation or a variable count")
            perm = tuple(range(nvars))
        perm = tuple(perm)
        if sorted(perm) != list(range(len(perm))):
            raise InputError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        if kind == "block" and not 0 < block < len(perm):
            raise InputError("block order needs 0 < block < nvars")
        self.kind = kind
        self.perm = perm
        self.block = block if kind == "block" else 0

    @property
    def nvars(self):
        return len(self.perm)

    def key(self, mono):
        """Sort key; ascending in the order (1 is minimal for graded kinds)."""
        pe = [mono[i] for i in self.perm]
        if self.kind == "lex":
            return tuple(pe)
        if self.kind == "degrevlex":
            return (sum(pe), tuple(-e for e in reversed(pe)))
        head, tail = pe[: self.block], pe[self.block:]
        return (sum(head), tuple(-e for e in reversed(head)),
                sum(tail), tuple(-e for e in reversed(tail)))

    def greater(self, m1, m2):
        return self.key(m1) > self.key(m2)

    def sorted_desc(self, monos):
        return sorted(monos, key=self.key, reverse=True)

    def eliminates(self):
        """Variable indices eliminated by this block order (empty otherwise)."""
        if self.kind != "block":
            return ()
        return self.perm[: self.block]

    def describe(self, names=None):
        if names is None:
            varlist = ",".join(str(i) for i in self.perm)
        else:
            varlist = ",".join(names[i] for i in self.perm)
        if self.kind == "block":
            return f"block[{self.block}]:{varlist}"
        return f"{self.kind}:{varlist}"

    def __eq__(self, other):
        return (isinstance(other, TermOrder) and self.kind == other.kind
                and self.perm == other.perm and self.block == other.block)

    def __hash__(self):
        return hash((self.kind, self.perm, self.block))

    def __repr__(self):
        return f"TermOrder({self.describe()})"


def degrevlex(nvars, perm=None):
    return TermOrder("degrevlex", perm=perm, nvars=nvars)


def lex(nvars, perm=None):
    return TermOrder("lex", perm=perm, nvars=nvars)


def elimination_order(nvars, k):
    """Block order eliminating the first k ring variables."""
    return TermOrder("block", perm=tuple(range(nvars)), block=k)


def parse_order(text, names):
    """Parse a CLI order spec against the ring's variable names.

    Accepts ``lex``, ``degrevlex``, ``revlex-perm:<v1,v2,...>`` and
    ``lex-perm:<...>``; permutation entries are variable names or indices,
    most significant first.
    """
    text = text.strip()
    n = len(names)
    if text == "lex":
        return lex(n)
    if text in ("degrevlex", "revlex"):
        return degrevlex(n)
    for prefix, kind in (("revlex-perm:", "degrevlex"), ("degrevlex-perm:", "degrevlex"),
                         ("lex-perm:", "lex")):
        if text.startswith(prefix):
            items = [s.strip() for s in text[len(prefix):].split(",") if s.strip()]
            perm = []
            for item in items:
                if item in names:
                    perm.append(names.index(item))
                else:
                    try:
                        perm.append(int(item))
                    except ValueError:
                        raise InputError(f"unknown variable {item!r} in order spec") from None
            if sorted(perm) != list(range(n)):
                raise InputError(f"order spec {text!r} is not a permutation of the {n} variables")
            return TermOrder(kind, perm=tuple(perm))
    raise InputError(f"cannot parse term order {text!r}")
