"""The ideal file format.

    # comment
    ring n=3 field=q vars=x,y,z
    x^2
    x*y
    y^2 + x*z

Header: `ring n=<int> field=<q|fp:p> vars=<comma list, optional>`.  Then one
polynomial per line; terms like `3*x1^2*x3` or `-4/7*y` joined by + and -,
whitespace insensitive, `#` starts a comment.  Coefficients are exact
integers or rationals a/b.  Parse errors carry line and column positions.
"""

from __future__ import annotations

from .errors import ParseError
from .fields import parse_field
from .poly import Ideal, Ring


def parse_ideal_file(text):
    """Parse an ideal file into (Ring, Ideal)."""
    ring = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ring is None:
            ring = _parse_header(line, lineno)
            continue
        polys.append(parse_poly(line, ring, lineno))
    if ring is None:
        raise ParseError("missing 'ring' header line")
    return ring, Ideal(ring, polys)


def _parse_header(line, lineno):
    parts = line.split()
    if not parts or parts[0] != "ring":
        raise ParseError("expected header starting with 'ring'", lineno, 1)
    n = None
    field = None
    names = None
    for part in parts[1:]:
        if "=" not in part:
            raise ParseError(f"bad header item {part!r}", lineno, line.find(part) + 1)
        key, value = part.split("=", 1)
        if key == "n":
            try:
                n = int(value)
            except ValueError:
                raise ParseError(f"bad variable count {value!r}", lineno,
                                 line.find(part) + 1) from None
        elif key == "field":
            try:
                field = parse_field(value)
            except Exception as exc:
                raise ParseError(str(exc), lineno, line.find(part) + 1) from None
        elif key == "vars":
            names = tuple(v.strip() for v in value.split(",") if v.strip())
        else:
            raise ParseError(f"unknown header key {key!r}", lineno, line.find(part) + 1)
    if n is None or field is None:
        raise ParseError("header needs both n= and field=", lineno, 1)
    if names is not None and len(names) != n:
        raise ParseError(f"vars lists {len(names)} names for n={n}", lineno, 1)
    try:
        return Ring(n, field, names)
    except Exception as exc:
        raise ParseError(str(exc), lineno, 1) from None


class _Tokens:
    def __init__(self, text, lineno):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.lineno, self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self, char):
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def number(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def name(self):
        self.skip_ws()
        start = self.pos
        while (self.pos < len(self.text)
               and (self.text[self.pos].isalnum() or self.text[self.pos] in "_'@")):
            self.pos += 1
        if start == self.pos:
            self.error("expected a variable name")
        return self.text[start:self.pos]


def parse_poly(text, ring, lineno=1):
    """Parse one polynomial in the file grammar against a ring."""
    toks = _Tokens(text, lineno)
    F = ring.field
    var_index = {name: i for i, name in enumerate(ring.names)}
    total = ring.zero()
    first = True
    any_term = False
    while True:
        ch = toks.peek()
        if ch is None:
            break
        sign = 1
        if ch == "+":
            toks.take("+")
            if first:
                toks.error("leading '+' is not allowed")
        elif ch == "-":
            toks.take("-")
            sign = -1
        elif not first:
            toks.error("expected '+' or '-' between terms")
        # one term: '*'-separated numeric and variable factors
        num, den = 1, 1
        mono = [0] * ring.n
        saw_factor = False
        while True:
            ch = toks.peek()
            if ch is None:
                break
            if ch.isdigit():
                num *= toks.number()
                if toks.take("/"):
                    d = toks.number()
                    if d == 0:
                        toks.error("zero denominator")
                    den *= d
                saw_factor = True
            elif ch.isalpha() or ch in "_@":
                name = toks.name()
                if name not in var_index:
                    toks.error(f"unknown variable {name!r}")
                exp = 1
                if toks.take("^"):
                    exp = toks.number()
                mono[var_index[name]] += exp
                saw_factor = True
            else:
                toks.error(f"unexpected character {ch!r}")
            if not toks.take("*"):
                break
        if not saw_factor:
            toks.error("empty term")
        coeff = F.of(sign * num, den)
        total = total + ring.monomial(tuple(mono), coeff)
        any_term = True
        first = False
    if not any_term:
        raise ParseError("empty polynomial line", lineno, 1)
    if total.is_zero():
        raise ParseError("polynomial line reduces to zero", lineno, 1)
    return total


def field_descriptor(field):
    return field.name


def ring_header(ring):
    return f"ring n={ring.n} field={field_descriptor(ring.field)} vars={','.join(ring.names)}"


def format_ideal_file(ideal, comment=None):
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(ring_header(ideal.ring))
    from .poly import format_poly
    for g in ideal.gens:
        lines.append(format_poly(g))
    return "\n".join(lines) + "\n"
