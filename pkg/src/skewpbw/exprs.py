"""Expression parsing and element formatting.

Grammar (EBNF):

    expr     = term { ("+" | "-") term } ;
    term     = factor { ("*" | "/") factor } ;
    factor   = atom [ "^" exponent ] ;
    atom     = NAME | INT | "(" expr ")" | "-" factor ;
    exponent = [ "-" ] INT ;

NAME resolves to a generator or a parameter of the presentation;
juxtaposition is not multiplication, `*` is always explicit (generator names
are user-chosen identifiers, `x12` must not read as x1*x2). Division is only
defined by scalars. Inverse powers `^-k` are allowed on generators with
index <= r. Products are normalized through the rewrite engine during
parsing, so the result is always canonical.

Two output modes: `pretty` is the grammar above, deglex-descending with one
leading sign pulled out per term; `machine` is a `terms=<k>` header followed
by one `<scalar-text> TAB <space-separated exponents>` line per term, also
deglex-descending, byte-stable for golden tests. parse_element accepts both.
"""

from __future__ import annotations

from .algebra import Element, Presentation
from .errors import ExprSyntaxError, FileFormatError, UnknownSymbol
from .scalars import Scalar, ScalarField

_OPS = set("+-*/^()")


def _tokenize(src: str):
    toks = []
    k, n = 0, len(src)
    while k < n:
        ch = src[k]
        if ch.isspace():
            k += 1
            continue
        if ch in _OPS:
            toks.append((ch, ch, k))
            k += 1
            continue
        if ch.isdigit():
            j = k
            while j < n and src[j].isdigit():
                j += 1
            toks.append(("INT", src[k:j], k))
            k = j
            continue
        if ch.isalpha() or ch == "_":
            j = k
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(("NAME", src[k:j], k))
            k = j
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", k)
    toks.append(("END", "", n))
    return toks


class _Parser:
    """Recursive-descent evaluator. In element mode values are Elements of
    the presentation; in scalar mode they are Scalars and generator names
    are unknown symbols.
    """

    def __init__(self, src: str, pres: Presentation = None, field: ScalarField = None):
        self.src = src
        self.toks = _tokenize(src)
        self.k = 0
        self.pres = pres
        self.field = pres.field if pres is not None else field

    def peek(self):
        return self.toks[self.k]

    def next(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {t[1]!r}", t[2])
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t[0] != "END":
            raise ExprSyntaxError(f"unexpected {t[1]!r}", t[2])
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.next()
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                v = self._divide(v, w, pos)
        return v

    def factor(self):
        t = self.peek()
        if t[0] == "-":
            self.next()
            return -self.factor()
        v = self.atom()
        if self.peek()[0] == "^":
            self.next()
            v = v ** self.exponent()
        return v

    def exponent(self) -> int:
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        t = self.expect("INT")
        return sign * int(t[1])

    def atom(self):
        t = self.next()
        if t[0] == "INT":
            return self._scalar_value(self.field.from_int(int(t[1])))
        if t[0] == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t[0] == "NAME":
            name = t[1]
            if self.pres is not None and name in self.pres.gen_names:
                return self.pres.gen(self.pres.gen_index(name))
            if self.field.has_param(name):
                return self._scalar_value(self.field.param(name))
            raise UnknownSymbol(name, t[2])
        raise ExprSyntaxError(f"unexpected {t[1]!r}", t[2])

    def _scalar_value(self, c: Scalar):
        if self.pres is not None:
            return Element.scalar(self.pres, c)
        return c

    def _divide(self, v, w, pos):
        if self.pres is None:
            return v / w
        if not w.is_scalar:
            raise ExprSyntaxError("division is only defined by scalars", pos)
        return v.scale(w.scalar_part.inv())


def parse_scalar(field: ScalarField, src: str) -> Scalar:
    return _Parser(src, field=field).parse()


def parse_element(p: Presentation, src: str) -> Element:
    if src.lstrip().startswith("terms="):
        return _parse_machine(p, src)
    return _Parser(src, pres=p).parse()


def _parse_machine(p: Presentation, src: str) -> Element:
    lines = [ln for ln in (l.strip() for l in src.splitlines()) if ln]
    head = lines[0]
    try:
        count = int(head.split("=", 1)[1])
    except ValueError:
        raise FileFormatError(f"bad machine header {head!r}", line=1)
    if len(lines) - 1 != count:
        raise FileFormatError(
            f"machine header announces {count} terms, found {len(lines) - 1}", line=1
        )
    total = p.zero()
    for lineno, ln in enumerate(lines[1:], start=2):
        if "\t" not in ln:
            raise FileFormatError("term line needs a TAB separator", line=lineno)
        ctext, etext = ln.split("\t", 1)
        c = parse_scalar(p.field, ctext)
        try:
            exps = tuple(int(e) for e in etext.split())
        except ValueError:
            raise FileFormatError(f"bad exponent list {etext!r}", line=lineno)
        total = total + Element.monomial(p, exps, c)
    return total


def _monomial_text(p: Presentation, exps) -> str:
    factors = []
    for name, e in zip(p.gen_names, exps):
        if e == 1:
            factors.append(name)
        elif e != 0:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_element(f: Element, mode: str = "pretty") -> str:
    if mode == "machine":
        lines = [f"terms={len(f.terms)}"]
        for exps, c in f.sorted_terms():
            lines.append(f"{c}\t{' '.join(str(e) for e in exps)}")
        return "\n".join(lines)
    if mode != "pretty":
        raise ValueError(f"unknown format mode {mode!r}")
    if f.is_zero:
        return "0"
    pieces = []
    for exps, c in f.sorted_terms():
        negative = c.leading_sign() < 0
        if negative:
            c = -c
        mono = _monomial_text(f.pres, exps)
        ctext = str(c)
        if mono and c == 1:
            body = mono
        else:
            if c.is_sum:
                ctext = f"({ctext})"
            body = f"{ctext}*{mono}" if mono else ctext
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
