"""Structured text files for presentations, brackets and derivations.

Documents are line oriented; `#` starts a comment and blank lines are
skipped.  Presentation fields live in the preamble, before any section
header.  The optional sections `bracket` and `derivation` hold a bracket
generator table and the data of a twisted derivation:

    n = 3
    r = 0
    params = [alpha, gamma]
    gens = [x, y, z]
    rel 2 1 = { q = "1/gamma", c0 = "0", c = { 3: "-1/gamma" } }

    bracket
    b 1 2 = "x*y"

    derivation
    gamma 1 = "alpha"
    u 1 = "x + y^2"

A relation line names its pair as `rel j i` with j > i, matching the
product x_j*x_i it rewrites.  An omitted relation means q = 1 with no
constants; a present relation must carry q.  Bracket entries name pairs
`b i j` with i < j and omitted pairs are zero.  Derivation entries default
to gamma_i = 1 and u_i = 0.  Quoted payloads use the expression grammar
(see exprs).  The writers emit exactly this canonical shape with
defaulted entries left out, so write then read is the identity.
"""

from .algebra import Element, Presentation, validate_presentation
from .derivations import GammaDerivation, ToricAutomorphism
from .errors import FileFormatError, SkewPBWError
from .exprs import format_element, parse_element, parse_scalar
from .poisson import GeneratorBracket
from .rewrite import check_overlaps
from .scalars import Scalar, scalar_field

_SECTIONS = ("bracket", "derivation")


def _split_document(text):
    """Strip comments and split into (preamble, sections) where each part is
    a list of (line_number, content) pairs."""
    preamble = []
    sections = {}
    current = preamble
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in _SECTIONS:
            if line in sections:
                raise FileFormatError(f"duplicate section {line!r}", lineno)
            current = sections[line] = []
            continue
        current.append((lineno, line))
    return preamble, sections


def _split_assignment(lineno, line):
    head, sep, value = line.partition("=")
    if not sep:
        raise FileFormatError("expected `key = value`", lineno)
    words = head.split()
    if not words:
        raise FileFormatError("missing key before `=`", lineno)
    return words[0], words[1:], value.strip()


def _index_args(lineno, key, args, count):
    if len(args) != count:
        raise FileFormatError(f"`{key}` needs {count} generator indices", lineno)
    try:
        return tuple(int(a) for a in args)
    except ValueError:
        raise FileFormatError(f"`{key}` indices must be integers", lineno) from None


class _ValueParser:
    """Cursor over one assignment's right-hand side."""

    def __init__(self, lineno, text):
        self.lineno = lineno
        self.text = text
        self.pos = 0

    def error(self, message):
        return FileFormatError(f"{message} (column {self.pos + 1})", self.lineno)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def at_end(self):
        return self.peek() == ""

    def finish(self):
        if not self.at_end():
            raise self.error("trailing text after value")

    def string(self):
        self.take('"')
        end = self.text.find('"', self.pos)
        if end < 0:
            raise self.error("unterminated string")
        out = self.text[self.pos:end]
        self.pos = end + 1
        return out

    def integer(self):
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or (self.pos == start + 1 and self.text[start] == "-"):
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def word(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an identifier")
        return self.text[start:self.pos]

    def name_list(self):
        self.take("[")
        names = []
        if self.peek() != "]":
            names.append(self.word())
            while self.peek() == ",":
                self.take(",")
                names.append(self.word())
        self.take("]")
        return names


def _parse_relation_value(lineno, value, field):
    v = _ValueParser(lineno, value)
    v.take("{")
    q = None
    c0 = None
    c = {}
    seen = set()
    while v.peek() != "}":
        key = v.word()
        if key in seen:
            raise v.error(f"duplicate relation field {key!r}")
        seen.add(key)
        v.take("=")
        if key == "q":
            q = _scalar_payload(v, field)
        elif key == "c0":
            c0 = _scalar_payload(v, field)
        elif key == "c":
            v.take("{")
            while v.peek() != "}":
                t = v.integer()
                if t in c:
                    raise v.error(f"duplicate tail index {t}")
                v.take(":")
                c[t] = _scalar_payload(v, field)
                if v.peek() == ",":
                    v.take(",")
                else:
                    break
            v.take("}")
        else:
            raise v.error(f"unknown relation field {key!r}")
        if v.peek() == ",":
            v.take(",")
        else:
            break
    v.take("}")
    v.finish()
    if q is None:
        raise FileFormatError("relation entry must set q", lineno)
    return q, c0, c


def _scalar_payload(v, field):
    text = v.string()
    try:
        return parse_scalar(field, text)
    except SkewPBWError as exc:
        raise FileFormatError(f"bad scalar {text!r}: {exc}", v.lineno) from None


def _element_payload(lineno, p, text):
    try:
        return parse_element(p, text)
    except SkewPBWError as exc:
        raise FileFormatError(f"bad expression {text!r}: {exc}", lineno) from None


def read_presentation(text) -> Presentation:
    """Parse the preamble of a document into a validated Presentation.

    The result has passed basic validation and the confluence check, so it
    is safe to compute with; a file describing an inconsistent relation set
    is rejected here rather than failing deep inside a rewrite.
    """
    preamble, _ = _split_document(text)
    fields = {}
    relations = []
    for lineno, line in preamble:
        key, args, value = _split_assignment(lineno, line)
        if key in ("n", "r", "params", "gens"):
            if args:
                raise FileFormatError(f"`{key}` takes no indices", lineno)
            if key in fields:
                raise FileFormatError(f"duplicate field {key!r}", lineno)
            v = _ValueParser(lineno, value)
            fields[key] = v.integer() if key in ("n", "r") else v.name_list()
            v.finish()
        elif key == "rel":
            j, i = _index_args(lineno, "rel", args, 2)
            relations.append((lineno, j, i, value))
        else:
            raise FileFormatError(f"unknown presentation field {key!r}", lineno)
    for required in ("n", "r", "gens"):
        if required not in fields:
            raise FileFormatError(f"missing required field {required!r}")
    n = fields["n"]
    params = tuple(fields.get("params", ()))
    field = scalar_field(params)
    q = {}
    c0 = {}
    c1 = {}
    for lineno, j, i, value in relations:
        if not 1 <= i < j <= n:
            raise FileFormatError(f"relation pair ({j}, {i}) needs n >= j > i >= 1", lineno)
        if (i, j) in q:
            raise FileFormatError(f"duplicate relation for pair ({j}, {i})", lineno)
        qv, c0v, cv = _parse_relation_value(lineno, value, field)
        q[(i, j)] = qv
        if c0v is not None and not c0v.is_zero:
            c0[(i, j)] = c0v
        for t, coeff in cv.items():
            if not 1 <= t <= n:
                raise FileFormatError(f"tail index {t} out of range", lineno)
            if not coeff.is_zero:
                c1[(i, j, t)] = coeff
    p = Presentation(n, fields["r"], fields["gens"], params, q, c0, c1)
    validate_presentation(p, "basic")
    check_overlaps(p)
    return p


def read_bracket(p: Presentation, text) -> GeneratorBracket:
    """Parse the `bracket` section as a generator table over p."""
    _, sections = _split_document(text)
    if "bracket" not in sections:
        raise FileFormatError("no `bracket` section in document")
    table = {}
    for lineno, line in sections["bracket"]:
        key, args, value = _split_assignment(lineno, line)
        if key != "b":
            raise FileFormatError(f"unknown bracket field {key!r}", lineno)
        i, j = _index_args(lineno, "b", args, 2)
        if not 1 <= i < j <= p.n:
            raise FileFormatError(f"bracket pair ({i}, {j}) needs i < j <= n", lineno)
        if (i, j) in table:
            raise FileFormatError(f"duplicate bracket entry ({i}, {j})", lineno)
        v = _ValueParser(lineno, value)
        payload = v.string()
        v.finish()
        table[(i, j)] = _element_payload(lineno, p, payload)
    return GeneratorBracket(p, table)


def read_derivation(p: Presentation, text) -> GammaDerivation:
    """Parse the `derivation` section into a GammaDerivation over p.

    Only shape is checked here; whether the data satisfies the twisted
    Leibniz rule on the relations is check_derivation's job.
    """
    _, sections = _split_document(text)
    if "derivation" not in sections:
        raise FileFormatError("no `derivation` section in document")
    gammas = {}
    u = {}
    for lineno, line in sections["derivation"]:
        key, args, value = _split_assignment(lineno, line)
        if key not in ("gamma", "u"):
            raise FileFormatError(f"unknown derivation field {key!r}", lineno)
        (i,) = _index_args(lineno, key, args, 1)
        if not 1 <= i <= p.n:
            raise FileFormatError(f"generator index {i} out of range", lineno)
        store = gammas if key == "gamma" else u
        if i in store:
            raise FileFormatError(f"duplicate `{key} {i}`", lineno)
        v = _ValueParser(lineno, value)
        payload = v.string()
        v.finish()
        if key == "gamma":
            try:
                store[i] = parse_scalar(p.field, payload)
            except SkewPBWError as exc:
                raise FileFormatError(f"bad scalar {payload!r}: {exc}", lineno) from None
        else:
            store[i] = _element_payload(lineno, p, payload)
    gamma = ToricAutomorphism(
        p, [gammas.get(i, p.field.one) for i in range(1, p.n + 1)]
    )
    values = [u.get(i, p.zero()) for i in range(1, p.n + 1)]
    return GammaDerivation(gamma, values)


def _quoted_scalar(s: Scalar) -> str:
    return f'"{s}"'


def write_presentation(p: Presentation) -> str:
    """Canonical text for a presentation; relations that are pure q = 1 are
    left out, matching the reader's defaults."""
    lines = [f"n = {p.n}", f"r = {p.r}"]
    lines.append(f"params = [{', '.join(p.params)}]")
    lines.append(f"gens = [{', '.join(p.gen_names)}]")
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            qv = p.q_(i, j)
            c0v = p.c0_(i, j)
            tails = sorted(
                (t, coeff) for (a, b, t), coeff in p.c1.items() if (a, b) == (i, j)
            )
            if qv == 1 and c0v.is_zero and not tails:
                continue
            parts = [f"q = {_quoted_scalar(qv)}"]
            if not c0v.is_zero:
                parts.append(f"c0 = {_quoted_scalar(c0v)}")
            if tails:
                inner = ", ".join(f"{t}: {_quoted_scalar(coeff)}" for t, coeff in tails)
                parts.append(f"c = {{ {inner} }}")
            lines.append(f"rel {j} {i} = {{ {', '.join(parts)} }}")
    return "\n".join(lines) + "\n"


def write_bracket(B: GeneratorBracket) -> str:
    lines = ["bracket"]
    for (i, j), el in sorted(B.table.items()):
        lines.append(f'b {i} {j} = "{format_element(el)}"')
    return "\n".join(lines) + "\n"


def write_derivation(d: GammaDerivation) -> str:
    lines = ["derivation"]
    p = d.pres
    for i in range(1, p.n + 1):
        g = d.gamma.gamma(i)
        if not g == 1:
            lines.append(f"gamma {i} = {_quoted_scalar(g)}")
    for i in range(1, p.n + 1):
        ui = d.u_(i)
        if ui.terms:
            lines.append(f'u {i} = "{format_element(ui)}"')
    return "\n".join(lines) + "\n"
