"""Presentations of skew polynomial algebras with a partially invertible
generator block, and their elements in normal form.

A presentation fixes generators x_1 < ... < x_n, a 1-based invertible block
size r (x_1 .. x_r are invertible), and for every pair i < j one relation

    x_j x_i = q_ij x_i x_j + c0_ij + sum_t c_ij^t x_t

with q_ij a nonzero scalar and all constants scalars over the parameter
field. Elements are finite scalar combinations of ordered monomials
x_1^{a_1} ... x_n^{a_n}, with a_i in Z for i <= r and in N for i > r.
Monomials are stored as plain exponent tuples.
"""

from __future__ import annotations

from .errors import (
    InvalidOptions,
    NotInvertible,
    ValidationFailure,
    ZeroElement,
)
from .scalars import Scalar, scalar_field

_NAME_OK = lambda s: s.isidentifier()


def deglex_key(exps):
    """Sort key realizing degree-lexicographic order on exponent tuples:
    compare total degree first (which may be negative), then entries left to
    right with the larger entry winning."""
    return (sum(exps), exps)


def deglex_compare(a, b) -> int:
    """-1, 0 or +1 as a <, =, > b in deglex order."""
    ka, kb = deglex_key(a), deglex_key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


class Presentation:
    """Immutable description of one algebra. Relation data is exposed through
    q_(i, j), c0_(i, j) and c1_(i, j, t) with 1-based generator indices."""

    def __init__(self, n, r, gen_names, params, q=None, c0=None, c1=None):
        if not (isinstance(n, int) and isinstance(r, int)):
            raise InvalidOptions("n and r must be integers")
        self.n = n
        self.r = r
        self.gen_names = tuple(gen_names)
        self.params = tuple(params)
        self.field = scalar_field(self.params)
        full_q = {}
        q = dict(q or {})
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                full_q[(i, j)] = q.pop((i, j), self.field.one)
        if q:
            raise InvalidOptions(f"relation coefficients at invalid pairs: {sorted(q)}")
        self.q = full_q
        self.c0 = {k: v for k, v in (c0 or {}).items() if not v.is_zero}
        self.c1 = {k: v for k, v in (c1 or {}).items() if not v.is_zero}
        self._engine = None
        self._tail_free = not self.c0 and not self.c1

    def q_(self, i, j) -> Scalar:
        return self.q[(i, j)]

    def c0_(self, i, j) -> Scalar:
        return self.c0.get((i, j), self.field.zero)

    def c1_(self, i, j, t) -> Scalar:
        return self.c1.get((i, j, t), self.field.zero)

    def pair_tail_free(self, i, j) -> bool:
        if self._tail_free:
            return True
        if (i, j) in self.c0:
            return False
        return not any(k[0] == i and k[1] == j for k in self.c1)

    @property
    def tail_free(self) -> bool:
        return self._tail_free

    def gen_index(self, name) -> int:
        return self.gen_names.index(name) + 1

    def engine(self):
        if self._engine is None:
            from .rewrite import RewriteEngine

            self._engine = RewriteEngine(self)
        return self._engine

    def zero_exps(self):
        return (0,) * self.n

    def gen_exps(self, i, e=1):
        return tuple(e if k == i - 1 else 0 for k in range(self.n))

    def gen(self, i, e=1) -> "Element":
        """The element x_i^e."""
        return Element.monomial(self, self.gen_exps(i, e))

    def one(self) -> "Element":
        return Element.scalar(self, self.field.one)

    def zero(self) -> "Element":
        return Element.zero(self)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.n == other.n
            and self.r == other.r
            and self.gen_names == other.gen_names
            and self.params == other.params
            and self.q == other.q
            and self.c0 == other.c0
            and self.c1 == other.c1
        )

    def __hash__(self):
        return hash((self.n, self.r, self.gen_names, self.params))

    def __repr__(self):
        return f"Presentation(n={self.n}, r={self.r}, gens={'/'.join(self.gen_names)})"


def validate_presentation(p: Presentation, purpose: str = "basic") -> None:
    """Check the structural conditions a presentation must satisfy for the
    given purpose; raise ValidationFailure naming the first violated one.

    basic: index ranges, distinct identifier names, nonzero q, and (when
    r >= 1) the zero pattern that keeps inverses consistent: for i <= r and
    i < j the relation (i, j) may only carry a constant (if i >= 2) and
    tail coefficients at indices t < i, and a pair with both generators
    invertible (j <= r) must be a pure q-relation.  The latter is forced by
    closure: with any lower-order term present, x_j^-1 x_i^-1 is the inverse
    of q_ij x_i x_j + (lower), a geometric series with no finite normal form,
    so the Laurent monomials would not span a ring.
    laurent: additionally the whole (1, j) tails vanish for every j, which is
    what localizing at x_1 (and conjugating by it) needs.
    poisson: additionally q_ij != 1 for every pair, so 1 - q_ij is a unit.

    The parameter-independence condition on products of q_ij powers is not a
    finite static check over a symbolic field; the rewrite engine enforces it
    lazily by raising NDependenceViolation wherever a needed divisor
    degenerates to zero.
    """
    if purpose not in ("basic", "laurent", "poisson"):
        raise InvalidOptions(f"unknown validation purpose {purpose!r}")
    if p.n < 1:
        raise ValidationFailure("at least one generator required")
    if not 0 <= p.r <= p.n:
        raise ValidationFailure("invertible block out of range", (p.r,))
    names = p.gen_names
    if len(names) != p.n:
        raise ValidationFailure("generator name count differs from n")
    seen = set()
    for nm in names + p.params:
        if not _NAME_OK(nm):
            raise ValidationFailure("invalid identifier", detail=repr(nm))
        if nm in seen:
            raise ValidationFailure("duplicate identifier", detail=repr(nm))
        seen.add(nm)
    for (i, j), qv in p.q.items():
        if qv.is_zero:
            raise ValidationFailure("q coefficient is zero", (i, j))
    for i, j in p.c0:
        if not (1 <= i < j <= p.n):
            raise ValidationFailure("constant at invalid pair", (i, j))
    for i, j, t in p.c1:
        if not (1 <= i < j <= p.n and 1 <= t <= p.n):
            raise ValidationFailure("tail coefficient at invalid indices", (i, j, t))
    if p.r >= 1:
        for i in range(1, p.r + 1):
            for j in range(i + 1, p.n + 1):
                if i == 1 and not p.c0_(i, j).is_zero:
                    raise ValidationFailure("zero pattern: constant on pair with x_1", (i, j))
                if j <= p.r and not p.pair_tail_free(i, j):
                    raise ValidationFailure(
                        "zero pattern: relation between invertible generators must be pure",
                        (i, j),
                    )
                for t in range(1, p.n + 1):
                    if t >= i and not p.c1_(i, j, t).is_zero:
                        raise ValidationFailure(
                            "zero pattern: tail index not below invertible generator",
                            (i, j, t),
                        )
    if purpose == "laurent":
        for j in range(2, p.n + 1):
            if not p.c0_(1, j).is_zero:
                raise ValidationFailure("localization needs zero constant on pair (1, j)", (1, j))
            for t in range(1, p.n + 1):
                if not p.c1_(1, j, t).is_zero:
                    raise ValidationFailure("localization needs zero tail on pair (1, j)", (1, j, t))
    if purpose == "poisson":
        for (i, j), qv in p.q.items():
            if qv == 1:
                raise ValidationFailure("bracket scaling needs q != 1", (i, j))


class Element:
    """A finite scalar combination of normal-form monomials over one
    presentation. Terms live in a dict {exps: Scalar} with no zero values."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict):
        self.pres = pres
        self.terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, pres) -> "Element":
        return cls(pres, {})

    @classmethod
    def scalar(cls, pres, c) -> "Element":
        if isinstance(c, int):
            c = pres.field.from_int(c)
        return cls(pres, {} if c.is_zero else {pres.zero_exps(): c})

    @classmethod
    def monomial(cls, pres, exps, c=None) -> "Element":
        exps = tuple(exps)
        if len(exps) != pres.n:
            raise InvalidOptions(f"exponent tuple of length {len(exps)}, need {pres.n}")
        for pos, e in enumerate(exps):
            if e < 0 and pos >= pres.r:
                raise NotInvertible(
                    f"negative exponent at non-invertible generator {pres.gen_names[pos]}"
                )
        if c is None:
            c = pres.field.one
        elif isinstance(c, int):
            c = pres.field.from_int(c)
        return cls(pres, {} if c.is_zero else {exps: c})

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), self.pres.field.zero)

    def sorted_terms(self):
        """Terms as (exps, coeff) pairs in descending deglex order."""
        return sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroElement("zero element has no leading term")
        exps = max(self.terms, key=deglex_key)
        return exps, self.terms[exps]

    def degree(self):
        """Total degree of the deglex-leading monomial; None for zero."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    @property
    def is_scalar(self) -> bool:
        return not self.terms or self.terms.keys() == {self.pres.zero_exps()}

    @property
    def scalar_part(self) -> Scalar:
        return self.terms.get(self.pres.zero_exps(), self.pres.field.zero)

    # -- linear arithmetic ----------------------------------------------

    def _check_pres(self, other):
        if self.pres is not other.pres and self.pres != other.pres:
            raise ValueError("elements over different presentations")

    def __add__(self, other):
        if isinstance(other, (Scalar, int)):
            other = Element.scalar(self.pres, other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_pres(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc.is_zero:
                    del out[m]
                else:
                    out[m] = acc
        return Element(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (Scalar, int)):
            other = Element.scalar(self.pres, other)
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        if isinstance(c, int):
            c = self.pres.field.from_int(c)
        if c.is_zero:
            return Element.zero(self.pres)
        return Element(self.pres, {m: v * c for m, v in self.terms.items()})

    # -- multiplicative structure (delegates to the rewrite engine) ------

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_pres(other)
        return self.pres.engine().multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            inv = self.inverse()
            return inv ** (-k)
        out = self.pres.one()
        base = self
        e = k
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def inverse(self) -> "Element":
        """Inverse of a single-term element supported in the invertible block."""
        if len(self.terms) != 1:
            raise NotInvertible("only single-term elements can be inverted")
        (m, c), = self.terms.items()
        inv_mono = self.pres.engine().monomial_inverse(m)
        return inv_mono.scale(c.inv())

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (Scalar, int)):
            other = Element.scalar(self.pres, other)
        if not isinstance(other, Element):
            return NotImplemented
        if self.pres is not other.pres and self.pres != other.pres:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.pres.gen_names, frozenset(self.terms.items())))

    def __repr__(self):
        from .exprs import format_element

        return f"<{format_element(self)}>"
