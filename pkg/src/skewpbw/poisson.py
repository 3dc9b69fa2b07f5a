"""Poisson brackets given on generator pairs: evaluation, axiom checking,
classification against the commutator, and Laurent extension.

A bracket is stored as the table B_ij = {x_i, x_j} for i < j and extended to
arbitrary elements by a fixed recursion: bilinearity over scalar
coefficients, the Leibniz rule {ab, c} = {a, c} b + a {b, c} peeling the
leftmost generator factor of the first slot, antisymmetry to turn
{x_i, composite} around, and the inverse rule
{x_l^-1, c} = -x_l^-1 {x_l, c} x_l^-1. Well-definedness across other
factorization orders is not assumed; verify_poisson samples the axioms and
reports the first counterexample instead.

classify_bracket decides whether the table is a scalar multiple of the
commutator, B_ij = xi [x_i, x_j] for a single xi across all pairs, which is
the only shape an A-bilinear Poisson bracket can take when every 1 - q_ij
is a unit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .algebra import Element, Presentation, validate_presentation
from .errors import AllCommutatorsZero, NotClassifiable, ValidationFailure
from .scalars import Scalar


class GeneratorBracket:
    """Bracket table on generator pairs; entries default to zero."""

    def __init__(self, pres: Presentation, table=None):
        self.pres = pres
        self.table = {}
        for (i, j), el in (table or {}).items():
            if not (1 <= i < j <= pres.n):
                raise ValidationFailure("bracket entry at invalid pair", (i, j))
            if el.pres is not pres and el.pres != pres:
                raise ValidationFailure("bracket entry on a different presentation")
            if not el.is_zero:
                self.table[(i, j)] = el
        self._memo = {}

    @classmethod
    def xi_commutator(cls, pres: Presentation, xi) -> "GeneratorBracket":
        """The table B_ij = xi [x_i, x_j]."""
        if isinstance(xi, int):
            xi = pres.field.from_int(xi)
        eng = pres.engine()
        table = {}
        for i in range(1, pres.n + 1):
            for j in range(i + 1, pres.n + 1):
                table[(i, j)] = eng.commutator(pres.gen(i), pres.gen(j)).scale(xi)
        return cls(pres, table)

    def entry(self, i: int, j: int) -> Element:
        """{x_i, x_j} for any i, j: antisymmetric by construction."""
        if i == j:
            return self.pres.zero()
        if i < j:
            return self.table.get((i, j), self.pres.zero())
        return -self.table.get((j, i), self.pres.zero())

    def __repr__(self):
        body = ", ".join(f"b{i}{j} = {el!r}" for (i, j), el in sorted(self.table.items()))
        return f"GeneratorBracket({body or '0'})"


def _peel(exps):
    """Leftmost generator factor of a monomial: (index, sign, rest)."""
    for k, e in enumerate(exps):
        if e:
            sign = 1 if e > 0 else -1
            rest = list(exps)
            rest[k] -= sign
            return k + 1, sign, tuple(rest)
    return None


def _mono_bracket(B: GeneratorBracket, a, b) -> Element:
    """{x^a, x^b} by the fixed recursion; both arguments are exponent
    tuples. Memoized per bracket table."""
    memo = B._memo
    got = memo.get((a, b))
    if got is not None:
        return got
    p = B.pres
    eng = p.engine()
    pa, pb = _peel(a), _peel(b)
    if pa is None or pb is None:
        out = p.zero()
    else:
        i, sign, rest = pa
        if sign < 0:
            # {x_i^-1 rest, b} = {x_i^-1, b} rest + x_i^-1 {rest, b}
            # with {x_i^-1, b} = -x_i^-1 {x_i, b} x_i^-1
            xinv = Element.monomial(p, p.gen_exps(i, -1))
            head = -eng.multiply(
                eng.multiply(xinv, _mono_bracket(B, p.gen_exps(i), b)), xinv
            )
            out = eng.multiply(head, Element.monomial(p, rest)) + eng.multiply(
                xinv, _mono_bracket(B, rest, b)
            )
        elif any(rest):
            # {x_i rest, b} = {x_i, b} rest + x_i {rest, b}
            out = eng.multiply(
                _mono_bracket(B, p.gen_exps(i), b), Element.monomial(p, rest)
            ) + eng.multiply(p.gen(i), _mono_bracket(B, rest, b))
        else:
            j, sign_b, rest_b = pb
            if sign_b > 0 and not any(rest_b):
                out = B.entry(i, j)
            else:
                # first slot is a bare generator: flip and peel the other side
                out = -_mono_bracket(B, b, a)
    memo[(a, b)] = out
    return out


def bracket_eval(B: GeneratorBracket, a: Element, b: Element) -> Element:
    """{a, b} extended bilinearly from the generator table."""
    p = B.pres
    out = p.zero()
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            out = out + _mono_bracket(B, ma, mb).scale(ca * cb)
    return out


@dataclass
class VerifyReport:
    ok: bool
    checked: int
    axiom: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _degree_monomials(p: Presentation, max_deg: int):
    """All monomials with exponents in [0, max_deg] (and down to -1 on the
    invertible block) of total absolute size <= max_deg."""
    out = []

    def rec(prefix, budget):
        k = len(prefix)
        if k == p.n:
            out.append(tuple(prefix))
            return
        lo = -1 if k < p.r else 0
        for e in range(lo, budget + 1):
            cost = abs(e)
            if cost <= budget:
                rec(prefix + [e], budget - cost)

    rec([], max_deg)
    return [m for m in out if any(m)]


def verify_poisson(
    B: GeneratorBracket, sample_budget: int = 50, seed: int = 0, max_degree: int = 3
) -> VerifyReport:
    """Check antisymmetry, Leibniz and Jacobi.

    Runs a deterministic sweep before sampling: antisymmetry over all
    monomial pairs of size <= 2, because random triples can miss small
    structured failures (a non-commutator table typically first breaks
    antisymmetry at a low-degree power pair). Then `sample_budget` seeded
    random monomial triples get all three axioms. Returns a report with the
    first counterexample rather than raising.
    """
    p = B.pres
    eng = p.engine()
    checked = 0

    def anti(a, b):
        return bracket_eval(B, a, b) + bracket_eval(B, b, a)

    def leibniz(a, b, c):
        lhs = bracket_eval(B, eng.multiply(a, b), c)
        return lhs - bracket_eval(B, a, c) * b - a * bracket_eval(B, b, c)

    def jacobi(a, b, c):
        return (
            bracket_eval(B, a, bracket_eval(B, b, c))
            + bracket_eval(B, b, bracket_eval(B, c, a))
            + bracket_eval(B, c, bracket_eval(B, a, b))
        )

    sweep = [Element.monomial(p, m) for m in _degree_monomials(p, 2)]
    for ka, a in enumerate(sweep):
        for b in sweep[ka:]:
            checked += 1
            if not anti(a, b).is_zero:
                return VerifyReport(False, checked, "antisymmetry", (a, b))
    gens = [p.gen(i) for i in range(1, p.n + 1)]
    for a in gens:
        for b in gens:
            for c in gens:
                checked += 1
                if not leibniz(a, b, c).is_zero:
                    return VerifyReport(False, checked, "leibniz", (a, b, c))
                if not jacobi(a, b, c).is_zero:
                    return VerifyReport(False, checked, "jacobi", (a, b, c))

    rng = random.Random(seed)

    def rand_monomial():
        exps = [0] * p.n
        for _ in range(rng.randint(1, max_degree)):
            k = rng.randrange(p.n)
            if k < p.r and rng.random() < 0.3:
                exps[k] -= 1
            else:
                exps[k] += 1
        return Element.monomial(p, tuple(exps))

    for _ in range(sample_budget):
        a, b, c = rand_monomial(), rand_monomial(), rand_monomial()
        checked += 1
        if not anti(a, b).is_zero:
            return VerifyReport(False, checked, "antisymmetry", (a, b))
        if not leibniz(a, b, c).is_zero:
            return VerifyReport(False, checked, "leibniz", (a, b, c))
        if not jacobi(a, b, c).is_zero:
            return VerifyReport(False, checked, "jacobi", (a, b, c))
    return VerifyReport(True, checked)


@dataclass
class ClassificationResult:
    xi: Scalar
    certified_pairs: list = dc_field(default_factory=list)


def classify_bracket(
    B: GeneratorBracket, spot_checks: int = 5, seed: int = 0
) -> ClassificationResult:
    """Find the scalar xi with B_ij = xi [x_i, x_j] for every pair.

    The candidate comes from exact division on the first pair whose
    commutator is nonzero (leading coefficients must sit on the same
    monomial), then every pair is verified exactly and the identity
    {a, b} = xi [a, b] is spot-checked on seeded random element pairs.
    Raises NotClassifiable with the failing pair, or AllCommutatorsZero when
    the algebra is commutative so no pair can determine xi.
    """
    p = B.pres
    validate_presentation(p, "poisson")
    eng = p.engine()
    comms = {}
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            comms[(i, j)] = eng.commutator(p.gen(i), p.gen(j))
    if all(k.is_zero for k in comms.values()):
        raise AllCommutatorsZero()
    xi = None
    for (i, j), k in sorted(comms.items()):
        if k.is_zero:
            continue
        bij = B.entry(i, j)
        if bij.is_zero:
            xi = p.field.zero
            break
        mk, ck = k.leading_term()
        mb, cb = bij.leading_term()
        if mk != mb:
            raise NotClassifiable((i, j), detail="leading monomials differ")
        xi = cb / ck
        break
    certified = []
    for (i, j), k in sorted(comms.items()):
        if B.entry(i, j) != k.scale(xi):
            raise NotClassifiable((i, j), detail=f"B_{i}{j} is not xi [x_i, x_j]")
        certified.append((i, j))
    rng = random.Random(seed)

    def rand_el():
        out = p.zero()
        for _ in range(rng.randint(1, 3)):
            exps = tuple(
                rng.randint(-1 if t < p.r else 0, 2) for t in range(p.n)
            )
            out = out + Element.monomial(p, exps, p.field.from_int(rng.randint(1, 3)))
        return out

    for _ in range(spot_checks):
        a, b = rand_el(), rand_el()
        if bracket_eval(B, a, b) != eng.commutator(a, b).scale(xi):
            raise NotClassifiable(
                None, detail="table matches on generators but not on elements"
            )
    return ClassificationResult(xi, certified)


def localize_presentation(p: Presentation) -> Presentation:
    """The same presentation with x_1 inverted (r = 0 -> r = 1). Requires
    the (1, j) relations to be pure q-relations, since moving x_1^-1 across
    a tail would need the tail itself to be invertible."""
    if p.r != 0:
        raise ValidationFailure("presentation is already localized", (p.r,))
    validate_presentation(p, "laurent")
    return Presentation(
        p.n, 1, p.gen_names, p.params, dict(p.q), c0=dict(p.c0), c1=dict(p.c1)
    )


def laurent_extend(p: Presentation, B: GeneratorBracket):
    """Carry a bracket to the localization at x_1: the generator table is
    unchanged, and the evaluation recursion covers inverse factors through
    the rule {x_1^-1, c} = -x_1^-1 {x_1, c} x_1^-1. Restriction to
    nonnegative exponents agrees with the original bracket."""
    p2 = localize_presentation(p)
    table = {
        pair: Element(p2, dict(el.terms)) for pair, el in B.table.items()
    }
    return p2, GeneratorBracket(p2, table)
