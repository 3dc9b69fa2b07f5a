"""Normal-form rewriting: products, commutators and inverses.

The engine normalizes products against the defining relations
x_j x_i = q_ij x_i x_j + c0_ij + sum_t c_ij^t x_t (i < j). Everything reduces
to inserting one signed generator at a time on the right of a normal form:

* inserting x_i uses cached single-swap rules x_j^{s} x_i -> normal form,
  derived once per (j, i, sign pattern): the (+,+) rule is the relation
  itself; the (-,+) and (+,-) rules come from conjugating the relation by
  the invertible generator, which only cascades into strictly smaller first
  indices (the zero pattern keeps those tails below i), so the derivation
  is a finite structural recursion;
* inserting x_i^{-1} (i <= r) is exact right-division by x_i: insertion is
  triangular for deglex (the main image strictly dominates the affine-tail
  corrections), so eliminating leading terms strips exactly one term of the
  true quotient per step and terminates. The (-,-) swap rule is obtained the
  same way, since its conjugation identity is self-referential.

Multiplication inserts the right factor's generators left to right. A
monomial product takes a direct q-power shortcut when no crossed pair has a
relation tail; the shortcut is checked against the general route in the test
suite rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, Presentation, deglex_key, validate_presentation
from .errors import NotInvertible, UnsupportedRelation, ValidationFailure

_POS, _NEG = 1, -1


@dataclass(frozen=True)
class SwapRule:
    """Normal form of x_j^{sign_j} * x_i^{sign_i} for one pair j > i."""

    j: int
    i: int
    sign_j: int
    sign_i: int
    rhs: Element


class RewriteEngine:
    """Per-presentation rewriting state: swap rules, insertion memo, scalar
    power cache. Presentations are validated (basic) before first use."""

    def __init__(self, pres: Presentation):
        validate_presentation(pres, "basic")
        self.p = pres
        self._swaps = {}
        self._insert_memo = {}
        self._qpow = {}

    # -- scalar power cache -------------------------------------------------

    def qpow(self, s, k: int):
        if k == 0:
            return self.p.field.one
        if k == 1:
            return s
        key = (s, k)
        got = self._qpow.get(key)
        if got is None:
            got = s ** k
            self._qpow[key] = got
        return got

    # -- swap rules -----------------------------------------------------------

    def swap(self, j: int, i: int, sign_j: int, sign_i: int) -> SwapRule:
        """Cached normal form of the length-two word x_j^{sign_j} x_i^{sign_i}."""
        if not 1 <= i < j <= self.p.n:
            raise UnsupportedRelation(f"swap needs 1 <= i < j <= n, got ({i}, {j})")
        for idx, sg in ((j, sign_j), (i, sign_i)):
            if sg not in (_POS, _NEG):
                raise UnsupportedRelation("swap signs must be +1 or -1")
            if sg == _NEG and idx > self.p.r:
                raise NotInvertible(
                    f"generator {self.p.gen_names[idx - 1]} is outside the invertible block"
                )
        key = (j, i, sign_j, sign_i)
        got = self._swaps.get(key)
        if got is None:
            got = SwapRule(j, i, sign_j, sign_i, self._derive_swap(j, i, sign_j, sign_i))
            self._swaps[key] = got
        return got

    def _relation_element(self, i, j) -> Element:
        """q_ij x_i x_j + c0_ij + sum_t c_ij^t x_t, the normal form of x_j x_i."""
        p = self.p
        e = [0] * p.n
        e[i - 1] = 1
        e[j - 1] += 1
        out = Element.monomial(p, tuple(e), p.q_(i, j))
        c0 = p.c0_(i, j)
        if not c0.is_zero:
            out = out + Element.scalar(p, c0)
        for (ii, jj, t), c in p.c1.items():
            if ii == i and jj == j:
                out = out + Element.monomial(p, self._unit(t), c)
        return out

    def _unit(self, t, e=1):
        v = [0] * self.p.n
        v[t - 1] = e
        return tuple(v)

    def _shift(self, f: Element, t, e) -> Element:
        """Append x_t^e to every term of f by exponent merge. Only valid when
        no term of f has support strictly above t."""
        out = {}
        for m, c in f.terms.items():
            assert all(m[k] == 0 for k in range(t, self.p.n)), "shift past live support"
            m2 = list(m)
            m2[t - 1] += e
            out[tuple(m2)] = c
        return Element(self.p, out)

    def _derive_swap(self, j, i, sign_j, sign_i) -> Element:
        p = self.p
        if sign_j == _POS and sign_i == _POS:
            return self._relation_element(i, j)
        if sign_j == _NEG and sign_i == _POS:
            # x_j^-1 x_i = q^-1 x_i x_j^-1 - q^-1 (c0 x_j^-2
            #              + sum_{l<i} c_l (x_j^-1 x_l) x_j^-1)
            qinv = p.q_(i, j).inv()
            e = [0] * p.n
            e[i - 1] = 1
            e[j - 1] = -1
            out = Element.monomial(p, tuple(e), qinv)
            c0 = p.c0_(i, j)
            if not c0.is_zero:
                out = out - Element.monomial(p, self._unit(j, -2), qinv * c0)
            for l in range(1, i):
                cl = p.c1_(i, j, l)
                if cl.is_zero:
                    continue
                inner = self.swap(j, l, _NEG, _POS).rhs
                out = out - self._shift(inner, j, -1).scale(qinv * cl)
            self._check_tail_pattern(i, j)
            return out
        if sign_j == _POS and sign_i == _NEG:
            # x_j x_i^-1 = q^-1 x_i^-1 x_j - q^-1 (c0 x_i^-2
            #              + sum_{l<i} c_l (x_i^-1 x_l) x_i^-1)
            qinv = p.q_(i, j).inv()
            e = [0] * p.n
            e[i - 1] = -1
            e[j - 1] = 1
            out = Element.monomial(p, tuple(e), qinv)
            c0 = p.c0_(i, j)
            if not c0.is_zero:
                out = out - Element.monomial(p, self._unit(i, -2), qinv * c0)
            for l in range(1, i):
                cl = p.c1_(i, j, l)
                if cl.is_zero:
                    continue
                inner = self.swap(i, l, _NEG, _POS).rhs
                out = out - self._shift(inner, i, -1).scale(qinv * cl)
            self._check_tail_pattern(i, j)
            return out
        # (-,-): solve E x_i = x_j^-1 exactly.
        self._check_tail_pattern(i, j)
        return self.divide_right(Element.monomial(self.p, self._unit(j, -1)), i)

    def _check_tail_pattern(self, i, j):
        """Conjugation formulas assume tails of an invertible pair stay below
        the smaller index; basic validation enforces this, but the engine
        re-checks so an unvalidated presentation fails loudly."""
        p = self.p
        if not p.c0_(1, j).is_zero and i == 1:
            raise UnsupportedRelation(f"pair (1, {j}) carries a constant")
        for (ii, jj, t), c in p.c1.items():
            if ii == i and jj == j and t >= i and not c.is_zero:
                raise UnsupportedRelation(
                    f"tail of pair ({i}, {j}) at index {t} blocks inversion"
                )

    # -- single-generator insertion ------------------------------------------

    def mono_insert(self, exps, i: int) -> Element:
        """Normal form of x^exps * x_i (memoized)."""
        key = (exps, i)
        got = self._insert_memo.get(key)
        if got is not None:
            return got
        p = self.p
        t = 0
        for k in range(p.n, i, -1):
            if exps[k - 1] != 0:
                t = k
                break
        if t == 0:
            m2 = list(exps)
            m2[i - 1] += 1
            out = Element.monomial(p, tuple(m2))
        else:
            s = _POS if exps[t - 1] > 0 else _NEG
            rule = self.swap(t, i, s, _POS).rhs
            base = list(exps)
            base[t - 1] -= s
            base = tuple(base)
            out = Element.zero(p)
            for m, c in rule.terms.items():
                out = out + self.append_word(base, m).scale(c)
        self._insert_memo[key] = out
        return out

    def insert_pos(self, f: Element, i: int) -> Element:
        out = Element.zero(self.p)
        for m, c in f.terms.items():
            out = out + self.mono_insert(m, i).scale(c)
        return out

    def insert_neg(self, f: Element, i: int) -> Element:
        """Normal form of f * x_i^-1 for invertible x_i. Terms whose crossed
        pairs are tail-free merge directly; the rest go through division."""
        p = self.p
        if i > p.r:
            raise NotInvertible(
                f"generator {p.gen_names[i - 1]} is outside the invertible block"
            )
        easy = {}
        hard = {}
        for m, c in f.terms.items():
            coeff = c
            direct = True
            for jj in range(i + 1, p.n + 1):
                if m[jj - 1] == 0:
                    continue
                if p.pair_tail_free(i, jj):
                    coeff = coeff * self.qpow(p.q_(i, jj), -m[jj - 1])
                else:
                    direct = False
                    break
            if direct:
                m2 = list(m)
                m2[i - 1] -= 1
                easy[tuple(m2)] = easy.get(tuple(m2), p.field.zero) + coeff
            else:
                hard[m] = c
        out = Element(p, {m: c for m, c in easy.items() if not c.is_zero})
        if hard:
            out = out + self.divide_right(Element(p, hard), i)
        return out

    def right_mul_generator(self, f: Element, i: int, sign: int = _POS) -> Element:
        if not 1 <= i <= self.p.n:
            raise UnsupportedRelation(f"generator index {i} out of range")
        if sign == _POS:
            return self.insert_pos(f, i)
        if sign == _NEG:
            return self.insert_neg(f, i)
        raise UnsupportedRelation("sign must be +1 or -1")

    def divide_right(self, f: Element, i: int) -> Element:
        """The unique E with E * x_i = f, by leading-term elimination.
        Raises NotInvertible when no preimage monomial exists (exponent at a
        non-invertible position would go negative)."""
        p = self.p
        quotient = {}
        rest = f
        while rest:
            m, c = rest.leading_term()
            if m[i - 1] == 0 and i > p.r:
                raise NotInvertible(
                    f"{p.gen_names[i - 1]} does not divide the leading term"
                )
            m2 = list(m)
            m2[i - 1] -= 1
            m2 = tuple(m2)
            image = self.mono_insert(m2, i)
            lead_m, lead_c = image.leading_term()
            assert lead_m == m, "insertion image lost deglex triangularity"
            coef = c / lead_c
            quotient[m2] = quotient.get(m2, p.field.zero) + coef
            rest = rest - image.scale(coef)
        return Element(p, {m: c for m, c in quotient.items() if not c.is_zero})

    # -- products --------------------------------------------------------------

    def append_word(self, base_exps, word_exps) -> Element:
        """Normal form of x^base * x^word, inserting the word's generators in
        ascending position order."""
        out = Element.monomial(self.p, base_exps)
        for pos in range(1, self.p.n + 1):
            e = word_exps[pos - 1]
            if e > 0:
                for _ in range(e):
                    out = self.insert_pos(out, pos)
            elif e < 0:
                for _ in range(-e):
                    out = self.insert_neg(out, pos)
        return out

    def _mono_product_fast(self, a, b, ca_cb):
        """Direct q-power product of two monomials, valid when every crossed
        pair is tail-free; returns None when a crossed pair has a tail."""
        p = self.p
        coeff = ca_cb
        for i in range(1, p.n + 1):
            bi = b[i - 1]
            if bi == 0:
                continue
            for j in range(i + 1, p.n + 1):
                aj = a[j - 1]
                if aj == 0:
                    continue
                if not p.pair_tail_free(i, j):
                    return None
                coeff = coeff * self.qpow(p.q_(i, j), aj * bi)
        return Element.monomial(p, tuple(x + y for x, y in zip(a, b)), coeff)

    def multiply(self, f: Element, g: Element) -> Element:
        out = Element.zero(self.p)
        for b, cb in g.terms.items():
            for a, ca in f.terms.items():
                c = ca * cb
                fast = self._mono_product_fast(a, b, c)
                if fast is None:
                    fast = self.append_word(a, b).scale(c)
                out = out + fast
        return out

    def commutator(self, f: Element, g: Element) -> Element:
        return self.multiply(f, g) - self.multiply(g, f)

    def monomial_inverse(self, exps) -> Element:
        """Inverse of the monomial x^exps; requires support inside the
        invertible block."""
        p = self.p
        exps = tuple(exps)
        for k in range(p.r, p.n):
            if exps[k] != 0:
                raise NotInvertible(
                    f"generator {p.gen_names[k]} is outside the invertible block"
                )
        out = p.one()
        for l in range(p.r, 0, -1):
            if exps[l - 1]:
                out = self.multiply(out, Element.monomial(p, self._unit(l, -exps[l - 1])))
        return out


# -- module-level entry points ------------------------------------------------


def derive_swap(p: Presentation, j: int, i: int, sign_j: int = 1, sign_i: int = 1) -> SwapRule:
    return p.engine().swap(j, i, sign_j, sign_i)


def right_mul_generator(f: Element, i: int, sign: int = 1) -> Element:
    return f.pres.engine().right_mul_generator(f, i, sign)


def multiply(f: Element, g: Element) -> Element:
    return f.pres.engine().multiply(f, g)


def commutator(f: Element, g: Element) -> Element:
    return f.pres.engine().commutator(f, g)


def monomial_inverse(p: Presentation, exps) -> Element:
    return p.engine().monomial_inverse(exps)


def check_overlaps(p: Presentation) -> None:
    """Confluence test for the relation set.

    A presentation with lower-order terms in its relations only defines an
    associative product if every overlap word x_k x_j x_i (k > j > i) reduces
    to the same normal form whichever adjacent pair is rewritten first.  Pure
    q-relations always pass; constants and tails impose compatibility
    equations between the q_ij (for example a constant on the (i, j) relation
    forces the product of q_ti over the tail's crossing pairs to be 1).

    Raises ValidationFailure naming the first inconsistent triple.
    """
    eng = p.engine()
    for k in range(3, p.n + 1):
        for j in range(2, k):
            for i in range(1, j):
                xk, xj, xi = p.gen(k), p.gen(j), p.gen(i)
                left = eng.multiply(eng.multiply(xk, xj), xi)
                right = eng.multiply(xk, eng.multiply(xj, xi))
                if left != right:
                    raise ValidationFailure(
                        "relations are not confluent on overlap", (i, j, k)
                    )
