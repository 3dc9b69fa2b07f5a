"""Toric automorphisms, twisted derivations and their inner decomposition.

A toric automorphism scales each generator, gamma(x_i) = gamma_i x_i, and
fixes scalars. A gamma-derivation is determined by its generator values
u_i = d(x_i) together with the twisted Leibniz rule
d(ab) = d(a) b + gamma(a) d(b); scalars map to zero. The adjoint operator of
an element w is [ad_gamma w] a = w a - gamma(a) w.

The two solvers invert the adjoint map on the first generator:

* adjoint_preimage finds w with [ad_gamma w] x_1 = v, one monomial at a
  time: conjugating rho X by x_1 multiplies it by the crossing scalar
  gamma_1 prod_j q_1j^(-m_j), so w takes the term (1 - that)^(-1) rho X x_1^(-1)
  whenever the factor is invertible.
* decompose_derivation splits a derivation into a toric scaling plus an
  inner part, u_j = lambda_j x_j + [ad_gamma w] x_j. For gamma = id the
  x_1-Laurent part of u_1 cannot be hit by the adjoint, so it is set aside,
  the rest is solved by adjoint_preimage, and a second pass through u_2
  peels the residual x_1-series correction; for gamma_1 != 1 every
  derivation is inner and lambda = 0. Anything left over is reported as a
  DecompositionFailure with the offending residual.
"""

from __future__ import annotations

from .algebra import Element, Presentation, validate_presentation
from .errors import (
    DecompositionFailure,
    HypothesisViolation,
    NDependenceViolation,
    ValidationFailure,
)
from .scalars import Scalar


class ToricAutomorphism:
    """Diagonal algebra automorphism x_i -> gamma_i x_i."""

    __slots__ = ("pres", "gammas")

    def __init__(self, pres: Presentation, gammas):
        gammas = tuple(gammas)
        if len(gammas) != pres.n:
            raise ValidationFailure("automorphism needs one scalar per generator")
        self.pres = pres
        self.gammas = tuple(
            g if isinstance(g, Scalar) else pres.field.from_int(g) for g in gammas
        )

    @classmethod
    def identity(cls, pres: Presentation) -> "ToricAutomorphism":
        return cls(pres, [pres.field.one] * pres.n)

    def gamma(self, i: int):
        return self.gammas[i - 1]

    @property
    def is_identity(self) -> bool:
        return all(g == 1 for g in self.gammas)

    def monomial_factor(self, exps):
        """gamma(x^m) = (prod gamma_i^(m_i)) x^m; this is the scalar."""
        f = self.pres.field.one
        for g, e in zip(self.gammas, exps):
            if e:
                f = f * g ** e
        return f

    def apply(self, f: Element) -> Element:
        terms = {m: c * self.monomial_factor(m) for m, c in f.terms.items()}
        return Element(self.pres, terms)

    def __repr__(self):
        return f"ToricAutomorphism({', '.join(str(g) for g in self.gammas)})"


def validate_automorphism(p: Presentation, g: ToricAutomorphism) -> None:
    """A diagonal scaling extends to the algebra iff it fixes every relation:
    scaling x_j x_i - q_ij x_i x_j by gamma_i gamma_j must also scale each
    lower-order term, so constants need gamma_i gamma_j = 1 and an x_t tail
    needs gamma_t = gamma_i gamma_j wherever the coefficient is nonzero.
    """
    if g.pres is not p and g.pres != p:
        raise ValidationFailure("automorphism belongs to a different presentation")
    for i, gi in enumerate(g.gammas, start=1):
        if gi.is_zero:
            raise ValidationFailure("automorphism scalar must be nonzero", (i,))
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            gij = g.gamma(i) * g.gamma(j)
            if not p.c0_(i, j).is_zero and gij != 1:
                raise ValidationFailure(
                    "automorphism breaks relation constant", (i, j, 0)
                )
            for t in range(1, p.n + 1):
                if not p.c1_(i, j, t).is_zero and g.gamma(t) != gij:
                    raise ValidationFailure(
                        "automorphism breaks relation tail", (i, j, t)
                    )


class GammaDerivation:
    """Derivation twisted by a toric automorphism, given on generators."""

    def __init__(self, gamma: ToricAutomorphism, u):
        self.pres = gamma.pres
        self.gamma = gamma
        u = tuple(u)
        if len(u) != self.pres.n:
            raise ValidationFailure("derivation needs one element per generator")
        for ui in u:
            if ui.pres is not self.pres and ui.pres != self.pres:
                raise ValidationFailure("derivation value on a different presentation")
        self.u = u
        self._memo = {}

    def u_(self, i: int) -> Element:
        return self.u[i - 1]

    def __repr__(self):
        vals = ", ".join(f"d({nm}) = {ui!r}" for nm, ui in zip(self.pres.gen_names, self.u))
        return f"GammaDerivation({vals})"


def _apply_monomial(d: GammaDerivation, exps) -> Element:
    """d(x^m) by peeling the leftmost generator factor: with a = x_i^(+-1)
    and b the rest of the monomial, d(ab) = d(a) b + gamma(a) d(b). The
    remaining factor keeps its normal form, so the recursion never reorders
    anything.
    """
    memo = d._memo
    got = memo.get(exps)
    if got is not None:
        return got
    p = d.pres
    eng = p.engine()
    i = next((k + 1 for k, e in enumerate(exps) if e), None)
    if i is None:
        out = p.zero()
    else:
        sign = 1 if exps[i - 1] > 0 else -1
        rest = list(exps)
        rest[i - 1] -= sign
        rest = tuple(rest)
        rest_el = Element.monomial(p, rest)
        gi = d.gamma.gamma(i)
        if sign > 0:
            da = d.u_(i)
            ga = Element.monomial(p, p.gen_exps(i)).scale(gi)
        else:
            xim = Element.monomial(p, p.gen_exps(i, -1))
            da = eng.multiply(eng.multiply(xim, d.u_(i)), xim).scale(-gi.inv())
            ga = xim.scale(gi.inv())
        out = eng.multiply(da, rest_el) + eng.multiply(ga, _apply_monomial(d, rest))
    memo[exps] = out
    return out


def apply_derivation(d: GammaDerivation, f: Element) -> Element:
    """Extend d from generators to any element; linear over scalars."""
    out = d.pres.zero()
    for m, c in f.terms.items():
        out = out + _apply_monomial(d, m).scale(c)
    return out


def inner_apply(g: ToricAutomorphism, u: Element, a: Element) -> Element:
    """[ad_gamma u] a = u a - gamma(a) u."""
    eng = u.pres.engine()
    return eng.multiply(u, a) - eng.multiply(g.apply(a), u)


def inner_derivation(g: ToricAutomorphism, w: Element) -> GammaDerivation:
    p = g.pres
    return GammaDerivation(g, [inner_apply(g, w, p.gen(i)) for i in range(1, p.n + 1)])


def check_derivation(p: Presentation, d: GammaDerivation) -> None:
    """Generator values extend to a well-defined derivation only if both
    Leibniz expansions of every relation agree: d(x_j x_i) computed directly
    must match d applied to q_ij x_i x_j + constants. Raises
    ValidationFailure carrying the first nonzero residual. Inverse
    consistency d(x_i x_i^(-1)) = 0 is checked for i <= r as well.
    """
    validate_automorphism(p, d.gamma)
    eng = p.engine()
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            xi, xj = p.gen(i), p.gen(j)
            lhs = eng.multiply(d.u_(j), xi) + eng.multiply(
                d.gamma.apply(xj), d.u_(i)
            )
            rhs = (
                eng.multiply(d.u_(i), xj) + eng.multiply(d.gamma.apply(xi), d.u_(j))
            ).scale(p.q_(i, j))
            for t in range(1, p.n + 1):
                ct = p.c1_(i, j, t)
                if not ct.is_zero:
                    rhs = rhs + d.u_(t).scale(ct)
            res = lhs - rhs
            if not res.is_zero:
                raise ValidationFailure(
                    "generator values do not satisfy the relation",
                    (i, j),
                    detail=f"residual {res!r}",
                )
    for i in range(1, p.r + 1):
        xinv = Element.monomial(p, p.gen_exps(i, -1))
        dinv = _apply_monomial(d, p.gen_exps(i, -1))
        res = eng.multiply(d.u_(i), xinv) + eng.multiply(
            p.gen(i).scale(d.gamma.gamma(i)), dinv
        )
        if not res.is_zero:
            raise ValidationFailure(
                "derivation does not kill x_i x_i^(-1)", (i,), detail=f"residual {res!r}"
            )


def _crossing_factor(p: Presentation, exps):
    """Scalar sigma with x_1 x^m x_1^(-1) = sigma x^m: crossing x_1 from the
    left past x_j^(m_j) contributes q_1j^(-m_j) for each j >= 2 (the (1, j)
    relations are pure by the laurent validation tier).
    """
    eng = p.engine()
    sigma = p.field.one
    for j in range(2, p.n + 1):
        mj = exps[j - 1]
        if mj:
            sigma = sigma * eng.qpow(p.q_(1, j), -mj)
    return sigma


def adjoint_preimage(p: Presentation, g: ToricAutomorphism, v: Element) -> Element:
    """Solve [ad_gamma w] x_1 = v for w.

    Works monomial by monomial: for v = rho x^m, conjugation gives
    x_1 (rho x^m) x_1^(-1) = sigma rho x^m with sigma the crossing factor, so
    w = h^(-1) rho x^m x_1^(-1) with h = 1 - gamma_1 sigma satisfies
    [ad_gamma w] x_1 = w x_1 - gamma_1 x_1 w = h^(-1) (1 - gamma_1 sigma) v = v.
    Monomials with h = 0 (for gamma = id, exactly the pure x_1-powers) are
    outside the adjoint image and raise HypothesisViolation.
    """
    validate_presentation(p, "laurent")
    validate_automorphism(p, g)
    if p.r < 1:
        raise ValidationFailure("first generator must be invertible")
    eng = p.engine()
    g1 = g.gamma(1)
    x1inv = Element.monomial(p, p.gen_exps(1, -1))
    w = p.zero()
    for m, rho in v.terms.items():
        h = p.field.one - g1 * _crossing_factor(p, m)
        if h.is_zero:
            raise HypothesisViolation(
                m,
                detail="monomial is fixed by conjugation with x_1, so it is "
                "not in the image of the adjoint",
            )
        w = w + eng.multiply(Element.monomial(p, m), x1inv).scale(h.inv() * rho)
    return w


def _pure_x1_split(p: Presentation, f: Element):
    """Split f into (terms supported on x_1 powers alone, the rest)."""
    pure = {}
    rest = {}
    for m, c in f.terms.items():
        if any(e for e in m[1:]):
            rest[m] = c
        else:
            pure[m] = c
    return Element(p, pure), Element(p, rest)


def decompose_derivation(p: Presentation, d: GammaDerivation):
    """Split d into a toric scaling plus an inner derivation: returns
    (w, lambdas) with u_j = lambda_j x_j + [ad_gamma w] x_j for every j.

    For gamma_1 != 1 every generator value lies in the adjoint image, so
    w = adjoint_preimage(u_1) and all lambda_j = 0. For gamma = id the pure
    x_1-Laurent part of u_1 is unreachable; the remainder v_1 gives
    w = adjoint_preimage(v_1), and whatever x_1^s x_2 terms survive in
    u_2 - [ad w] x_2 are absorbed by the correction
    w' = sum_s (1 - q_12^s)^(-1) rho_s x_1^s. The returned w is the sum.
    lambda_j is then read off u_j - [ad w] x_j, which must equal
    lambda_j x_j on the nose; any other leftover raises
    DecompositionFailure carrying the residual.
    """
    validate_presentation(p, "laurent")
    validate_automorphism(p, d.gamma)
    if p.r < 1:
        raise ValidationFailure("first generator must be invertible")
    g = d.gamma
    g1 = g.gamma(1)
    if g1 != 1:
        w = adjoint_preimage(p, g, d.u_(1))
    elif g.is_identity:
        pure1, v1 = _pure_x1_split(p, d.u_(1))
        w = adjoint_preimage(p, g, v1)
        if p.n >= 2:
            ubar2 = d.u_(2) - inner_apply(g, w, p.gen(2))
            q12 = p.q_(1, 2)
            for m, rho in ubar2.terms.items():
                s = m[0]
                if s == 0 or m[1] != 1 or any(m[2:]):
                    continue
                den = p.field.one - q12 ** s
                if den.is_zero:
                    raise NDependenceViolation(
                        den, context=f"1 - q_12^{s} while peeling the x_1-series"
                    )
                shift = tuple(s if k == 0 else 0 for k in range(p.n))
                w = w + Element.monomial(p, shift).scale(den.inv() * rho)
    else:
        raise DecompositionFailure(
            "automorphism fixes x_1 but is not the identity; neither "
            "decomposition shape applies"
        )
    lambdas = []
    for j in range(1, p.n + 1):
        res = d.u_(j) - inner_apply(g, w, p.gen(j))
        if res.is_zero:
            lambdas.append(p.field.zero)
            continue
        terms = res.terms
        ej = p.gen_exps(j)
        if g.is_identity and len(terms) == 1 and ej in terms:
            lambdas.append(terms[ej])
            continue
        raise DecompositionFailure(
            f"generator value u_{j} is not toric plus inner",
            residual=res,
            index=j,
        )
    return w, lambdas
