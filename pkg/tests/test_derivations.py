"""Twisted derivations: validation, adjoint preimages, decomposition."""

import pytest

from skewpbw import (
    DecompositionFailure,
    Element,
    GammaDerivation,
    HypothesisViolation,
    ToricAutomorphism,
    ValidationFailure,
    adjoint_preimage,
    apply_derivation,
    build_example,
    check_derivation,
    decompose_derivation,
    inner_apply,
    inner_derivation,
    parse_element,
    validate_automorphism,
)
from conftest import rand_element


def _id(p):
    return ToricAutomorphism.identity(p)


def test_non_derivation_rejected(qplane_l):
    # u_1 = x, u_2 = 0 leaves residual (1 - q) x^2 on the single relation
    d = GammaDerivation(_id(qplane_l), [qplane_l.gen(2), qplane_l.zero()])
    with pytest.raises(ValidationFailure) as exc:
        check_derivation(qplane_l, d)
    assert exc.value.indices == (1, 2)
    assert "x^2" in exc.value.detail


def test_inner_derivations_always_check(qplane_l, rng):
    for _ in range(10):
        w = rand_element(qplane_l, rng, terms=2, max_abs=2)
        check_derivation(qplane_l, inner_derivation(_id(qplane_l), w))


def test_twisted_product_rule(qplane_l, rng):
    g = ToricAutomorphism(qplane_l, [qplane_l.field.from_int(3), qplane_l.field.from_int(2)])
    validate_automorphism(qplane_l, g)
    w = parse_element(qplane_l, "y^-1*x + 2*y")
    d = inner_derivation(g, w)
    check_derivation(qplane_l, d)
    eng = qplane_l.engine()
    for _ in range(15):
        a = rand_element(qplane_l, rng, terms=2, max_abs=2)
        b = rand_element(qplane_l, rng, terms=2, max_abs=2)
        lhs = apply_derivation(d, eng.multiply(a, b))
        rhs = eng.multiply(apply_derivation(d, a), b) + eng.multiply(
            g.apply(a), apply_derivation(d, b)
        )
        assert lhs == rhs


def test_derivation_kills_scalars(qplane_l):
    d = inner_derivation(_id(qplane_l), parse_element(qplane_l, "y*x"))
    assert apply_derivation(d, qplane_l.one()).is_zero
    c = Element.scalar(qplane_l, qplane_l.field.param("q"))
    assert apply_derivation(d, c).is_zero


def test_automorphism_constraints_with_tails():
    p = build_example("skew3d", v="z")  # tail x3 on the (1, 2) relation
    F = p.field
    good = ToricAutomorphism(p, [F.from_int(2), F.from_int(3), F.from_int(6)])
    validate_automorphism(p, good)  # gamma_3 = gamma_1 gamma_2
    bad = ToricAutomorphism(p, [F.from_int(2), F.from_int(3), F.from_int(5)])
    with pytest.raises(ValidationFailure) as exc:
        validate_automorphism(p, bad)
    assert exc.value.indices == (1, 2, 3)
    with pytest.raises(ValidationFailure):
        validate_automorphism(p, ToricAutomorphism(p, [F.zero, F.one, F.one]))


def test_adjoint_preimage_identity_case(qplane_l):
    # w x1 - x1 w = x has the Laurent solution 1/(q - 1) y^-1 x
    v = qplane_l.gen(2)
    w = adjoint_preimage(qplane_l, _id(qplane_l), v)
    assert w == parse_element(qplane_l, "1/(q - 1)*y^-1*x")
    assert inner_apply(_id(qplane_l), w, qplane_l.gen(1)) == v


def test_adjoint_preimage_round_trip_random(qplane_l, sq3_l, rng):
    for p in (qplane_l, sq3_l):
        g = _id(p)
        for _ in range(20):
            # admissible targets: monomials that conjugation by x1 scales
            v = p.zero()
            while v.is_zero or any(
                all(e == 0 for e in exps[1:]) for exps in v.terms
            ):
                v = rand_element(p, rng, terms=2, max_abs=2)
            w = adjoint_preimage(p, g, v)
            assert inner_apply(g, w, p.gen(1)) == v


def test_adjoint_preimage_fixed_monomial_fails(qplane_l):
    with pytest.raises(HypothesisViolation) as exc:
        adjoint_preimage(qplane_l, _id(qplane_l), qplane_l.gen(1, 2))
    assert exc.value.monomial == (2, 0)


def test_adjoint_preimage_scaled_automorphism(qplane_l):
    F = qplane_l.field
    g = ToricAutomorphism(qplane_l, [F.from_int(2), F.one])
    # conjugation fixes x1, so (1 - gamma_1) w x1 = x1 gives w = -1
    w = adjoint_preimage(qplane_l, g, qplane_l.gen(1))
    assert w == -qplane_l.one()
    assert inner_apply(g, w, qplane_l.gen(1)) == qplane_l.gen(1)


def test_adjoint_preimage_needs_laurent_block(qplane):
    with pytest.raises(ValidationFailure):
        adjoint_preimage(qplane, _id(qplane), qplane.gen(2))


def test_decompose_pure_toric(qplane_l):
    F = qplane_l.field
    lam = (F.param("q"), F.from_int(3))
    d = GammaDerivation(
        _id(qplane_l),
        [qplane_l.gen(i).scale(lam[i - 1]) for i in (1, 2)],
    )
    w, lambdas = decompose_derivation(qplane_l, d)
    assert tuple(lambdas) == lam
    assert w.is_scalar


def test_decompose_inner_plus_toric(qplane_l):
    F = qplane_l.field
    z = parse_element(qplane_l, "y*x")
    g = _id(qplane_l)
    lam = (F.from_int(2), F.one - F.param("q"))
    u = [
        qplane_l.gen(i).scale(lam[i - 1]) + inner_apply(g, z, qplane_l.gen(i))
        for i in (1, 2)
    ]
    w, lambdas = decompose_derivation(qplane_l, GammaDerivation(g, u))
    assert tuple(lambdas) == lam
    assert (w - z).is_scalar


def test_decompose_rejects_unreachable(qplane_l):
    # u_1 = x1^2 is not lambda x1 plus an inner part
    d = GammaDerivation(_id(qplane_l), [qplane_l.gen(1, 2), qplane_l.zero()])
    with pytest.raises(DecompositionFailure) as exc:
        decompose_derivation(qplane_l, d)
    assert exc.value.index == 1


def test_decompose_twisted_inner(qplane_l):
    F = qplane_l.field
    g = ToricAutomorphism(qplane_l, [F.from_int(2), F.from_int(3)])
    wsrc = parse_element(qplane_l, "y^-1*x^2 + 5")
    d = inner_derivation(g, wsrc)
    w, lambdas = decompose_derivation(qplane_l, d)
    assert all(l.is_zero for l in lambdas)
    for i in (1, 2):
        assert inner_apply(g, w, qplane_l.gen(i)) == d.u_(i)


def test_decompose_unsupported_automorphism(qplane_l):
    F = qplane_l.field
    g = ToricAutomorphism(qplane_l, [F.one, F.from_int(2)])  # gamma_1 = 1, gamma != id
    d = inner_derivation(g, qplane_l.gen(2))
    with pytest.raises(DecompositionFailure):
        decompose_derivation(qplane_l, d)
