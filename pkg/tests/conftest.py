"""Shared fixtures: small presentations and seeded random element builders."""

import random

import pytest

from skewpbw import Element, build_example, localize_presentation


def rand_monomial(p, rng, max_abs=3):
    """Exponent tuple with entries in [-max_abs, max_abs] on the invertible
    block and [0, max_abs] elsewhere."""
    return tuple(
        rng.randint(-max_abs if t < p.r else 0, max_abs) for t in range(p.n)
    )


def rand_element(p, rng, terms=2, max_abs=2):
    """Sum of `terms` random monomials with small integer coefficients.
    May have fewer stored terms after collisions; never returns zero."""
    out = p.zero()
    for _ in range(terms):
        coeff = p.field.from_int(rng.randint(1, 5))
        out = out + Element.monomial(p, rand_monomial(p, rng, max_abs), coeff)
    if not out.terms:
        return p.one()
    return out


def rand_scalar(field, rng):
    """Small random field element, occasionally involving a parameter."""
    k = field.from_int(rng.randint(1, 7))
    if field.params and rng.random() < 0.5:
        k = k * field.param(rng.choice(field.params)) + field.from_int(rng.randint(0, 2))
    return k


def pure_q_product_oracle(p, a, b):
    """Independent product of two monomials in a presentation whose relations
    are all pure q-relations: moving x_i^(a_i) across x_j^(b_j) for j < i
    contributes q_ji^(a_i * b_j), multiplicatively in both exponents."""
    coeff = p.field.one
    for i in range(2, p.n + 1):
        for j in range(1, i):
            e = a[i - 1] * b[j - 1]
            if e:
                coeff = coeff * p.q_(j, i) ** e
    exps = tuple(x + y for x, y in zip(a, b))
    return Element.monomial(p, exps, coeff)


@pytest.fixture(scope="session")
def qplane():
    return build_example("qdiff")


@pytest.fixture(scope="session")
def qplane_l(qplane):
    return localize_presentation(qplane)


@pytest.fixture(scope="session")
def sq3():
    return build_example("quantum_space", n=3)


@pytest.fixture(scope="session")
def sq3_l(sq3):
    return localize_presentation(sq3)


@pytest.fixture
def rng():
    return random.Random(0)
