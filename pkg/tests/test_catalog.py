"""Built-in example algebras: construction, options, eligibility."""

import pytest

from skewpbw import (
    GeneratorBracket,
    InvalidOptions,
    UnknownExample,
    build_example,
    check_overlaps,
    classify_bracket,
    eligible_purposes,
    example_entry,
    list_examples,
    validate_presentation,
)


def test_catalog_keys_and_defaults():
    entries = list_examples()
    assert [e.key for e in entries] == [
        "qdiff", "qdil", "weyl", "skew3d", "quantum_space", "witten", "symplectic",
    ]
    for e in entries:
        p = build_example(e.key, **e.defaults())
        assert p == build_example(e.key)
        validate_presentation(p, "basic")
        check_overlaps(p)


def test_qdiff_relation():
    p = build_example("qdiff")
    assert p.gen_names == ("y", "x")
    assert str(p.q_(1, 2)) == "q"
    assert p.tail_free


def test_qdil_pairing():
    p = build_example("qdil", n=2, m=3)
    assert p.gen_names == ("t1", "t2", "H1", "H2", "H3")
    q = p.field.param("q")
    for i in range(1, 6):
        for j in range(i + 1, 6):
            expect = q if (i, j) in ((1, 3), (2, 4)) else p.field.one
            assert p.q_(i, j) == expect
    assert eligible_purposes(p) == ("laurent",)


def test_weyl_independent_parameters():
    p = build_example("weyl", n=3)
    assert p.params == ("lam12", "lam13", "lam23")
    assert str(p.q_(2, 3)) == "lam23"
    wide = build_example("weyl", n=10)
    assert "lam1_10" in wide.params
    assert str(wide.q_(1, 10)) == "lam1_10"


def test_witten_relation_orientation():
    p = build_example("witten")
    assert str(p.q_(1, 2)) == "xi5"
    assert str(p.q_(1, 3)) == "1/xi1"
    assert str(p.q_(2, 3)) == "xi3"


def test_symplectic_square():
    p = build_example("symplectic")
    q = p.field.param("q")
    assert p.q_(1, 2) == q * q
    with pytest.raises(InvalidOptions):
        build_example("symplectic", n=2)


def test_skew3d_default_links_parameters():
    p = build_example("skew3d")  # v = z
    assert p.params == ("alpha", "gamma")
    alpha = p.field.param("alpha")
    gamma = p.field.param("gamma")
    assert p.q_(1, 2) == gamma.inv()
    assert p.q_(1, 3) == alpha  # beta collapses onto alpha
    assert p.q_(2, 3) == alpha.inv()
    assert p.c1_(1, 2, 3) == -gamma.inv()
    assert eligible_purposes(p) == ("poisson",)


def test_skew3d_support_matrix():
    # each generator in v pins the parameter its confluence constraint fixes
    cases = {
        "0": (("alpha", "beta", "gamma"), ("laurent", "poisson")),
        "x": (("beta", "gamma"), ()),
        "y": (("alpha", "gamma"), ()),
        "1": (("alpha", "gamma"), ("poisson",)),
        "x + z": (("gamma",), ()),
        "x + y": (("gamma",), ()),
    }
    for v, (params, purposes) in cases.items():
        p = build_example("skew3d", v=v)
        assert p.params == params, v
        assert eligible_purposes(p) == purposes, v
        check_overlaps(p)


def test_skew3d_general_tail():
    p = build_example("skew3d", v="2*x + 3*y + 5*z + 7")
    g = p.field.param("gamma")
    assert p.c0_(1, 2) == -p.field.from_int(7) / g
    assert p.c1_(1, 2, 1) == -p.field.from_int(2) / g
    assert p.c1_(1, 2, 3) == -p.field.from_int(5) / g


def test_option_errors():
    with pytest.raises(UnknownExample) as exc:
        build_example("nope")
    assert "available" in str(exc.value)
    with pytest.raises(InvalidOptions):
        build_example("qdiff", n=2)  # takes no options
    with pytest.raises(InvalidOptions):
        build_example("weyl", n=0)
    with pytest.raises(InvalidOptions):
        build_example("weyl", n=True)
    with pytest.raises(InvalidOptions):
        build_example("qdil", n=3, m=2)
    with pytest.raises(InvalidOptions):
        build_example("skew3d", v="x^2")
    with pytest.raises(InvalidOptions) as exc:
        build_example("skew3d", v="alpha*x")  # alpha is pinned by x in v
    assert "surviving" in str(exc.value)


def test_example_entry_lookup():
    e = example_entry("skew3d")
    assert e.defaults() == {"v": "z"}
    with pytest.raises(UnknownExample):
        example_entry("weyl3")


def test_poisson_eligible_entries_classify():
    for e in list_examples():
        p = build_example(e.key)
        if "poisson" not in eligible_purposes(p):
            continue
        res = classify_bracket(GeneratorBracket.xi_commutator(p, 2), spot_checks=2)
        assert res.xi == p.field.from_int(2), e.key
