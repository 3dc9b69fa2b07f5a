"""Expression grammar: parsing, formatting, round trips, error positions."""

import pytest
from hypothesis import given, settings, strategies as st

from skewpbw import (
    DivisionByZero,
    ExprSyntaxError,
    UnknownSymbol,
    format_element,
    parse_element,
    parse_scalar,
)
from conftest import rand_element


def test_products_normalize_while_parsing(sq3):
    f = parse_element(sq3, "x2*x1")
    assert f.terms == {(1, 1, 0): sq3.field.param("q12")}
    g = parse_element(sq3, "x1*x2 + x2*x1")
    lead = g.terms[(1, 1, 0)]
    assert lead == sq3.field.one + sq3.field.param("q12")


def test_inverse_cancels_in_parser(qplane_l):
    assert parse_element(qplane_l, "y^-1*y") == qplane_l.one()
    f = parse_element(qplane_l, "y^-2*x*y")
    assert list(f.terms) == [(-1, 1)]


def test_scalar_coefficients_and_parens(qplane):
    assert parse_element(qplane, "x*y - q*y*x").is_zero
    assert parse_element(qplane, "3*(y + x)^2 - 3*y^2 - 3*x^2 - 3*(1 + q)*y*x").is_zero


def test_parse_scalar_matches_field_ops(qplane):
    F = qplane.field
    q = F.param("q")
    assert parse_scalar(F, "(1 - q^2)/(1 - q)") == F.one + q
    assert parse_scalar(F, "-q^-1") == -q.inv()
    with pytest.raises(DivisionByZero):
        parse_scalar(F, "1/(q - q)")


def test_juxtaposition_is_an_error(sq3):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_element(sq3, "x1 x2")
    assert exc.value.position == 3  # character offset of the stray token


def test_unknown_symbol_reports_position(sq3):
    with pytest.raises(UnknownSymbol) as exc:
        parse_element(sq3, "x1*w3")
    assert exc.value.name == "w3"
    assert exc.value.position == 3


def test_more_syntax_errors(sq3):
    for src, pos in [("x1 +", 4), ("(x1", 3), ("^2", 0), ("x1*", 3)]:
        with pytest.raises(ExprSyntaxError) as exc:
            parse_element(sq3, src)
        assert exc.value.position == pos, src


def test_negative_power_outside_laurent_block(sq3):
    with pytest.raises(UnknownSymbol):
        parse_element(sq3, "q99*x1")
    from skewpbw import NotInvertible

    with pytest.raises(NotInvertible):
        parse_element(sq3, "x2^-1")


def test_machine_format_shape(qplane_l):
    f = parse_element(qplane_l, "q*y^-1*x^2 + 3")
    text = format_element(f, mode="machine")
    lines = text.splitlines()
    assert lines[0] == "terms=2"
    assert lines[1].split("\t") == ["q", "-1 2"]
    assert lines[2].split("\t") == ["3", "0 0"]


def test_zero_formats_in_both_modes(qplane):
    z = qplane.zero()
    assert format_element(z) == "0"
    assert format_element(z, mode="machine") == "terms=0"
    assert parse_element(qplane, "0").is_zero


def test_round_trip_random_elements(qplane_l, sq3, rng):
    for p in (qplane_l, sq3):
        for _ in range(40):
            f = rand_element(p, rng, terms=3, max_abs=2)
            assert parse_element(p, format_element(f)) == f
            assert parse_element(p, format_element(f, mode="machine")) == f


@settings(max_examples=50, derandomize=True)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_round_trip_property(qplane_l, exps_list):
    from skewpbw import Element

    f = qplane_l.zero()
    for k, exps in enumerate(exps_list):
        f = f + Element.monomial(qplane_l, exps, qplane_l.field.from_int(k + 1))
    assert parse_element(qplane_l, format_element(f)) == f
