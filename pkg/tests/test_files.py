"""Document format: round trips and parse errors with line numbers."""

import pytest

from skewpbw import (
    FileFormatError,
    GammaDerivation,
    GeneratorBracket,
    ToricAutomorphism,
    build_example,
    inner_derivation,
    list_examples,
    localize_presentation,
    parse_element,
    read_bracket,
    read_derivation,
    read_presentation,
    write_bracket,
    write_derivation,
    write_presentation,
)


def test_catalog_presentations_round_trip():
    for e in list_examples():
        p = build_example(e.key)
        text = write_presentation(p)
        p2 = read_presentation(text)
        assert p2 == p, e.key
        assert write_presentation(p2) == text, e.key


def test_localized_round_trip(qplane_l):
    text = write_presentation(qplane_l)
    assert "r = 1" in text
    p2 = read_presentation(text)
    assert p2 == qplane_l


def test_read_applies_defaults():
    text = "n = 2\nr = 0\ngens = [a, b]\n"
    p = read_presentation(text)
    assert p.params == ()
    assert p.q_(1, 2) == p.field.one
    # comments and blank lines are ignored
    assert read_presentation("# header\n\n" + text) == p


def test_bracket_round_trip(sq3):
    eng = sq3.engine()
    table = {
        (1, 2): eng.commutator(sq3.gen(1), sq3.gen(2)),
        (1, 3): parse_element(sq3, "x1*x3 + 2*x2^2"),
    }
    B = GeneratorBracket(sq3, table)
    text = write_bracket(B)
    B2 = read_bracket(sq3, text)
    assert B2.table == B.table
    assert write_bracket(B2) == text


def test_derivation_round_trip(qplane_l):
    F = qplane_l.field
    g = ToricAutomorphism(qplane_l, [F.from_int(2), F.one])
    d = inner_derivation(g, parse_element(qplane_l, "y^-1*x + 3"))
    text = write_derivation(d)
    d2 = read_derivation(qplane_l, text)
    assert [d2.gamma.gamma(i) for i in (1, 2)] == [F.from_int(2), F.one]
    assert list(d2.u) == list(d.u)
    assert write_derivation(d2) == text


def test_derivation_defaults(qplane_l):
    d = read_derivation(qplane_l, "derivation\n")
    assert d.gamma.is_identity
    assert all(ui.is_zero for ui in d.u)
    # identity gamma and zero u are omitted on write
    text = write_derivation(
        GammaDerivation(ToricAutomorphism.identity(qplane_l), [qplane_l.zero()] * 2)
    )
    assert text == "derivation\n"


def test_combined_document(qplane):
    B = GeneratorBracket.xi_commutator(qplane, 2)
    g = ToricAutomorphism(qplane, [qplane.field.from_int(3), qplane.field.one])
    d = GammaDerivation(g, [qplane.gen(1), qplane.zero()])
    text = write_presentation(qplane) + "\n" + write_bracket(B) + "\n" + write_derivation(d)
    p2 = read_presentation(text)
    assert p2 == qplane
    B2 = read_bracket(p2, text)
    assert B2.table == {k: v for k, v in B.table.items()}
    d2 = read_derivation(p2, text)
    assert d2.gamma.gamma(1) == qplane.field.from_int(3)
    assert d2.u_(1) == p2.gen(1)


def _err(fn, *args):
    with pytest.raises(FileFormatError) as exc:
        fn(*args)
    return exc.value


def test_parse_errors_carry_line_numbers(qplane):
    e = _err(read_presentation, "n = 2\nr = 0\ngens = [a, b]\nn = 2\n")
    assert e.line == 4 and "duplicate" in str(e)
    e = _err(read_presentation, "r = 0\ngens = [a, b]\n")
    assert "n" in str(e)
    e = _err(read_presentation, 'n = 2\nr = 0\ngens = [a, b]\nrel 2 1 = { c0 = "1" }\n')
    assert e.line == 4 and "q" in str(e)
    e = _err(read_presentation, 'n = 2\nr = 0\ngens = [a, b]\nrel 1 2 = { q = "1" }\n')
    assert e.line == 4  # relation indices are written higher-first
    e = _err(read_presentation, "n = 2\nr = 0\ngens = [a, b]\nwhatever\n")
    assert e.line == 4 and "=" in str(e)
    e = _err(
        read_presentation,
        'n = 2\nr = 0\nparams = [q]\ngens = [a, b]\nrel 2 1 = { q = "q + " }\n',
    )
    assert e.line == 5 and "bad scalar" in str(e)
    e = _err(read_bracket, qplane, write_presentation(qplane))
    assert "bracket" in str(e)
    e = _err(read_bracket, qplane, 'bracket\nb 1 2 = "y*"\n')
    assert e.line == 2
    e = _err(read_derivation, qplane, 'derivation\ngamma 3 = "2"\n')
    assert e.line == 2 and "range" in str(e)


def test_read_rejects_validation_failures():
    # semantic problems surface as validation failures, not format errors
    from skewpbw import ValidationFailure

    with pytest.raises(ValidationFailure):
        read_presentation("n = 2\nr = 0\ngens = [a]\n")
    text = (
        "n = 2\nr = 2\nparams = [q]\ngens = [a, b]\n"
        'rel 2 1 = { q = "q", c = { 1: "1" } }\n'
    )
    with pytest.raises(ValidationFailure) as exc:
        read_presentation(text)
    assert "pure" in exc.value.condition


def test_localize_then_reload(sq3):
    p2 = localize_presentation(sq3)
    text = write_presentation(p2)
    assert read_presentation(text) == p2
