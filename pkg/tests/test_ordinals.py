from __future__ import annotations

import pytest

from gbh import ordinals as o
from gbh.ordinals import CofClass, parse


def P(s):
    return parse(s)


@pytest.mark.parametrize("a, b, want", [
    ("w", "1", "w+1"),
    ("1", "w", "w"),
    ("w*2+3", "w+1", "w*3+1"),
    ("0", "w^2", "w^2"),
    ("w^2+w", "0", "w^2+w"),
    ("L(cofk)", "3", "L(cofk)+3"),
])
def test_add(a, b, want):
    assert str(o.ord_add(P(a), P(b))) == want


def test_add_rejects_symbolic_absorption():
    with pytest.raises(o.UnsupportedSymbolic):
        o.ord_add(P("L(omega)"), P("w"))
    with pytest.raises(o.UnsupportedSymbolic):
        o.ord_add(P("w"), P("L(omega)"))


@pytest.mark.parametrize("a, want", [("w+3", "w+6"), ("5", "10"), ("w", "w"), ("L(kappa)+1", "L(kappa)+2")])
def test_double(a, want):
    assert str(o.ord_double(P(a))) == want


@pytest.mark.parametrize("a, want", [("w+4", "w+2"), ("6", "3"), ("w", "w"), ("0", "0"), ("L(omega)+8", "L(omega)+4")])
def test_half(a, want):
    assert str(o.ord_half(P(a))) == want


def test_half_of_odd():
    with pytest.raises(o.OddOrdinal):
        o.ord_half(P("w+3"))


@pytest.mark.parametrize("a, want", [
    ("w+1", CofClass.FINITE),
    ("w*2", CofClass.OMEGA),
    ("w^2", CofClass.OMEGA),
    ("L(cofk)", CofClass.COF_KAPPA),
    ("L(kappa)+4", CofClass.FINITE),
])
def test_cof(a, want):
    assert o.ord_cof(P(a)) is want


@pytest.mark.parametrize("a, b, want", [
    ("w", "w+1", "lt"),
    ("L(omega)+1", "w^2", "gt"),
    ("L(omega)", "L(cofk)", "incomparable"),
    ("w^2*3", "w^2*3", "eq"),
    ("w^(w+1)", "w^w*7", "gt"),
])
def test_cmp(a, b, want):
    assert o.ord_cmp(P(a), P(b)) == want


def test_parity_and_shape():
    assert P("w+4").is_even and not P("w+3").is_even
    assert P("w").is_limit and P("w+1").is_successor
    assert P("7").as_int() == 7
    assert P("0").is_zero


def test_one_plus_and_drop_one():
    assert str(o.ord_one_plus(P("3"))) == "4"
    assert str(o.ord_one_plus(P("w"))) == "w"
    assert str(o.ord_drop_one(P("4"))) == "3"
    assert str(o.ord_drop_one(P("w+2"))) == "w+2"


def test_mul_omega():
    assert str(o.ord_mul_omega(P("w+5"))) == "w^2"
    assert str(o.ord_mul_omega(P("3"))) == "w"


@pytest.mark.parametrize("text", ["w^2*3+w+4", "L(cofk)+2", "w^(w+1)*2", "w^w", "0", "12"])
def test_print_parse_round_trip(text):
    assert str(P(text)) == text


@pytest.mark.parametrize("text", ["w^", "w+", "L(foo)", "3w", "w^(2", ""])
def test_parse_errors_carry_a_column(text):
    with pytest.raises(o.ParseError) as info:
        P(text)
    assert "column" in str(info.value)


def test_parse_normalizes():
    assert P("w+w") == P("w*2")
    assert P("3+w") == P("w")
    assert P("w*2+w^2") == P("w^2")


def test_cof_names():
    assert o.cof_from_name("cofk") is CofClass.COF_KAPPA
    assert o.cof_from_name("oltk") is CofClass.OTHER_LT_KAPPA
    with pytest.raises(ValueError):
        o.cof_from_name("aleph")
