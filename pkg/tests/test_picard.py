from fractions import Fraction as Q

import pytest

from vii_moduli.errors import OddChernClass, UnsupportedName
from vii_moduli.picard import (
    F,
    K,
    O,
    LineBundle,
    dual,
    format_line_bundle,
    named_bundle,
    parse_line_bundle,
    square_roots,
    tensor,
)
from vii_moduli.surface import mk_surface


def lb(n, logmod, arg):
    return LineBundle.of(n, Q(logmod), Q(arg))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (O, K, K),
        (F, F, O),
        (lb(0, 2, "1/3"), lb(0, -1, "3/4"), lb(0, 1, "1/12")),
    ],
)
def test_tensor(a, b, expected):
    assert tensor(a, b) == expected


@pytest.mark.parametrize("a, expected", [(O, O), (F, F), (lb(1, 2, "1/4"), lb(-1, -2, "3/4"))])
def test_dual(a, expected):
    assert dual(a) == expected
    assert tensor(a, dual(a)) == O


def test_arg_is_normalized():
    a = lb(0, 0, "-1/4")
    assert a.arg == Q(3, 4)
    assert lb(0, 0, "7/4") == lb(0, 0, "3/4")


@pytest.mark.parametrize(
    "a, expected",
    [
        (O, {O, F}),
        (F, {lb(0, 0, "1/4"), lb(0, 0, "3/4")}),
        (lb(0, 3, 0), {lb(0, "3/2", 0), lb(0, "3/2", "1/2")}),
    ],
)
def test_square_roots(a, expected):
    r1, r2 = square_roots(a)
    assert {r1, r2} == expected
    assert tensor(r1, dual(r2)) == F


def test_square_root_of_odd_class():
    with pytest.raises(OddChernClass):
        square_roots(K)


def test_named_bundles():
    half = mk_surface("half", 2)
    assert named_bundle(half, "O_C") == lb(-1, 0, "1/2")
    assert named_bundle(mk_surface("enoki", 1, deg_K=0), "O_C") == lb(0, 1, 0)
    par = mk_surface("parabolic", 1, vol_E=1)
    assert named_bundle(par, "O_E") == lb(-1, -1, 0)
    assert named_bundle(par, "K") == K and named_bundle(par, "F") == F


def test_canonical_relations():
    half = mk_surface("half", 2)
    assert K == tensor(F, dual(named_bundle(half, "O_C")))
    par = mk_surface("parabolic", "3/2", vol_E="1/3", theta_C="2/7")
    assert K == dual(tensor(named_bundle(par, "O_C"), named_bundle(par, "O_E")))


def test_O_E_off_parabolic():
    with pytest.raises(UnsupportedName):
        named_bundle(mk_surface("enoki", 1, deg_K=1), "O_E")
    with pytest.raises(UnsupportedName):
        named_bundle(mk_surface("half", 1), "X")


@pytest.mark.parametrize("text", ["0,-3/2,1/4", "1,0,0", "-5,7/3,5/6"])
def test_text_round_trip(text):
    assert format_line_bundle(parse_line_bundle(text)) == text


@pytest.mark.parametrize("text", ["0,1", "a,b,c", "1/2,0,0", "0,1/0,0"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_line_bundle(text)
