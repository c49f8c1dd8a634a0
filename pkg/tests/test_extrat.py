from fractions import Fraction

import pytest

from tropdual.extrat import INF, ext, fmt, is_inf


def test_inf_orders_above_rationals():
    assert Fraction(10**30) < INF
    assert not INF < Fraction(0)
    assert min([INF, Fraction(3), Fraction(-1)]) == Fraction(-1)
    assert sorted([INF, Fraction(1), Fraction(0)]) == [0, 1, INF]


def test_inf_absorbs_addition():
    assert Fraction(5) + INF is INF
    assert INF + Fraction(-5) is INF
    assert INF + INF is INF


def test_inf_is_a_singleton_that_survives_pickling():
    import pickle

    assert pickle.loads(pickle.dumps(INF)) is INF
    assert is_inf(type(INF)())


@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("-5/8", Fraction(-5, 8)), ("10/4", Fraction(5, 2)), ("inf", INF), ("∞", INF)],
)
def test_ext_parses_exact_strings(text, value):
    assert ext(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "abc"])
def test_ext_rejects_inexact_or_malformed_text(bad):
    with pytest.raises(ValueError):
        ext(bad)


@pytest.mark.parametrize("bad", [1.5, True, None])
def test_ext_rejects_floats_and_booleans(bad):
    with pytest.raises(TypeError):
        ext(bad)


def test_fmt_round_trips():
    for x in [Fraction(0), Fraction(-7, 3), Fraction(12), INF]:
        assert ext(fmt(x)) == x
    assert fmt(Fraction(4, 2)) == "2"
