from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diobench.intarith import localized_at
from diobench.polynomial import Poly, T
from diobench.witness import (
    combine_and,
    constants_system,
    exp_system,
    integer_via_odd,
    nonneg_gadget,
    odd_integer_refute,
    odd_integer_system,
    singlefold_int,
)

small_polys = st.builds(
    Poly, st.lists(st.integers(-5, 5), min_size=0, max_size=4)
)


@given(f=small_polys, g=small_polys)
def test_combine_and_zero_iff(f, g):
    # default h = T^2 + 1: f^2 + g^2 vanishes iff both vanish
    assert combine_and(f, g).is_zero() == (f.is_zero() and g.is_zero())


def test_combine_and_rejects_bad_h():
    with pytest.raises(ValueError):
        combine_and(T, T, h=(1, 1))  # T + 1 has the root -1
    with pytest.raises(ValueError):
        combine_and(T, T, h=(1, 0, 2))  # not monic
    with pytest.raises(ValueError):
        combine_and(T, T, h=(5,))  # constant


def test_constants_system_examples():
    rep = constants_system(5)
    assert rep.accepted and rep.fold_count == 1
    assert rep.witnesses[0] == (Fraction(1, 26), Fraction(1, 27))
    assert constants_system(T).verdict == "refuted"
    assert constants_system(T - 3).verdict == "refuted"
    # localized ring: pi = 2, inverses must avoid the prime 2
    rep = constants_system(3, ring=localized_at(2))
    assert rep.accepted
    assert rep.witnesses[0] == (Fraction(1, 19), Fraction(1, 21))


@pytest.mark.parametrize("c", range(-6, 7))
def test_singlefold_int_accepts_each_integer_once(c):
    rep = singlefold_int(c, bound=50)
    assert rep.accepted and rep.fold_count == 1
    n, sign, f, g = rep.witnesses[0]
    assert n == abs(c)


def test_singlefold_int_refutes_non_integers():
    for c in (Fraction(1, 2), T, T * T + 1, Fraction(-7, 3)):
        rep = singlefold_int(c, bound=50)
        assert rep.verdict == "refuted-to-bound"
        assert rep.bound == 50


def test_exp_system_examples():
    rep = exp_system(2, 8, 3)
    assert rep.accepted and rep.fold_count == 1
    assert rep.witnesses[0][0] == 3  # n = |d|
    assert exp_system(2, -8, 3).accepted
    assert exp_system(-2, 8, 3).accepted
    assert exp_system(2, 8, -3).accepted
    assert exp_system(2, 7, 3).verdict == "refuted"
    assert exp_system(3, 1, 0).accepted  # b^0 = 1
    assert exp_system(2, 2, 1).accepted
    with pytest.raises(ValueError):
        exp_system(0, 0, 1)


@given(b=st.integers(-6, 6).filter(bool), d=st.integers(-3, 3),
       c=st.integers(-300, 300))
@settings(max_examples=150)
def test_exp_system_matches_definition(b, d, c):
    assert exp_system(b, c, d).accepted == (abs(c) == abs(b) ** abs(d))


def test_odd_integer_constructor():
    for r in (-9, -3, -1, 1, 3, 5, 9):
        rep = odd_integer_system(r=r)
        assert rep.accepted, (r, rep.notes)
    with pytest.raises(ValueError):
        odd_integer_system(r=4)


def test_odd_integer_checker_rejects_corrupted():
    rep = odd_integer_system(r=3)
    tup = list(rep.witnesses[0])
    tup[1] = tup[1] + 1  # break the Pell identity
    assert odd_integer_system(tuple_=tup).verdict == "refuted"


def test_odd_integer_refute_even_and_nonconstant():
    for a in (0, 2, -2, 4, T, T * T + 1):
        rep = odd_integer_refute(a, bound=12)
        assert not rep.accepted, a
    # sanity: the search does find odd witnesses
    assert odd_integer_refute(3, bound=12).accepted


def test_integer_via_odd():
    assert integer_via_odd(4).accepted       # 2m+1 = 9
    assert integer_via_odd(-3).accepted      # 2m+1 = -5
    assert integer_via_odd(Fraction(1, 2)).verdict == "refuted"


def test_nonneg_gadget_measured_set():
    accepted = [d for d in range(-8, 9) if nonneg_gadget(d).accepted]
    assert accepted == [-1] + list(range(0, 9))
    assert "vacuous" in nonneg_gadget(-1).notes
    assert "convention" in nonneg_gadget(0).notes
