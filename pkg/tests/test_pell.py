import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diobench.pellpairs import (
    check_degree_law,
    check_divisibility_law,
    discriminant,
    eps_quotient,
    epsilon,
    pell_pair,
    recognize_solution,
    w_n,
    wn_congruence,
)
from diobench.polynomial import ONE, Poly, T

S_FAMILY = [T, 2 * T, T * T, 3 * T + 1]
s_strategy = st.sampled_from(S_FAMILY)


def test_pell_pair_examples():
    p = pell_pair(T, 2)
    assert p.f == 2 * T * T - 1 and p.g == 2 * T
    p = pell_pair(T, 3)
    assert p.f == 4 * T**3 - 3 * T and p.g == 4 * T * T - 1
    assert pell_pair(T, 0).f == ONE and pell_pair(T, 0).g == Poly()
    p = pell_pair(T, -2)  # conjugate branch
    assert p.f == 2 * T * T - 1 and p.g == -2 * T


@given(s=s_strategy, n=st.integers(-30, 30))
def test_pell_identity(s, n):
    p = pell_pair(s, n)
    D = discriminant(s)
    assert p.f * p.f - D * p.g * p.g == ONE


@given(s=s_strategy, m=st.integers(-10, 10), n=st.integers(-10, 10))
def test_pell_group_law(s, m, n):
    a, b, c = pell_pair(s, m), pell_pair(s, n), pell_pair(s, m + n)
    D = discriminant(s)
    assert c.f == a.f * b.f + D * a.g * b.g
    assert c.g == a.f * b.g + a.g * b.f


@given(s=s_strategy, n=st.integers(1, 25))
def test_degree_law(s, n):
    assert check_degree_law(s, n)


@given(s=s_strategy, ell=st.integers(1, 20), n=st.integers(1, 20))
@settings(max_examples=150)
def test_divisibility_biconditional(s, ell, n):
    assert check_divisibility_law(ell, n, s)


@given(s=s_strategy, n=st.integers(-20, 20))
def test_recognize_round_trip(s, n):
    p = pell_pair(s, n)
    assert recognize_solution(p.f, p.g, s) == (n, 1)
    assert recognize_solution(-p.f, -p.g, s) == (n, -1)


def test_recognize_rejects_non_solutions():
    with pytest.raises(ValueError):
        recognize_solution(T, T, T)
    with pytest.raises(ValueError):
        recognize_solution(2 * T * T - 1, 2 * T + 1, T)


def test_epsilon_unit():
    eps = epsilon(T)
    assert eps.norm() == ONE
    assert eps.u == T and eps.w == -1


@given(n=st.integers(-50, 50))
def test_w_n_antisymmetry_and_congruence(n):
    assert w_n(-n) == -w_n(n)
    report = wn_congruence(n)
    assert report["pass"], report


@given(n=st.integers(0, 30))
def test_eps_quotient_geometric(n):
    q, report = eps_quotient(n)
    eps = epsilon(T)
    one = type(eps)(1, 0, eps.D)
    assert q * (eps - one) == eps**n - one


def test_bad_parameter_rejected():
    with pytest.raises(ValueError):
        pell_pair(Poly([3]), 2)  # constant s: no pole, no Pell theory
