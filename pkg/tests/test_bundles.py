import pytest
from hypothesis import given, strategies as st

from qhyper.algebra import AlgElt, alpha, alpha_star, gamma, gamma_star, mul, unit, zdegree
from qhyper.bundles import (
    Section,
    WeightMismatchError,
    all_base,
    basis_section,
    decompose_left,
    decompose_right,
    dual_left,
    dual_right,
    recompose_left,
    recompose_right,
)
from qhyper.coeffs import qpow
from qhyper.connection import covariant_D
from qhyper.forms import Form

from conftest import alg_elts

a, a_, g, g_ = alpha(), alpha_star(), gamma(), gamma_star()
F = Form.from_alg


def test_basis_sections():
    assert basis_section(0, 0).value == unit()
    assert basis_section(2, 1).value == mul(a, g)
    assert basis_section(-2, 1).value == mul(a_, g_)
    with pytest.raises(IndexError):
        basis_section(2, 3)


def test_small_dual_systems():
    assert dual_left(0).gens == (unit(),)
    assert dual_left(1).gens == (a_, -g_)
    assert dual_right(0).gens == (unit(),)
    assert dual_right(1).gens == (a_, -g_.scale(qpow(2)))


@pytest.mark.parametrize("n", range(-6, 7))
def test_partition_of_unity(n):
    left = AlgElt()
    right = AlgElt()
    for j, (x, y) in enumerate(zip(dual_left(n).gens, dual_right(n).gens)):
        t = basis_section(n, j).value
        left = left + mul(x, t)
        right = right + mul(t, y)
    assert left == unit()
    assert right == unit()


@pytest.mark.parametrize("n", range(-4, 5))
def test_dual_weights(n):
    for x in dual_left(n).gens + dual_right(n).gens:
        assert zdegree(x) == -n


def test_decompose_examples():
    coeffs = decompose_left(a * a, 2)
    assert recompose_left(coeffs, 2) == F(a * a)
    assert decompose_left(unit(), 0) == [(F(unit()), 0)]
    assert decompose_right(unit(), 0) == [(0, F(unit()))]
    coeffs = decompose_right(a_ * a_, -2)
    assert recompose_right(coeffs, -2) == F(a_ * a_)
    assert all_base(decompose_left(covariant_D(F(a)), 1))
    assert all_base(decompose_right(covariant_D(F(a_)), -1))


def test_weight_mismatch():
    with pytest.raises(WeightMismatchError):
        decompose_left(a, 2)
    with pytest.raises(WeightMismatchError):
        Section(a + g_)
    with pytest.raises(WeightMismatchError):
        Section(a, 2)


@pytest.mark.parametrize("t", range(-4, 5))
def test_round_trip_on_monomials(t):
    for k in range(5):
        for l in range(5):
            if abs(t) + k + l > 6:
                continue
            x = AlgElt.mono(t, k, l)
            n = t + k - l
            for tau in (F(x), covariant_D(F(x))):
                left = decompose_left(tau, n)
                right = decompose_right(tau, n)
                assert all_base(left) and all_base(right)
                assert recompose_left(left, n) == tau
                assert recompose_right(right, n) == tau


@given(st.integers(-3, 3).flatmap(lambda n: st.tuples(st.just(n), alg_elts(degree=n))))
def test_round_trip_on_random_sections(case):
    n, x = case
    phi = covariant_D(F(x))
    assert recompose_left(decompose_left(phi, n), n) == phi
    assert recompose_right(decompose_right(phi, n), n) == phi


def test_section_star_flips_degree():
    s = Section(mul(a, g), 2)
    assert s.star().n == -2
    assert s.star().star() == s
