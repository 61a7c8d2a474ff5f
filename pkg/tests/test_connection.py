import pytest
from hypothesis import given

from qhyper.algebra import AlgElt, alpha, alpha_star, coproduct, gamma, gamma_star, germ_scalar, mul, unit
from qhyper.coeffs import qint, qpow
from qhyper.connection import (
    CANONICAL,
    NotHorizontalError,
    Qpc,
    covariant_D,
    covariant_D_germ,
    covariant_D_omega,
    covariant_Dhat_omega,
    curvature,
    gauge_transform,
    gauge_transform_inv,
    germs,
    is_regular,
)
from qhyper.forms import EM, EP, Form, differential, dvol, eta_3, eta_minus, eta_plus, form_star, lmul, wedge

from conftest import alg_elts, forms

q = qpow
a, a_, g, g_ = alpha(), alpha_star(), gamma(), gamma_star()
F = Form.from_alg


def _mu(x):
    m = F(x, EM)
    return m - form_star(m)


MU = _mu(mul(a, g))
CORPUS = [F(x) for x in (a, a_, g, g_)] + [eta_minus(), eta_plus(), dvol(), F(g, EP), F(a, EM)]


def test_germ_values():
    assert germs(g).to_form() == eta_plus()
    assert germs(g_).to_form() == eta_minus().scale(q(-1))
    assert germs(a - a_).to_form() == eta_3()
    assert germs(unit()).to_form() == Form()
    assert germs(a_).to_form() == germs(a).to_form().scale(-q(2))


def test_germs_vanish_on_ideal_generators():
    ideal = [g * g, g_ * g_, g * g_, a * g - g, a * g_ - g_, a_ * g - g, a_ * g_ - g_]
    ideal.append(a.scale(q(2)) + a_ - AlgElt.scalar(qint(2)))
    for x in ideal:
        assert germs(x).to_form() == Form()


@pytest.mark.parametrize("t", range(-2, 3))
@pytest.mark.parametrize("k", range(3))
@pytest.mark.parametrize("l", range(3))
def test_maurer_cartan(t, k, l):
    x = AlgElt.mono(t, k, l)
    rhs = Form()
    for c, x1, x2 in coproduct(x).pairs():
        rhs = rhs + lmul(x1, germs(x2).to_form()).scale(c)
    assert rhs == differential(F(x))


def test_D_generators():
    assert covariant_D(F(a)) == F(g_, EP).scale(q(1))
    assert covariant_D(F(unit())) == Form()
    assert covariant_D(F(a_)) == F(g, EM)
    assert covariant_D(F(g)) == F(a_, EP)
    assert covariant_D(F(g_)) == F(a, EM).scale(q(-1))


def test_D_examples():
    assert covariant_D(F(a * a)) == F(mul(a, g_), EP).scale(q(-1) * qint(2))
    assert covariant_D(F(g_ ** 3)) == F(mul(a, g_ * g_), EM).scale(q(-3) * qint(3))


@pytest.mark.parametrize("n", range(1, 7))
def test_D_powers(n):
    assert covariant_D(F(a**n)) == F(AlgElt.mono(n - 1, 0, 1), EP).scale(q(3 - 2 * n) * qint(n))
    assert covariant_D(F(a_**n)) == F(AlgElt.mono(-(n - 1), 1, 0), EM).scale(qint(n))
    assert covariant_D(F(g**n)) == F(mul(a_, AlgElt.mono(0, n - 1, 0)), EP).scale(q(1 - n) * qint(n))
    assert covariant_D(F(g_**n)) == F(mul(a, AlgElt.mono(0, 0, n - 1)), EM).scale(q(-n) * qint(n))


def test_D_rejects_vertical():
    with pytest.raises(NotHorizontalError):
        covariant_D(eta_3())


def test_D_omega_examples():
    m = Qpc(MU)
    assert covariant_D_omega(CANONICAL, F(a)) == covariant_D(F(a))
    assert covariant_D_omega(m, F(unit())) == Form()
    assert covariant_D_omega(m, F(a)) == covariant_D(F(a)) - wedge(F(a), MU).scale(germ_scalar(1))
    assert covariant_Dhat_omega(CANONICAL, F(a)) == covariant_D(F(a))
    assert covariant_Dhat_omega(m, F(a)) == covariant_D(F(a)) + wedge(MU, F(a)).scale(germ_scalar(-1))


def test_curvature():
    assert curvature(CANONICAL) == dvol().scale(-qint(2))
    assert curvature(Qpc(MU)) == differential(MU) - dvol().scale(qint(2))


def test_connection_validation():
    with pytest.raises(ValueError):
        Qpc(F(mul(a, g), EM))
    with pytest.raises(ValueError):
        Qpc(eta_3())


def test_regularity():
    assert is_regular(CANONICAL, CORPUS)
    assert not is_regular(Qpc(MU), [F(a)])
    assert is_regular(Qpc(MU), [])


def test_gauge_action():
    assert gauge_transform(MU, eta_3()) == eta_3() + MU
    assert gauge_transform(MU, CANONICAL.form()) == Qpc(MU).form()
    assert gauge_transform(MU, eta_plus()) == eta_plus()


@given(forms())
def test_gauge_transform_inverse(u):
    assert gauge_transform(MU, gauge_transform_inv(MU, u)) == u
    assert gauge_transform_inv(MU, gauge_transform(MU, u)) == u


@given(alg_elts(), alg_elts())
def test_D_leibniz_on_functions(x, y):
    lhs = covariant_D(F(x * y))
    assert lhs == wedge(covariant_D(F(x)), F(y)) + wedge(F(x), covariant_D(F(y)))


@given(alg_elts(terms=2))
def test_D_agrees_with_germ_formula(x):
    for part in F(x).weight_parts().values():
        assert covariant_D_germ(part) == covariant_D(part)


@given(alg_elts(terms=2))
def test_D_commutes_with_star(x):
    assert form_star(covariant_D(F(x))) == covariant_D(form_star(F(x)))
