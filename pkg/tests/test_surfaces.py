import pytest

from dahaskein import surfaces
from dahaskein.exact import I, ONE, var, vpow
from dahaskein.ore import OreOperator

x, xu, xl = var("x"), var("x_u"), var("x_l")
v, qu = vpow(1), vpow(2)


@pytest.mark.parametrize("surface,side", sorted(surfaces.BUILDERS))
def test_catalog(surface, side):
    rows = surfaces.verify_surface(surfaces.get_rep(surface, side))
    assert rows
    assert [r["relation"] for r in rows if r["status"] != "pass"] == []


def test_perturbed_assignment_is_rejected():
    rows = surfaces.verify_surface(surfaces.perturbed_sigma12())
    failed = {r["relation"] for r in rows if r["status"] == "fail"}
    assert "consistency y_u^2 y" in failed
    assert all(r["residual"] for r in rows if r["status"] == "fail")


def test_gluing_ratios():
    assert all(r["status"] == "pass" for r in surfaces.verify_gluing_ratios())


def test_transport_and_forms():
    assert all(surfaces.transport_checks().values())
    assert all(surfaces.aw_form_checks().values())
    assert all(surfaces.raise_lower_checks(4).values())


def test_gamma_1():
    assert surfaces.gamma_1("x_u") == I / v * (-ONE) / (ONE - xu * xu)


def test_psi():
    assert surfaces.psi(x) == 2 * x / ((ONE - x / qu) * (ONE - qu * x))


def test_q2_y():
    assert surfaces.q2_x_side("y") == -xu * xl / qu - qu / (xu * xl)


def test_q2_y_u():
    q = v * v  # read with q -> q_u
    want = I / v * xu * xu / (ONE - xu * xu) * (x + x.inverse()) - I / v ** 3 * (q * (ONE - q) - xu ** 4) / (ONE - xu * xu)
    assert surfaces.q2_x_side("y_u") == want


@pytest.mark.parametrize("k", range(3))
def test_m_hat_closed_forms(k):
    p, m, z = surfaces.m_hat_from_words(k)
    P, M, Z = surfaces.m_hat_pm(k)
    for closed, words in ((P, p), (M, m), (Z, z)):
        assert OreOperator(closed.terms, words.algebra) == words


@pytest.mark.parametrize("k", range(3))
def test_c_prime_torus_point(k):
    assert surfaces.torus_specialization(surfaces.c_prime_poly(k)) == surfaces.torus_jones_target(k)
