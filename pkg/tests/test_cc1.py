import pytest

from dahaskein import cc1
from dahaskein import orthopoly as op
from dahaskein.exact import ONE, substitute, var, vpow
from dahaskein.ore import OreOperator, apply, compose

x = var("x")
q, qh = vpow(4), vpow(2)


@pytest.fixture(scope="module")
def g():
    return cc1.build_cc1()


def test_relations(g):
    res = cc1.relation_residuals(g)
    assert all(r.is_zero() for r in res.values()), [k for k, r in res.items() if not r.is_zero()]


def test_actions(g):
    t0, t1 = g.params[:2]
    assert apply(g.ops["T1"], x + x.inverse()) == (x + x.inverse()) / t1
    assert apply(g.Y, ONE) == (t0 * t1).inverse()


def test_curve_operators(g):
    assert cc1.curve_operator_s04(g, (0, 1)) == cc1.askey_wilson_operator()
    assert cc1.curve_operator_s04(g, (1, 0)) == OreOperator.scalar(x + x.inverse(), g.algebra)


def test_skein_relations(g):
    assert all(r.is_zero() for r in cc1.s04_relation_residuals(g).values())
    assert cc1.quartic_residual(g).is_zero()


@pytest.mark.parametrize("m", range(3))
def test_aw_eigen(g, m):
    aw = cc1.askey_wilson_operator()
    assert apply(aw, op.askey_wilson(m)) == op.aw_eigenvalue(m) * op.askey_wilson(m)
    assert cc1.aw_second_recurrence_residual(m, g).is_zero()


def test_sigma_parameter_permutation(g):
    w, params = cc1.apply_sigma(["sR"], cc1.curve_word((0, 1)), g.params)
    t0, t1, t2, t3 = g.params
    assert params == (t2, t1, t0, t3)
    gt = cc1.build_cc1(params)
    assert cc1.curve_operator(gt, w) == cc1.curve_operator(gt, cc1.curve_word((1, -1)))


def test_sigma_l_inverse_gives_slope_12(g):
    w, params = cc1.apply_sigma(["sL-"], cc1.curve_word((1, 1)), g.params)
    gt = cc1.build_cc1(params)
    assert cc1.curve_operator(gt, w) == cc1.curve_operator(gt, cc1.curve_word((1, 2)))


def test_sphere_poly_c11(g):
    t0, t1, t2, t3 = g.params
    p = cc1.daha_poly_sphere(2, cc1.curve_word((1, 1)), g)
    assert p == qh / (t0 * t1) * (x + x.inverse()) - qh / t0 * (t3 - t3.inverse()) - (t2 - t2.inverse()) / t1


@pytest.mark.parametrize("n", range(1, 4))
def test_sphere_poly_c01(g, n):
    t0, t1 = g.params[:2]
    want = substitute(op.macdonald_a1(n - 1, q, q), {"x": (t0 * t1).inverse()})
    assert cc1.daha_poly_sphere(n, cc1.curve_word((0, 1)), g) == want



def test_boundary_sign_choice_is_immaterial(g):
    x_, y_, z_ = (cc1.curve_operator_s04(g, s) for s in ((1, 0), (0, 1), (1, 1)))
    for sign in (1, -1):
        b = tuple(sign * c for c in cc1.boundary_values(g.params))
        assert all(r.is_zero() for r in cc1.s04_relations(x_, y_, z_, b, vpow(-2)).values())
