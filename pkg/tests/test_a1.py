import pytest

from dahaskein import a1
from dahaskein import orthopoly as op
from dahaskein.exact import ONE, substitute, var, vpow
from dahaskein.ore import OreOperator, apply, compose, symmetric_restriction

x, t = var("x"), var("t")
q, qh = vpow(4), vpow(2)


@pytest.mark.parametrize("variable,q_exp", [("x", 4), ("x_u", 2), ("x_d", 2)])
def test_relations(variable, q_exp):
    res = a1.relation_residuals(a1.build_a1(variable, q_exp))
    assert all(r.is_zero() for r in res.values()), [k for k, r in res.items() if not r.is_zero()]


def test_generator_actions():
    g = a1.build_a1()
    assert apply(g.T, x + x.inverse()) == (x + x.inverse()) / t
    assert apply(g.Y, ONE) == t.inverse()
    assert (compose(g.X, g.Y) - compose(compose(compose(g.Y, g.X), g.T), g.T).scale(q.inverse())).is_zero()


def test_idempotent():
    g = a1.build_a1()
    assert compose(g.e, g.e) == g.e


def test_twist_images():
    assert a1.apply_twist(["tR"], a1.Y_WORD) == a1.Word.of(("X", 1), ("Y", 1), coeff=qh)
    assert a1.apply_twist(["tR"], a1.X_WORD) == a1.X_WORD
    for k in range(4):
        lit = a1.Word.of(("X", k), ("Y", 1), ("X", k), ("Y", 1), ("X", 1), coeff=q ** (k - 1))
        assert a1.apply_twist(["tR"] * k + ["tL", "tL"], a1.X_WORD) == lit


def test_tau_l_from_epsilon():
    g = a1.build_a1()
    for w in (a1.X_WORD, a1.Y_WORD, a1.Word.of(("X", 1), ("Y", 1), coeff=qh)):
        lhs = a1.word_operator(g, a1.apply_twist(["eps", "tR", "eps"], w))
        assert lhs == a1.word_operator(g, a1.apply_twist(["tL"], w))


def test_twist_rejects_parameter_shift():
    with pytest.raises(a1.DtNotSupported):
        a1.apply_twist(["tR"], a1.Word.of(("Dt", 1)))


def test_macdonald_operator():
    g = a1.build_a1()
    mac = a1.macdonald_operator()
    assert symmetric_restriction(g.Y + g.Yinv) == mac
    assert apply(mac, ONE) == t + t.inverse()
    assert apply(mac, op.macdonald_a1(2)) == (t * q ** 2 + (t * q ** 2).inverse()) * op.macdonald_a1(2)


def test_product_to_sum():
    res = a1.product_to_sum_residuals(a1.build_a1(), 3)
    assert all(r.is_zero() for r in res.values())


def test_curve_operators():
    g = a1.build_a1()
    assert a1.sym_operator(g, a1.curve_word(1, 0)) == OreOperator.scalar(x + x.inverse(), g.algebra)


@pytest.mark.parametrize("n", range(1, 5))
def test_poly_simple_curves(n):
    g = a1.build_a1()
    assert a1.daha_poly_torus(n, a1.curve_word(1, 0), g) == op.macdonald_a1(n - 1)
    assert a1.daha_poly_torus(n, a1.curve_word(0, 1), g) == substitute(op.macdonald_a1(n - 1), {"x": t.inverse()})


@pytest.mark.parametrize("k", range(4))
def test_torus_knot_operator_and_p2(k):
    g = a1.build_a1()
    w = a1.curve_word(2 * k + 1, 2)
    assert a1.sym_operator(g, w) == a1.torus_knot_operator(k, g)
    P2 = substitute(a1.daha_poly_torus(2, w, g), {"x": -q, "t": -q})
    assert P2 == ONE - q ** (4 * k) - q ** (4 * k + 2) - q ** (4 * k + 4)


def test_s_poly_on_word_matches_chebyshev():
    g = a1.build_a1()
    f = a1.s_poly_on_word(g, a1.X_WORD, 3)
    assert f == op.cheb_s(3)
