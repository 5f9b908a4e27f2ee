from hypothesis import given, settings

from dahaskein.exact import ONE, var, vpow
from dahaskein.ore import (
    OreAlgebra,
    OreOperator,
    apply,
    compose,
    compose_all,
    dt_coefficient,
    op_poly,
    render,
    specialize,
    symmetric_restriction,
    to_json,
)

from strategies import ALGEBRA, laurent, operator

x, t = var("x"), var("t")
q = vpow(4)


def test_shift_commutes_past_coefficient():
    D = OreOperator.shift(1, algebra=ALGEBRA)
    X = OreOperator.scalar(x, ALGEBRA)
    assert D * X == OreOperator.shift(1, coeff=q * x, algebra=ALGEBRA)


def test_reflection_is_involution():
    s = OreOperator.reflection(ALGEBRA)
    assert s * s == OreOperator.scalar(ONE, ALGEBRA)


def test_reflection_inverts_shift():
    s = OreOperator.reflection(ALGEBRA)
    D = OreOperator.shift(1, algebra=ALGEBRA)
    Dinv = OreOperator.shift(-1, algebra=ALGEBRA)
    assert s * D == Dinv * s


def test_apply_shift():
    assert apply(OreOperator.shift(1, algebra=ALGEBRA), x ** 3) == q ** 3 * x ** 3


def test_symmetric_restriction_drops_reflection():
    s = OreOperator.reflection(ALGEBRA)
    A = OreOperator.shift(1, algebra=ALGEBRA) * s + OreOperator.scalar(x, ALGEBRA)
    R = symmetric_restriction(A)
    f = x + x.inverse()
    assert apply(R, f) == apply(A, f)


def test_t_shift_algebra():
    alg = OreAlgebra({"t": 2}, involution=None)
    Dt = OreOperator.shift(t=1, algebra=alg)
    assert apply(Dt, t) == vpow(2) * t
    assert dt_coefficient(Dt + OreOperator.scalar(t, alg), 1) == OreOperator.scalar(ONE, alg)


def test_op_poly_and_compose_all():
    D = OreOperator.shift(1, algebra=ALGEBRA)
    assert op_poly(D, [0, 0, 1]) == compose_all([D, D])


def test_specialize_and_render():
    A = OreOperator.shift(1, coeff=t * x, algebra=ALGEBRA)
    B = specialize(A, {"t": 2})
    assert B == OreOperator.shift(1, coeff=2 * x, algebra=ALGEBRA)
    assert "Dx^1" in render(A)
    assert to_json(A)


@settings(max_examples=60)
@given(operator(), operator(), operator())
def test_associativity(A, B, C):
    assert compose(compose(A, B), C) == compose(A, compose(B, C))


@settings(max_examples=60)
@given(operator(), operator(), laurent(("v", "x"), max_terms=2))
def test_apply_respects_composition(A, B, f):
    assert apply(compose(A, B), f) == apply(A, apply(B, f))


@settings(max_examples=30)
@given(operator(), operator(), operator())
def test_distributivity(A, B, C):
    assert compose(A, B + C) == compose(A, B) + compose(A, C)
    assert compose(A + B, C) == compose(A, C) + compose(B, C)
