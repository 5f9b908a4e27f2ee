"""Random exact objects for property tests."""

from hypothesis import strategies as st

from dahaskein.exact import ONE, ZERO, I, RatFun, mono
from dahaskein.ore import OreAlgebra, OreOperator

NAMES = ("v", "t", "x")

small = st.integers(min_value=-3, max_value=3)


@st.composite
def laurent(draw, names=NAMES, max_terms=3, gaussian=True):
    total = ZERO
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        c = draw(st.integers(min_value=-4, max_value=4))
        exps = {n: draw(small) for n in names}
        term = mono(c, **exps)
        if gaussian and draw(st.booleans()):
            term = term * I
        total = total + term
    return total


@st.composite
def ratfun(draw, names=NAMES):
    num = draw(laurent(names))
    den = draw(laurent(names, gaussian=False))
    if den.is_zero():
        den = ONE
    return num / den


ALGEBRA = OreAlgebra({"x": 4}, involution="x")


@st.composite
def operator(draw):
    """Short sums f * Dx^a * s^eps over the reflection algebra in x."""
    op = OreOperator({}, ALGEBRA)
    for _ in range(draw(st.integers(min_value=1, max_value=2))):
        a = draw(st.integers(min_value=-1, max_value=1))
        f = draw(laurent(("v", "x"), max_terms=2))
        term = OreOperator.shift(a, coeff=f, algebra=ALGEBRA)
        if draw(st.booleans()):
            term = term * OreOperator.reflection(ALGEBRA)
        op = op + term
    return op


def is_ratfun(f) -> bool:
    return isinstance(f, RatFun)
