import pytest

from dahaskein import a1
from dahaskein import orthopoly as op
from dahaskein.exact import ONE, ZERO, SpecializationSingular, laurent_in, var, vpow
from dahaskein.ore import apply

x, t = var("x"), var("t")
q = vpow(4)
z = op.sym()


def test_pochhammer():
    assert op.q_pochhammer(x, q, 0) == ONE
    assert op.q_pochhammer(x, q, 2) == (ONE - x) * (ONE - x * q)
    assert op.q_pochhammer(x, q, -1) == ONE / (ONE - x / q)
    with pytest.raises(SpecializationSingular):
        op.q_pochhammer(q, q, -1)


def test_chebyshev_small():
    assert op.chebyshev("second", 2) == [-1, 0, 1]
    assert op.chebyshev("second", -1) == [0]
    assert op.eval_poly(op.chebyshev("first", 2), z) == x ** 2 + x ** -2


def test_chebyshev_negative_index():
    for n in range(2, 8):
        assert op.chebyshev("second", -n) == [-c for c in op.chebyshev("second", n - 2)]
        assert op.cheb_s(-n) * (x - x.inverse()) == x ** (1 - n) - x ** (n - 1)


def test_chebyshev_recursion():
    for kind in ("first", "second"):
        for n in range(1, 20):
            lhs = z * op.eval_poly(op.chebyshev(kind, n), z)
            rhs = op.eval_poly(op.chebyshev(kind, n + 1), z) + op.eval_poly(op.chebyshev(kind, n - 1), z)
            assert lhs == rhs


def test_s_basis_round_trip():
    f = 3 * op.cheb_s(4) - t * op.cheb_s(1) + op.cheb_s(0)
    assert op.s_basis_expand(f) == {4: 3 * ONE, 1: -t, 0: ONE}
    assert op.power_sum_expand(x ** 2 + x ** -2 + 5) == {2: ONE, 0: 5 * ONE}


def test_macdonald_small():
    assert op.macdonald_a1(0) == ONE
    assert op.macdonald_a1(1) == z
    assert op.macdonald_a1(2) == x ** 2 + x ** -2 + (ONE + q ** 2) * (ONE - t ** 2) / (ONE - q ** 2 * t ** 2)


def test_macdonald_at_t_equal_q():
    for n in range(9):
        assert op.macdonald_a1(n, q) == op.cheb_s(n)


@pytest.mark.parametrize("n", range(6))
def test_macdonald_eigen(n):
    mac = a1.macdonald_operator()
    assert apply(mac, op.macdonald_a1(n)) == op.macdonald_eigenvalue(n) * op.macdonald_a1(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_three_term_recurrences(n):
    assert z * op.macdonald_a1(n) == op.macdonald_a1(n + 1) + op.three_term_coefficient(n) * op.macdonald_a1(n - 1)
    assert op.second_three_term_residual(n).is_zero()


def test_generating_function():
    lhs, rhs = op.gf_series(1)
    assert lhs[1] == z * (ONE - t ** 2) / (ONE - q ** 2)
    assert op.gf_check(0)
    assert op.gf_check(6)


def test_nonsymmetric():
    g = a1.build_a1("x", 4, t)
    assert op.nonsym_macdonald_a1(0) == ONE
    assert op.nonsym_macdonald_a1(1) == x
    for m in range(1, 4):
        E, Em = op.nonsym_macdonald_a1(m), op.nonsym_macdonald_a1(-m)
        assert apply(g.Y, E) == t * q ** m * E
        assert apply(g.Y, Em) == (t * q ** m).inverse() * Em
        assert op.macdonald_a1(m) == (apply(g.T, E) + t * E) / t
        assert op.macdonald_a1(m) == Em + (q ** m - q ** -m) / (t * t * q ** m - q ** -m) * E
    c = laurent_in(op.nonsym_macdonald_a1(-1), "x")[1]
    assert c == (t - t.inverse()) * q / (t * q - (t * q).inverse())


def test_nonsymmetric_degenerate_specialization():
    # at t = q^(-1/2) the eigenvalues of E_0 and E_1 coincide
    with pytest.raises(op.EigenDegenerate):
        op.nonsym_macdonald_a1(1, t=vpow(-2))


def test_askey_wilson_first():
    t0, t1, t2, t3 = (var(n) for n in ("t0", "t1", "t2", "t3"))
    P1 = op.askey_wilson(1)
    assert P1 == z + (vpow(2) * t0 * (ONE + t1 ** 2) * (ONE - t2 ** 2) * t3
                      + (q + t0 ** 2) * t1 * t2 * (ONE - t3 ** 2)) / ((q - t0 ** 2 * t1 ** 2) * t2 * t3)
    assert op.askey_wilson(0) == ONE


@pytest.mark.parametrize("m", range(3))
def test_askey_wilson_three_term(m):
    B, C = op.aw_three_term(m)
    rhs = op.askey_wilson(m + 1) + B * op.askey_wilson(m) + (C * op.askey_wilson(m - 1) if m else ZERO)
    assert z * op.askey_wilson(m) == rhs
