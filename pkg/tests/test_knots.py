import json

import pytest

from dahaskein import knots
from dahaskein.exact import ONE, substitute, var, vpow

q = vpow(4)
qu = vpow(2)
xu, xd, t = var("x_u"), var("x_d"), var("t")

# Tabulated Jones polynomials (N = 2), one chirality each.
TABULATED = {
    1: q + q ** 3 - q ** 4,
    -1: q ** -2 - q ** -1 + ONE - q + q ** 2,
    2: q - q ** 2 + 2 * q ** 3 - q ** 4 + q ** 5 - q ** 6,
    3: q - q ** 2 + 2 * q ** 3 - 2 * q ** 4 + 2 * q ** 5 - q ** 6 + q ** 7 - q ** 8,
}


def test_dt_laurent_multiplication():
    Dt = knots.DtLaurentOp({1: ONE})
    T = knots.DtLaurentOp.scalar(t)
    assert Dt * T == knots.DtLaurentOp({1: qu * t})
    assert (Dt * T).degree_range() == (1, 1)


def test_a12_operator():
    A = knots.build_a12_op()
    assert A.degree_range() == (-2, 2)
    assert A == knots.a12_closed_form()
    a2 = knots.a12_coefficients(t)["a2"]
    assert a2 == -qu ** 5 * t ** 10 * (ONE - t * t) * (ONE - qu * qu * t * t) / (
        (qu * qu - t ** 4) * (ONE + t * t) * (ONE - qu * qu * t ** 4) * (ONE + qu * qu * t * t))


def test_a13_operator():
    A = knots.build_a13_op()
    assert A.degree_range() == (-3, 3)
    assert A == knots.a13_closed_form()


def test_constant_term_routes():
    for fam in knots.FAMILIES:
        raw = knots.build_curve_op(fam, conjugated=False)
        conj = knots.build_curve_op(fam)
        a = substitute(knots.const_symbolic(conj, 1), {"t": qu})
        assert a == knots.const_at(raw, 1) == knots.const_at(conj, 1)


def test_a12_constant_term_bilinear_form():
    c = knots.reduced_constant_term(2)
    mat = knots.bilinear_matrix(c)
    pref = -qu * (ONE - qu * qu) / (ONE - qu ** 4)
    assert mat == {(0, 0): pref, (0, 2): pref, (2, 0): pref,
                   (2, 2): pref * -qu * qu * (ONE - qu * qu) / (ONE - qu ** 6)}


def test_a13_constant_term():
    c = knots.reduced_constant_term(2, (1, 3))
    chu, chd = xu + xu.inverse(), xd + xd.inverse()
    prod = ONE
    for z in (xu, xd):
        prod = prod * (ONE - qu * qu * z * z) * (ONE - qu * qu / (z * z))
    want = -qu * (ONE - qu * qu) / (ONE - qu ** 4) * (
        ONE + (ONE - qu * qu) * (ONE - qu ** 4) / ((ONE - qu ** 6) * (ONE - qu ** 8)) * prod) * chu * chd
    assert c == want


def test_not_symmetric_raises():
    with pytest.raises(knots.ConstantTermNotSymmetric):
        knots.bilinear_matrix(xu)


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("fam", knots.FAMILIES)
def test_bilinear_closed_forms(N, fam):
    for kl in ((0, 0), (1, 2), (-2, 1)):
        assert knots.reduced_daha_poly(N, fam, kl) == knots.bilinear_closed_form(N, fam, *kl)


def test_conjecture_matrices():
    for N in range(1, 7):
        assert all(r.is_zero() for r in knots.v_and_s_residual(N))
    assert knots.matrix_B(3)[0][0] == ONE
    for N in range(1, 6):
        assert knots.matrix_T(N)[0] == q ** (1 - N) * ((ONE - q ** N) / (ONE - q)) ** 2
    assert knots.matrix_T(3)[1] == -q ** -1 - q ** -3


@pytest.mark.parametrize("N", [2, 3])
def test_conjecture_closed_form(N):
    assert knots.reduced_constant_term(N) == knots.conjecture_constant_term(N)
    assert knots.conjecture_closed_form(N, -1, 2) == knots.reduced_daha_poly(N, (1, 2), (-1, 2))


def test_twist_scale():
    for j in range(6):
        assert knots.twist_scale(j, 1) == vpow(j * (j + 2))
        assert knots.twist_scaling_check(j, 1)


def test_jones_oracles():
    for N in range(1, 6):
        assert knots.jones_twist(N, 0) == ONE
        assert knots.jones_torus(1, 3, 2) == ONE
    for N in range(1, 5):
        J = knots.jones_twist(N, -1)
        assert J == knots.mirror(J)
        assert knots.jones_twist(N, 1) == knots.mirror(knots.jones_torus(N, 3, 2))
        assert knots.jones_torus(N, 5, 2) == knots.jones_torus(N, 2, 5)
    assert knots.jones_torus(2, 3, 2, 8) == -q ** -9 / (q + q.inverse()) * (ONE - q ** 4 - q ** 6 - q ** 8)


@pytest.mark.parametrize("p", sorted(TABULATED))
def test_jones_twist_against_table(p):
    assert knots.jones_twist(2, p) == TABULATED[p]


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("p", [1, -1, 2, 3])
def test_twist_knots(N, p):
    P = knots.at_knot_point(knots.reduced_daha_poly(N, (1, 2), (1, p)))
    assert P == knots.unknot_factor(N) * knots.jones_twist(N, p)


def test_unknot_factor():
    for N in range(1, 5):
        qn = vpow(2 * N)
        assert knots.unknot_factor(N) == (-1) ** (N - 1) * (qn - qn.inverse()) / (qu - qu.inverse())


def test_compare_up_to_framing():
    f = knots.jones_twist(2, 2)
    assert knots.compare_up_to_framing(vpow(3) * f, f) == (1, 3)
    assert knots.compare_up_to_framing(-f, f) == (-1, 0)
    assert knots.compare_up_to_framing(f + ONE, f) is None


def test_mixed_twist():
    for kl in ((-1, 1), (-1, -1)):
        w = knots.mixed_twist_word(kl[0])
        assert knots.reduced_daha_poly(2, (1, 2), (w, kl[1])) == knots.mixed_twist_closed_form(2, *kl)


def test_twist_identity_examples():
    r = knots.twist_identities(0, 1)
    assert r["xky/standard"][0] == r["xky/standard"][1] == {0: ONE}
    r = knots.twist_identities(1, 0)
    assert r["yxy"][0] == {0: ONE, 2: -q ** 2, 4: q ** 6}
    r = knots.twist_identities(1, 1)
    assert r["xky/standard"][0] == r["xky/standard"][1]


def test_convention_resolution():
    assert knots.resolve_convention(2, 2) == {"standard": True, "shifted": False}


def test_fixture_loading(tmp_path):
    path = tmp_path / "jones.json"
    coeffs = {"1": "1", "3": "1", "4": "-1"}
    path.write_text(json.dumps({"entries": [{"knot": "3_1", "N": 2, "variable": "q", "coeffs": coeffs},
                                            {"knot": "unknown", "N": 2, "variable": "q", "coeffs": {"0": "1"}}]}))
    entries = knots.load_fixtures(path)
    assert entries[0]["poly"] == TABULATED[1]
    assert knots.fixture_check(entries[0])["status"] == "pass"
    assert knots.fixture_check(entries[1])["status"] == "skip"


def test_fixture_mismatch_fails(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"knot": "4_1", "N": 2, "variable": "q", "coeffs": {"0": "3"}}))
    entry = knots.load_fixtures(path)[0]
    assert knots.fixture_check(entry)["status"] == "fail"
