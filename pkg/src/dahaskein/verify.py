"""Registry of verification checks, grouped into suites.

Each suite is a list of named zero-argument checks returning a bool.  Checks
are addressed by (suite, index, options) so worker processes can rebuild the
registry and run one item without pickling closures.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

from . import a1, cc1, knots, surfaces
from . import orthopoly as op
from .exact import ONE, ZERO, I, laurent_in, substitute, var, vpow
from .ore import OreOperator, apply, compose, symmetric_restriction

SUITES = ("a1", "cc1", "orthopoly", "sigma11", "sigma04", "sigma12", "sigma20", "knots")

Q = vpow(4)
QH = vpow(2)


class Skip(Exception):
    """Raised by a check whose inputs are unavailable."""


@dataclass(frozen=True)
class Options:
    max_n: int = 4
    max_k: int = 2
    fixtures: str | None = None


@dataclass
class Result:
    suite: str
    name: str
    status: str
    seconds: float
    detail: str = ""


Item = tuple[str, Callable[[], bool]]


def _all_zero(residuals: dict) -> bool:
    return all(r.is_zero() for r in residuals.values())


# ---------------------------------------------------------------------------
# A1


def _a1_items(o: Options) -> list[Item]:
    items: list[Item] = []
    t, x = var("t"), var("x")

    def g():
        return a1.build_a1("x", 4, t)

    for variable, q_exp in (("x", 4), ("x_u", 2), ("x_d", 2)):
        def rel(variable=variable, q_exp=q_exp):
            return _all_zero(a1.relation_residuals(a1.build_a1(variable, q_exp)))
        items.append((f"defining relations ({variable}, q = v^{q_exp})", rel))

    items.append(("T (x + 1/x) = t^-1 (x + 1/x)",
                  lambda: apply(g().T, x + x.inverse()) == (x + x.inverse()) / t))
    items.append(("Y 1 = t^-1", lambda: apply(g().Y, ONE) == t.inverse()))

    def twist_images():
        tr = a1.apply_twist(["tR"], a1.Y_WORD)
        ok = tr == a1.Word.of(("X", 1), ("Y", 1), coeff=QH)
        ok &= a1.apply_twist(["tR"], a1.X_WORD) == a1.X_WORD
        for k in range(0, o.max_k + 2):
            w = a1.apply_twist(["tR"] * k + ["tL", "tL"], a1.X_WORD)
            lit = a1.Word.of(("X", k), ("Y", 1), ("X", k), ("Y", 1), ("X", 1), coeff=Q ** (k - 1))
            ok &= w == lit
        return ok
    items.append(("tau_R images and tau_R^k tau_L^2 (X)", twist_images))

    def eps_conjugation():
        gg = g()
        for w in (a1.X_WORD, a1.Y_WORD, a1.Word.of(("X", 1), ("Y", 1), coeff=QH)):
            lhs = a1.apply_twist(["eps", "tR", "eps"], w)
            rhs = a1.apply_twist(["tL"], w)
            if a1.word_operator(gg, lhs) != a1.word_operator(gg, rhs):
                return False
        return True
    items.append(("eps tau_R eps = tau_L", eps_conjugation))

    def eps_involution():
        gg = g()
        for w in (a1.X_WORD, a1.Y_WORD, a1.T_WORD):
            if a1.word_operator(gg, a1.apply_twist(["eps", "eps"], w)) != a1.word_operator(gg, w):
                return False
        return True
    items.append(("eps is an involution", eps_involution))

    def mac_is_sym_y():
        gg = g()
        return symmetric_restriction(gg.Y + gg.Yinv) == a1.macdonald_operator()
    items.append(("Y + Y^-1 on symmetric functions = Macdonald operator", mac_is_sym_y))

    def curve_ops():
        gg = g()
        ok = a1.sym_operator(gg, a1.curve_word(1, 0)) == OreOperator.scalar(x + x.inverse(), gg.algebra)
        ok &= a1.sym_operator(gg, a1.curve_word(0, 1)) == a1.macdonald_operator()
        return ok
    items.append(("M_(1,0) = X + X^-1, M_(0,1) = Y + Y^-1", curve_ops))
    items.append(("product-to-sum identities",
                  lambda: _all_zero(a1.product_to_sum_residuals(g(), 3))))

    def poly_c10_c01():
        gg = g()
        for n in range(1, o.max_n + 1):
            if a1.daha_poly_torus(n, a1.curve_word(1, 0), gg) != op.macdonald_a1(n - 1):
                return False
            m = substitute(op.macdonald_a1(n - 1), {"x": t.inverse()})
            if a1.daha_poly_torus(n, a1.curve_word(0, 1), gg) != m:
                return False
        return True
    items.append(("P_n(c_(1,0)) = M_{n-1}(x), P_n(c_(0,1)) = M_{n-1}(1/t)", poly_c10_c01))

    for k in range(o.max_k + 2):
        def m0(k=k):
            gg = g()
            return a1.sym_operator(gg, a1.curve_word(2 * k + 1, 2)) == a1.torus_knot_operator(k, gg)
        items.append((f"torus-knot operator closed form k={k}", m0))
    for k in range(o.max_k + 2):
        def p2(k=k):
            P2 = a1.daha_poly_torus(2, a1.curve_word(2 * k + 1, 2), g())
            return substitute(P2, {"x": -Q, "t": -Q}) == ONE - Q ** (4 * k) - Q ** (4 * k + 2) - Q ** (4 * k + 4)
        items.append((f"P_2(c_({2 * k + 1},2)) at x = t = -q", p2))
    for k in range(o.max_k + 1):
        for m in range(1, o.max_n + 1):
            items.append((f"P_{m}(c_({2 * k + 1},2)) vs torus-knot colored Jones",
                          lambda k=k, m=m: torus_jones_check(m, k)))
    return items


def torus_jones_check(m: int, k: int) -> bool:
    """P_m at x = t = -q equals (-1)^{m-1} q^{(2k+1)(m^2-1)} [m] J_m(q^2; T(2k+1,2))."""
    P = a1.daha_poly_torus(m, a1.curve_word(2 * k + 1, 2), a1.build_a1("x", 4, var("t")))
    lhs = substitute(P, {"x": -Q, "t": -Q})
    J = knots.jones_torus(m, 2 * k + 1, 2, 8)
    rhs = (-1) ** (m - 1) * Q ** ((2 * k + 1) * (m * m - 1)) * (Q ** m - Q ** (-m)) / (Q - Q.inverse()) * J
    return lhs == rhs


# ---------------------------------------------------------------------------
# orthogonal polynomials


def _orthopoly_items(o: Options) -> list[Item]:
    items: list[Item] = []
    t, x = var("t"), var("x")
    z = op.sym()
    items.append(("q-Pochhammer examples", lambda: (
        op.q_pochhammer(x, Q, 0) == ONE
        and op.q_pochhammer(x, Q, 2) == (ONE - x) * (ONE - x * Q)
        and op.q_pochhammer(x, Q, -1) == (ONE - x / Q).inverse())))

    def cheb_recursion():
        for kind in ("first", "second"):
            for n in range(1, 20):
                lhs = op.eval_poly(op.chebyshev(kind, n), z) * z
                rhs = op.eval_poly(op.chebyshev(kind, n + 1), z) + op.eval_poly(op.chebyshev(kind, n - 1), z)
                if lhs != rhs:
                    return False
        for n in range(-1, 21):
            if op.cheb_s(n) * (x - x.inverse()) != x ** (n + 1) - x ** (-n - 1):
                return False
        return all(op.eval_poly(op.chebyshev("first", n), z) == x ** n + x ** (-n) for n in range(0, 21))
    items.append(("Chebyshev recursion and closed forms, n <= 20", cheb_recursion))

    items.append(("M_1, M_2 explicit", lambda: (
        op.macdonald_a1(1) == z
        and op.macdonald_a1(2) == x ** 2 + x ** -2 + (ONE + Q * Q) * (ONE - t * t) / (ONE - Q * Q * t * t))))

    mac = a1.macdonald_operator()
    for n in range(9):
        items.append((f"Macdonald eigen equation n={n}",
                      lambda n=n: apply(mac, op.macdonald_a1(n)) == op.macdonald_eigenvalue(n) * op.macdonald_a1(n)))
    for n in range(1, 9):
        items.append((f"three-term recurrence n={n}", lambda n=n: (
            z * op.macdonald_a1(n) == op.macdonald_a1(n + 1) + op.three_term_coefficient(n) * op.macdonald_a1(n - 1))))
    for n in range(1, 7):
        items.append((f"second three-term recurrence n={n}",
                      lambda n=n: op.second_three_term_residual(n).is_zero()))

    up = a1.raising_operator()
    down = a1.lowering_operator()
    for m in range(7):
        items.append((f"raising operator m={m}", lambda m=m: (
            apply(up, op.macdonald_a1(m, Q * t))
            == (Q ** (m + 1) * t * t - (Q ** (m + 1) * t * t).inverse()) * op.macdonald_a1(m + 1))))
        if m >= 1:
            items.append((f"lowering operator m={m}", lambda m=m: (
                apply(down, op.macdonald_a1(m)) == (Q ** m - Q ** (-m)) * op.macdonald_a1(m - 1, Q * t))))
    items.append(("generating function through z^6", lambda: op.gf_check(6)))
    items.append(("M_n(x; q, q) = S_n, n <= 8",
                  lambda: all(op.macdonald_a1(n, Q) == op.cheb_s(n) for n in range(9))))

    def nonsym():
        g = a1.build_a1("x", 4, t)
        if op.nonsym_macdonald_a1(0) != ONE or apply(g.Y, ONE) != t.inverse():
            return False
        for m in range(1, 5):
            E, Em = op.nonsym_macdonald_a1(m), op.nonsym_macdonald_a1(-m)
            M = op.macdonald_a1(m)
            if apply(g.Y, E) != t * Q ** m * E or apply(g.Y, Em) != (t * Q ** m).inverse() * Em:
                return False
            if M != (apply(g.T, E) + t * E) / t:
                return False
        c = laurent_in(op.nonsym_macdonald_a1(-1), "x").get(1, ZERO)
        return c == (t - t.inverse()) * Q / (t * Q - (t * Q).inverse())
    items.append(("nonsymmetric polynomials E_m, |m| <= 4", nonsym))

    t0, t1, t2, t3 = cc1.symbolic_params()
    items.append(("Askey-Wilson P_1 explicit", lambda: op.askey_wilson(1) == z + (
        QH * t0 * (ONE + t1 * t1) * (ONE - t2 * t2) * t3 + (Q + t0 * t0) * t1 * t2 * (ONE - t3 * t3)) / (
        (Q - t0 * t0 * t1 * t1) * t2 * t3)))
    aw = cc1.askey_wilson_operator()
    for m in range(5):
        items.append((f"Askey-Wilson eigen equation m={m}",
                      lambda m=m: apply(aw, op.askey_wilson(m)) == op.aw_eigenvalue(m) * op.askey_wilson(m)))
    for m in range(5):
        def aw3(m=m):
            B, C = op.aw_three_term(m)
            rhs = op.askey_wilson(m + 1) + B * op.askey_wilson(m)
            if m > 0:
                rhs = rhs + C * op.askey_wilson(m - 1)
            return z * op.askey_wilson(m) == rhs
        items.append((f"Askey-Wilson three-term m={m}", aw3))
    for m in range(4):
        items.append((f"Askey-Wilson second recurrence m={m}",
                      lambda m=m: cc1.aw_second_recurrence_residual(m, cc1.build_cc1()).is_zero()))
    return items


# ---------------------------------------------------------------------------
# C^vee C_1


def _cc1_items(o: Options) -> list[Item]:
    items: list[Item] = []
    x = var("x")

    def g():
        return cc1.build_cc1()

    items.append(("defining relations", lambda: _all_zero(cc1.relation_residuals(g()))))
    items.append(("T_1 (x + 1/x) = t_1^-1 (x + 1/x), Y 1 = (t_0 t_1)^-1", lambda: (
        apply(g().ops["T1"], x + x.inverse()) == (x + x.inverse()) / g().params[1]
        and apply(g().Y, ONE) == (g().params[0] * g().params[1]).inverse())))
    items.append(("A_(0,1) = Askey-Wilson operator",
                  lambda: cc1.curve_operator_s04(g(), (0, 1)) == cc1.askey_wilson_operator()))
    items.append(("A_(1,0) = X + X^-1", lambda: cc1.curve_operator_s04(g(), (1, 0))
                  == OreOperator.scalar(x + x.inverse(), g().algebra)))
    items.append(("product-to-sum identities", lambda: _all_zero(cc1.product_to_sum_residuals(g(), 3))))
    items.append(("A_(1,-1) A_(1,1) with quartic term", lambda: cc1.quartic_residual(g()).is_zero()))

    def sigma(names, src, tgt):
        def check():
            w, pp = cc1.apply_sigma(names, cc1.curve_word(src), g().params)
            gt = cc1.build_cc1(pp)
            return cc1.curve_operator(gt, w) == cc1.curve_operator(gt, cc1.curve_word(tgt))
        return check
    items.append(("sigma_R(A_(0,1)) = A_(1,-1)", sigma(["sR"], (0, 1), (1, -1))))
    items.append(("sigma_R(A_(2,1)) = A_(1,1)", sigma(["sR"], (2, 1), (1, 1))))
    items.append(("sigma_L^-1(A_(1,1)) = A_(1,2)", sigma(["sL-"], (1, 1), (1, 2))))

    def automorphisms():
        P = g().params
        for name in ("sR", "sR-", "sL", "sL-"):
            img, perm = cc1._sigma_images(name)
            gt = cc1.build_cc1(tuple(P[j] for j in perm))
            ops = {a: cc1.word_operator(gt, img[a]) for a in cc1.LETTERS}
            tt = dict(zip(cc1.LETTERS, P))
            if not all(compose(ops[a] - tt[a].inverse(), ops[a] + tt[a]).is_zero() for a in cc1.LETTERS):
                return False
            prod = compose(compose(compose(ops["T1v"], ops["T1"]), ops["T0"]), ops["T0v"])
            if prod != OreOperator.scalar(QH.inverse(), gt.algebra):
                return False
        return True
    items.append(("sigma images satisfy the defining relations", automorphisms))

    def p2_c11():
        t0, t1, t2, t3 = g().params
        p = cc1.daha_poly_sphere(2, cc1.curve_word((1, 1)), g())
        return p == QH / (t0 * t1) * (x + x.inverse()) - QH / t0 * (t3 - t3.inverse()) - (t2 - t2.inverse()) / t1
    items.append(("P_2(c_(1,1)) explicit", p2_c11))

    def p2_c1m1():
        P = g().params
        t0, t1, t2, t3 = P
        tt = (t2, t1, t0, t3)
        p = cc1.daha_poly_sphere(2, cc1.curve_word((1, -1)), g())
        A = cc1.aw_function
        rhs = (A(x, P) / (x * QH) + x * A(x.inverse(), P) / QH - A(x, tt) - A(x.inverse(), tt)
               + t1 * t2 + (t1 * t2).inverse())
        return p == rhs
    items.append(("P_2(c_(1,-1)) via A(x; t~)", p2_c1m1))

    def pn_c01():
        t0, t1 = g().params[:2]
        for n in range(1, o.max_n + 1):
            m = substitute(op.macdonald_a1(n - 1, Q, Q), {"x": (t0 * t1).inverse()})
            if cc1.daha_poly_sphere(n, cc1.curve_word((0, 1)), g()) != m:
                return False
        return True
    items.append(("P_n(c_(0,1)) = M_{n-1}((t_0 t_1)^-1; q, q)", pn_c01))
    return items


# ---------------------------------------------------------------------------
# surfaces


def _surface_items(surface: str, sides: tuple[str, ...]) -> list[Item]:
    items: list[Item] = []
    for side in sides:
        for name in surfaces.BUILDERS[(surface, side)]().relation_names():
            items.append((f"{surface} {side}: {name}", lambda side=side, name=name: (
                surfaces.check_relation(surface, side, name)["status"] == "pass")))
    return items


def _sigma11_items(o: Options) -> list[Item]:
    items = _surface_items("S11", ("x",))
    for row in surfaces.verify_gluing_ratios():
        name = row["relation"]
        items.append((f"gluing ratio: {name}", lambda name=name: next(
            r for r in surfaces.verify_gluing_ratios() if r["relation"] == name)["status"] == "pass"))
    return items


def _sigma04_items(o: Options) -> list[Item]:
    items = _surface_items("S04", ("x",))
    for name in surfaces.aw_form_checks():
        items.append((name, lambda name=name: surfaces.aw_form_checks()[name]))
    return items


def q2_checks() -> dict[str, bool]:
    x, xu, xl = var("x"), var("x_u"), var("x_l")
    y = -xu * xl / QH - QH / (xu * xl)
    qh = vpow(1)  # the y_u display is read with q -> q_u, so q^(1/2) = v
    q = qh * qh
    yu = (I / qh * xu * xu / (ONE - xu * xu) * (x + x.inverse())
          - I / qh ** 3 * (q * (ONE - q) - xu ** 4) / (ONE - xu * xu))
    return {"Q_2(y)": surfaces.q2_x_side("y") == y, "Q_2(y_u)": surfaces.q2_x_side("y_u") == yu}


def _sigma12_items(o: Options) -> list[Item]:
    items = _surface_items("S12", ("x", "dual"))

    def negative_control():
        rows = surfaces.verify_surface(surfaces.perturbed_sigma12())
        return any(r["status"] == "fail" for r in rows)
    items.append(("perturbed y_u is rejected", negative_control))
    for name in ("S12 y_u -> Macdonald operator", "S12 y -> dual y"):
        items.append((f"transport: {name}", lambda name=name: surfaces.transport_checks()[name]))
    for name in ("Q_2(y)", "Q_2(y_u)"):
        items.append((name, lambda name=name: q2_checks()[name]))
    for k in range(o.max_k + 1):
        def mhat(k=k):
            p, m, z = surfaces.m_hat_from_words(k)
            P, M, Z = surfaces.m_hat_pm(k)
            return all(OreOperator(A.terms, p.algebra) == B for A, B in ((P, p), (M, m), (Z, z)))
        items.append((f"M-hat closed forms k={k}", mhat))
    for k in range(o.max_k + 1):
        items.append((f"c' P_2 at torus point k={k}", lambda k=k: (
            surfaces.torus_specialization(surfaces.c_prime_poly(k)) == surfaces.torus_jones_target(k))))
        items.append((f"c'' P_2 at torus point k={k}", lambda k=k: (
            surfaces.torus_specialization(surfaces.c_double_prime_poly(k)) == surfaces.torus_jones_target(k))))
    return items


def _sigma20_items(o: Options) -> list[Item]:
    items = _surface_items("S20", ("x", "dual"))
    for name in ("S20 y_u -> Macdonald operator", "S20 y_d -> Macdonald operator",
                 "S20 y -> dual y", "S20 y~ -> dual y~"):
        items.append((f"transport: {name}", lambda name=name: surfaces.transport_checks()[name]))
    return items


# ---------------------------------------------------------------------------
# knots


TWIST_KNOTS = (1, -1, 2, 3)


def twist_knot_check(N: int, p: int) -> bool:
    P = knots.at_knot_point(knots.reduced_daha_poly(N, (1, 2), (1, p)))
    return P == knots.unknot_factor(N) * knots.jones_twist(N, p)


def _knots_items(o: Options) -> list[Item]:
    items: list[Item] = []
    N_max = max(o.max_n, 2)
    items.append(("A_(1,2) conjugated operator closed form",
                  lambda: knots.build_a12_op() == knots.a12_closed_form()))
    items.append(("A_(1,2) Dt-degree range [-2, 2]", lambda: knots.build_a12_op().degree_range() == (-2, 2)))
    items.append(("A_(1,3) conjugated operator closed form",
                  lambda: knots.build_a13_op() == knots.a13_closed_form()))

    def sphere_coeffs():
        A = knots.sphere_operator((1, 2))
        x = var("x")
        want, flip = knots.sphere_coefficients_a12(x), knots.sphere_coefficients_a12(x.inverse())
        return all(A.coefficient(x=e) == want[e] and A.coefficient(x=-e) == flip[e] for e in range(3))
    items.append(("A_(1,2) at t_star coefficients", sphere_coeffs))

    for fam in knots.FAMILIES:
        for n in (1, 2):
            def routes(fam=fam, n=n):
                raw = knots.build_curve_op(fam, conjugated=False)
                conj = knots.build_curve_op(fam)
                a = substitute(knots.const_symbolic(conj, n), {"t": knots.QU})
                return a == knots.const_at(raw, n) == knots.const_at(conj, n)
            items.append((f"constant term routes agree {fam} S_{n}", routes))
    for N in range(2, min(N_max, 3) + 1):
        for fam in knots.FAMILIES:
            for kl in ((0, 0), (1, 2), (-1, 3)):
                items.append((f"bilinear closed form N={N} {fam} twists {kl}", lambda N=N, fam=fam, kl=kl: (
                    knots.reduced_daha_poly(N, fam, kl) == knots.bilinear_closed_form(N, fam, *kl))))
    items.append(("v_N = s_N B_N, N <= 6", lambda: all(
        all(r.is_zero() for r in knots.v_and_s_residual(N)) for N in range(1, 7))))
    for N in range(2, N_max + 1):
        items.append((f"constant term closed form N={N}", lambda N=N: (
            knots.reduced_constant_term(N) == knots.conjecture_constant_term(N))))
        items.append((f"twisted closed form N={N} (k, l) = (1, 2)", lambda N=N: (
            knots.conjecture_closed_form(N, 1, 2) == knots.reduced_daha_poly(N, (1, 2), (1, 2)))))
    for kl in ((-1, 1), (-1, -1)):
        items.append((f"mixed-twist closed form N=2 {kl}", lambda kl=kl: (
            knots.reduced_daha_poly(2, (1, 2), (knots.mixed_twist_word(kl[0]), kl[1]))
            == knots.mixed_twist_closed_form(2, *kl))))
    for N in range(2, N_max + 1):
        items.append((f"unknot normalization N={N}", lambda N=N: (
            knots.at_knot_point(knots.reduced_daha_poly(N, (1, 2), (1, 0))) == knots.unknot_factor(N))))
        for p in TWIST_KNOTS:
            items.append((f"twist knot K_{p} N={N}", lambda N=N, p=p: twist_knot_check(N, p)))
    items.append(("square knot matches trefoil # mirror up to framing N=2", lambda: square_knot_check(2)))

    def oracles():
        ok = all(knots.jones_twist(N, 0) == ONE for N in range(1, 6))
        ok &= all(knots.jones_twist(N, -1) == knots.mirror(knots.jones_twist(N, -1)) for N in range(1, 5))
        ok &= all(knots.jones_twist(N, 1) == knots.mirror(knots.jones_torus(N, 3, 2)) for N in range(1, 5))
        ok &= all(knots.jones_torus(N, 3, 2) == knots.jones_torus(N, 2, 3) for N in range(1, 5))
        return ok and knots.jones_torus(2, 3, 2, 8) == -Q ** -9 / (Q + Q.inverse()) * (
            ONE - Q ** 4 - Q ** 6 - Q ** 8)
    items.append(("Jones oracles: K_0, amphichirality, K_1 vs T(3,2), s <-> t", oracles))

    items.append(("negative-index Chebyshev convention",
                  lambda: knots.resolve_convention(2, 2) == {"standard": True, "shifted": False}))
    kmax = o.max_k + 1
    for j in range(min(o.max_n, 4)):
        for k in range(-kmax, kmax + 1):
            def identity(j=j, k=k):
                r = knots.twist_identities(j, k)
                return r["xky/standard"][0] == r["xky/standard"][1] and r["yxy"][0] == r["yxy"][1]
            items.append((f"twist identities j={j} k={k}", identity))
    for j in range(4):
        items.append((f"twist scaling S_{j}", lambda j=j: all(
            knots.twist_scaling_check(j, k) for k in (-2, -1, 1, 2))))

    entries = knots.load_fixtures(o.fixtures) if o.fixtures else []
    if not entries:
        items.append(("colored Jones fixtures", _skip_fixtures))
    for entry in entries:
        items.append((f"fixture {entry['knot']} N={entry['N']}", lambda entry=entry: _fixture(entry)))
    return items


def square_knot_check(N: int) -> bool:
    P = knots.at_knot_point(knots.reduced_daha_poly(N, (1, 3), (1, -1)))
    return knots.compare_up_to_framing(P, knots.unknot_factor(N) * knots.square_knot_jones(N)) is not None


def _skip_fixtures() -> bool:
    raise Skip("no fixture file supplied")


def _fixture(entry) -> bool:
    row = knots.fixture_check(entry)
    if row["status"] == "skip":
        raise Skip(row["detail"])
    return row["status"] == "pass"


# ---------------------------------------------------------------------------
# running


BUILD = {
    "a1": _a1_items,
    "cc1": _cc1_items,
    "orthopoly": _orthopoly_items,
    "sigma11": _sigma11_items,
    "sigma04": _sigma04_items,
    "sigma12": _sigma12_items,
    "sigma20": _sigma20_items,
    "knots": _knots_items,
}


def suite_items(suite: str, options: Options) -> list[Item]:
    return BUILD[suite](options)


def run_item(suite: str, index: int, options: Options) -> Result:
    name, fn = suite_items(suite, options)[index]
    return _run(suite, name, fn)


def _run(suite: str, name: str, fn: Callable[[], bool]) -> Result:
    start = time.perf_counter()
    try:
        ok = bool(fn())
        status, detail = ("pass" if ok else "fail"), ""
    except Skip as exc:
        status, detail = "skip", str(exc)
    except Exception as exc:  # reported as a failed check, not a crash
        status, detail = "fail", f"{type(exc).__name__}: {exc}"
    return Result(suite, name, status, round(time.perf_counter() - start, 3), detail)


def _worker(job: tuple[str, int, Options]) -> Result:
    return run_item(*job)


def run_suites(names, options: Options = Options(), parallel: bool = False,
               workers: int | None = None) -> list[Result]:
    """Run the named suites; results come back in registry order either way."""
    names = list(SUITES) if "all" in names else list(names)
    if not parallel:
        out = []
        for suite in names:
            for name, fn in suite_items(suite, options):
                out.append(_run(suite, name, fn))
        return out
    jobs = [(suite, k, options) for suite in names for k in range(len(suite_items(suite, options)))]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_worker, jobs, chunksize=1))


def summarize(results: list[Result]) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "skip": 0}
    for r in results:
        out[r.status] += 1
    return out


def report(results: list[Result], options: Options, suites) -> dict:
    return {
        "schema": 1,
        "suites": list(suites),
        "bounds": {"max_n": options.max_n, "max_k": options.max_k},
        "fixtures": options.fixtures,
        "summary": summarize(results),
        "checks": [asdict(r) for r in results],
    }
