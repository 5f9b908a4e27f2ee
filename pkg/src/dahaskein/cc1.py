"""The C^vee C_1 double affine Hecke algebra and the four-punctured sphere."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .a1 import Word
from .exact import I, ONE, ZERO, RatFun, as_ratfun, var, vpow
from .ore import OreAlgebra, OreOperator, apply, compose, symmetric_restriction
from . import orthopoly as op

Q = vpow(4)
Q_HALF = vpow(2)

LETTERS = ("T0", "T1", "T0v", "T1v")


def symbolic_params() -> tuple[RatFun, RatFun, RatFun, RatFun]:
    return tuple(var(n) for n in ("t0", "t1", "t2", "t3"))


def natural_params() -> tuple[RatFun, ...]:
    """(i x_u, i q^{-1/2} x_l, i x_u, i x_r): boundary values of the genus-one gluing."""
    xu, xl, xr = var("x_u"), var("x_l"), var("x_r")
    return (I * xu, I * xl / Q_HALF, I * xu, I * xr)


def star_params() -> tuple[RatFun, ...]:
    """(i x_u, i q^{-1/2} x_d, i x_u, i x_d): the genus-two specialization."""
    xu, xd = var("x_u"), var("x_d")
    return (I * xu, I * xd / Q_HALF, I * xu, I * xd)


@dataclass
class CC1Generators:
    params: tuple[RatFun, ...]
    algebra: OreAlgebra
    ops: dict[str, OreOperator]
    inv: dict[str, OreOperator]

    def scalar(self, c) -> OreOperator:
        return OreOperator.scalar(c, self.algebra)

    def one(self) -> OreOperator:
        return self.scalar(ONE)

    @property
    def X(self) -> OreOperator:
        return self.ops["X"]

    @property
    def Y(self) -> OreOperator:
        return self.ops["Y"]

    @property
    def e(self) -> OreOperator:
        t1 = self.params[1]
        return (self.ops["T1"] + t1).scale((t1 + t1.inverse()).inverse())

    def generator(self, name: str, power: int) -> OreOperator:
        base = self.ops[name] if power > 0 else self.inv[name]
        out = self.one()
        for _ in range(abs(power)):
            out = compose(out, base)
        return out

    def apply_generator(self, name: str, power: int, f: RatFun) -> RatFun:
        g = self.ops[name] if power > 0 else self.inv[name]
        for _ in range(abs(power)):
            f = apply(g, f)
        return f


def build_cc1(params: Sequence | None = None) -> CC1Generators:
    t0, t1, t2, t3 = params if params is not None else symbolic_params()
    t0, t1, t2, t3 = (as_ratfun(p) for p in (t0, t1, t2, t3))
    alg = OreAlgebra({"x": 4}, involution="x")
    x = var("x")
    one = OreOperator.scalar(ONE, alg)
    s = OreOperator.reflection(alg)
    D = OreOperator.shift(1, algebra=alg)
    sD = compose(s, D)
    qinv = Q.inverse()
    c0 = (qinv * (t0.inverse() - t0) * x * x + Q_HALF.inverse() * (t2.inverse() - t2) * x) / (ONE - qinv * x * x)
    T0 = sD.scale(t0.inverse()) - (one - sD).scale(c0)
    c1 = ((t1.inverse() - t1) + (t3.inverse() - t3) * x) / (x * x - ONE)
    T1 = s.scale(t1.inverse()) + (s - one).scale(c1)
    T0i = T0 + (t0 - t0.inverse())
    T1i = T1 + (t1 - t1.inverse())
    X = OreOperator.scalar(x, alg)
    Xi = OreOperator.scalar(x.inverse(), alg)
    T0v = compose(T0i, X).scale(Q_HALF.inverse())
    T0vi = compose(Xi, T0).scale(Q_HALF)
    T1v = compose(Xi, T1i)
    T1vi = compose(T1, X)
    Y = compose(T1, T0)
    Yi = compose(T0i, T1i)
    ops = {"T0": T0, "T1": T1, "T0v": T0v, "T1v": T1v, "X": X, "Y": Y}
    inv = {"T0": T0i, "T1": T1i, "T0v": T0vi, "T1v": T1vi, "X": Xi, "Y": Yi}
    return CC1Generators((t0, t1, t2, t3), alg, ops, inv)


def relation_residuals(g: CC1Generators) -> dict[str, OreOperator]:
    t0, t1, t2, t3 = g.params
    o = g.ops
    one = g.one()
    out = {}
    for name, t in (("T0", t0), ("T1", t1), ("T0v", t2), ("T1v", t3)):
        out[f"({name}-1/t)({name}+t)=0"] = compose(o[name] - t.inverse(), o[name] + t)
        out[f"{name} {name}^-1=1"] = compose(o[name], g.inv[name]) - one
    out["T1v T1 T0 T0v=q^-1/2"] = (
        compose(compose(compose(o["T1v"], o["T1"]), o["T0"]), o["T0v"]) - Q_HALF.inverse())
    out["X T1v T1=1"] = compose(compose(o["X"], o["T1v"]), o["T1"]) - one
    e = g.e
    out["e^2=e"] = compose(e, e) - e
    out["e T1=t1^-1 e"] = compose(e, o["T1"]) - e.scale(t1.inverse())
    out["T1 e=t1^-1 e"] = compose(o["T1"], e) - e.scale(t1.inverse())
    return out


# ---------------------------------------------------------------------------
# words, automorphisms and curves


def expand_xy(w: Word) -> Word:
    """Rewrite X and Y letters in terms of T0, T1, T0v, T1v."""
    letters = []
    for a, p in w.letters:
        if a == "Y":
            unit = [("T1", 1), ("T0", 1)] if p > 0 else [("T0", -1), ("T1", -1)]
        elif a == "X":
            unit = [("T1", -1), ("T1v", -1)] if p > 0 else [("T1v", 1), ("T1", 1)]
        else:
            letters.append((a, p))
            continue
        letters.extend(unit * abs(p))
    return Word.of(*letters, coeff=w.coeff)


def _sigma_images(name: str) -> tuple[dict[str, Word], tuple[int, int, int, int]]:
    W = lambda *ls: Word.of(*ls)
    ident = {a: W((a, 1)) for a in LETTERS}
    if name == "sR":
        img = dict(ident, T0=W(("T0", 1), ("T0v", 1), ("T0", -1)), T0v=W(("T0", 1)))
        return img, (2, 1, 0, 3)
    if name == "sR-":
        img = dict(ident, T0=W(("T0v", 1)), T0v=W(("T0v", -1), ("T0", 1), ("T0v", 1)))
        return img, (2, 1, 0, 3)
    if name == "sL":
        img = dict(ident, T0v=W(("T1v", 1)), T1v=W(("T1v", -1), ("T0v", 1), ("T1v", 1)))
        return img, (0, 1, 3, 2)
    if name == "sL-":
        img = dict(ident, T1v=W(("T0v", 1)), T0v=W(("T0v", 1), ("T1v", 1), ("T0v", -1)))
        return img, (0, 1, 3, 2)
    if name == "eps'":
        img = dict(ident, T0=W(("T1v", 1)), T1v=W(("T0", 1)))
        return img, (3, 1, 2, 0)
    raise ValueError(f"unknown automorphism {name!r}")


def apply_sigma(names: Sequence[str], w: Word, params: Sequence[RatFun]) -> tuple[Word, tuple[RatFun, ...]]:
    """Image of a word (rightmost automorphism first) with permuted parameters."""
    w = expand_xy(w)
    params = tuple(params)
    for name in reversed(list(names)):
        img, perm = _sigma_images(name)
        pieces = [img[a].power(p) for a, p in w.letters]
        if name == "eps'":
            pieces = [Word(pc.coeff, tuple(reversed(pc.letters))) for pc in reversed(pieces)]
        out = Word(w.coeff, ())
        for pc in pieces:
            out = out * pc
        w = out
        params = tuple(params[j] for j in perm)
    return w, params


def curve_word(family: tuple[int, int] | str, k: int = 0) -> Word:
    """Catalog of curve words; ``family`` is a slope or a k-family tag."""
    W = Word.of
    qh, qhi = Q_HALF, Q_HALF.inverse()
    if family == (1, 0):
        return W(("X", 1))
    if family == (0, 1):
        return W(("T1", 1), ("T0", 1))
    if family == (1, 1):
        return W(("T1", 1), ("T0v", 1))
    if family == (1, -1):
        return W(("T0", 1), ("T1v", 1), coeff=qh)
    if family == (1, 2):
        return W(("T1", 1), ("T0v", 1), ("T1v", 1), ("T0v", -1))
    if family == (2, 1):
        return W(("T1", 1), ("T0v", -1), ("T0", 1), ("T0v", 1))
    if family == "1,2k":
        return W(("Y", -k), ("X", -1), ("T1", -1), ("Y", k), ("T1", 1))
    if family == "1,2k+1":
        return W(("Y", -k - 1), ("T1", 1), ("X", 1), ("Y", k), ("T1", 1), coeff=qhi)
    if family == "2k,1":
        return W(("T1", 1), ("X", -k), ("T1", -1), ("Y", 1), ("X", k))
    if family == "2k+1,1":
        return W(("T1", 1), ("X", -k), ("Y", -1), ("T1", 1), ("X", k + 1), coeff=qhi)
    raise ValueError(f"unknown curve family {family!r}")


def slope_word(r: int, s: int) -> Word:
    """Word for A_(1,n) or A_(n,1) by slope, via the k-families."""
    if (r, s) in ((1, 0), (0, 1), (1, 1), (1, -1)):
        return curve_word((r, s))
    if r == 1 and s >= 0:
        return curve_word("1,2k", s // 2) if s % 2 == 0 else curve_word("1,2k+1", s // 2)
    if s == 1 and r >= 0:
        return curve_word("2k,1", r // 2) if r % 2 == 0 else curve_word("2k+1,1", r // 2)
    raise ValueError(f"no word for slope ({r},{s})")


def word_operator(g: CC1Generators, w: Word) -> OreOperator:
    out = g.scalar(w.coeff)
    for a, p in w.letters:
        out = compose(out, g.generator(a, p))
    return out


def word_apply(g: CC1Generators, w: Word, f) -> RatFun:
    f = as_ratfun(f)
    for a, p in reversed(w.letters):
        f = g.apply_generator(a, p, f)
    return w.coeff * f


def curve_operator(g: CC1Generators, w: Word) -> OreOperator:
    """ch(O) restricted to symmetric functions."""
    return symmetric_restriction(word_operator(g, w) + word_operator(g, w.inverse()))


def curve_operator_s04(g: CC1Generators, family, k: int = 0) -> OreOperator:
    return curve_operator(g, curve_word(family, k))


def aw_function(x: RatFun, params: Sequence[RatFun]) -> RatFun:
    t0, t1, t2, t3 = params
    return (t0 * t1 * (ONE - x / (t1 * t3)) * (ONE + t3 * x / t1)
            * (ONE - Q_HALF * x / (t0 * t2)) * (ONE + Q_HALF * t2 * x / t0)
            / ((ONE - x * x) * (ONE - Q * x * x)))


def askey_wilson_operator(params: Sequence[RatFun] | None = None, algebra: OreAlgebra | None = None) -> OreOperator:
    """A(x)(D - 1) + A(1/x)(D^-1 - 1) + t0 t1 + 1/(t0 t1)."""
    params = tuple(params) if params is not None else symbolic_params()
    alg = algebra or OreAlgebra({"x": 4}, involution="x")
    x = var("x")
    a_up = aw_function(x, params)
    a_dn = aw_function(x.inverse(), params)
    s = params[0] * params[1]
    return (OreOperator.shift(1, coeff=a_up, algebra=alg)
            + OreOperator.shift(-1, coeff=a_dn, algebra=alg)
            + OreOperator.scalar(s + s.inverse() - a_up - a_dn, alg))


def t_constants(params: Sequence[RatFun]) -> dict[str, RatFun]:
    t0, t1, t2, t3 = params
    d0, d2, d3 = t0 - t0.inverse(), t2 - t2.inverse(), t3 - t3.inverse()
    d1 = Q_HALF * t1 - (Q_HALF * t1).inverse()
    return {
        "03,12": d1 * d2 + d0 * d3,
        "02,13": d1 * d3 + d0 * d2,
        "01,23": d2 * d3 + d0 * d1,
        "d0": d0, "d1": d1, "d2": d2, "d3": d3,
    }


def boundary_values(params: Sequence[RatFun]) -> tuple[RatFun, ...]:
    """Images of the four boundary circles (sign fixed to +)."""
    c = t_constants(params)
    return (I * c["d0"], I * c["d2"], I * c["d1"], I * c["d3"])


def product_to_sum_residuals(g: CC1Generators, max_n: int = 3) -> dict[str, OreOperator]:
    c = t_constants(g.params)
    qh, qhi = Q_HALF, Q_HALF.inverse()
    A = {}

    def get(r, s):
        if (r, s) not in A:
            A[(r, s)] = curve_operator(g, slope_word(r, s))
        return A[(r, s)]

    out = {}
    out["A10 A01 = q^-1/2 A11 + q^1/2 A1-1 - t03,12"] = (
        compose(get(1, 0), get(0, 1)) - get(1, 1).scale(qhi) - get(1, -1).scale(qh) + c["03,12"])
    out["A11 A01 = q^-1/2 A12 + q^1/2 A10 - t02,13"] = (
        compose(get(1, 1), get(0, 1)) - curve_operator_s04(g, (1, 2)).scale(qhi) - get(1, 0).scale(qh) + c["02,13"])
    out["A10 A11 = q^-1/2 A21 + q^1/2 A01 - t01,23"] = (
        compose(get(1, 0), get(1, 1)) - curve_operator_s04(g, (2, 1)).scale(qhi) - get(0, 1).scale(qh) + c["01,23"])
    for n in range(1, max_n + 1):
        const = c["02,13"] if n % 2 else c["03,12"]
        out[f"A1{n} A01 family"] = (
            compose(get(1, n), get(0, 1)) - get(1, n + 1).scale(qhi) - get(1, n - 1).scale(qh) + const)
        const = c["01,23"] if n % 2 else c["03,12"]
        out[f"A10 A{n}1 family"] = (
            compose(get(1, 0), get(n, 1)) - get(n + 1, 1).scale(qhi) - get(n - 1, 1).scale(qh) + const)
    return out


def s04_relation_residuals(g: CC1Generators) -> dict[str, OreOperator]:
    """Four-punctured sphere skein relations under x, y, z = A10, A01, A11."""
    x = curve_operator_s04(g, (1, 0))
    y = curve_operator_s04(g, (0, 1))
    z = curve_operator_s04(g, (1, 1))
    b1, b2, b3, b4 = boundary_values(g.params)
    return s04_relations(x, y, z, (b1, b2, b3, b4), vpow(-2))


def s04_relations(x, y, z, b, A2: RatFun, A_extra: dict | None = None) -> dict[str, OreOperator]:
    """Residuals of the sphere relations with the given A^2 and boundary images."""
    b1, b2, b3, b4 = b
    A2i = A2.inverse()
    A4, A4i = A2 * A2, A2i * A2i
    out = {
        "A2 xy - A-2 yx": compose(x, y).scale(A2) - compose(y, x).scale(A2i) - z.scale(A4 - A4i)
        - (A2 - A2i) * (b2 * b3 + b1 * b4),
        "A2 yz - A-2 zy": compose(y, z).scale(A2) - compose(z, y).scale(A2i) - x.scale(A4 - A4i)
        - (A2 - A2i) * (b1 * b2 + b3 * b4),
        "A2 zx - A-2 xz": compose(z, x).scale(A2) - compose(x, z).scale(A2i) - y.scale(A4 - A4i)
        - (A2 - A2i) * (b1 * b3 + b2 * b4),
    }
    cubic = (compose(compose(x, y), z).scale(A2)
             - compose(x, x).scale(A4) - compose(y, y).scale(A4i) - compose(z, z).scale(A4)
             - x.scale(A2 * (b1 * b2 + b3 * b4)) - y.scale(A2i * (b1 * b3 + b2 * b4))
             - z.scale(A2 * (b1 * b4 + b2 * b3))
             - (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4 + b1 * b2 * b3 * b4 - (A2 + A2i) ** 2))
    out["cubic"] = cubic
    return out


def quartic_residual(g: CC1Generators) -> OreOperator:
    """A1-1 A11 expansion with the quartic parameter term."""
    c = t_constants(g.params)
    qh, qhi = Q_HALF, Q_HALF.inverse()
    a10 = curve_operator_s04(g, (1, 0))
    a01 = curve_operator_s04(g, (0, 1))
    x = var("x")
    a20 = g.scalar(x * x + (x * x).inverse())
    a02 = symmetric_restriction(compose(g.Y, g.Y) + compose(g.inv["Y"], g.inv["Y"]))
    const = ((qh - qhi) ** 2 - c["d0"] ** 2 - c["d1"] ** 2 - c["d2"] ** 2 - c["d3"] ** 2
             + c["d0"] * c["d1"] * c["d2"] * c["d3"])
    rhs = (a20.scale(Q.inverse()) + a02.scale(Q) - a10.scale(qhi * c["02,13"])
           - a01.scale(qh * c["01,23"]) + const)
    return compose(curve_operator_s04(g, (1, -1)), curve_operator_s04(g, (1, 1))) - rhs


def daha_poly_sphere(n: int, w: Word, g: CC1Generators | None = None) -> RatFun:
    """P_n = M_{n-1}(O; q, q)(1) = S_{n-1}(ch O)(1)."""
    g = g or build_cc1()
    m = n - 1
    pos = {0: ONE}
    cur = ONE
    for k in range(1, m + 1):
        cur = word_apply(g, w, cur)
        pos[k] = cur
    cur = ONE
    inv = w.inverse()
    for k in range(1, m + 1):
        cur = word_apply(g, inv, cur)
        pos[-k] = cur
    total = ZERO
    for j in range(m + 1):
        total = total + pos[m - 2 * j]
    return total


def aw_second_recurrence_residual(m: int, g: CC1Generators) -> RatFun:
    """(T1 T0v + inverse) P_m minus the three-term right side."""
    t0, t1, t2, t3 = g.params
    params = g.params
    w = Word.of(("T1", 1), ("T0v", 1))
    opr = curve_operator(g, w)
    P = lambda k: op.askey_wilson(k, params)
    Bm, Cm = op.aw_three_term(m, params)
    s = t0 * t1
    qm = lambda e2: vpow(2 * e2)  # q^{e2/2}
    mid = Bm - qm(2 * m - 1) * ((t0 - Q_HALF * t1) * (ONE + Q_HALF * s) * (t2 - t3) * (ONE + t2 * t3)
                                 / ((qm(2 * m - 1) + s) * (qm(2 * m + 1) + s) * t2 * t3))
    rhs = qm(2 * m + 1) / s * P(m + 1) + mid * P(m)
    if m > 0:
        rhs = rhs + s * qm(1 - 2 * m) * Cm * P(m - 1)
    return apply(opr, P(m)) - rhs
