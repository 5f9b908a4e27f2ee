"""The A1 double affine Hecke algebra in its polynomial representation.

Generators act on functions of one variable (``x`` for the standalone
algebra, ``x_u``/``x_d`` for the copies used in genus two):

    T = t^-1 s + (t^-1 - t)/(x^2 - 1) (s - 1),   X = x,   Y = D s T,

with D the q-shift.  SL(2, Z) automorphisms act on words in T, X, Y by
substituting generator images; they are never realized as conjugations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .exact import ONE, ZERO, RatFun, as_ratfun, substitute, var, vpow
from .ore import OreAlgebra, OreOperator, apply, compose, symmetric_restriction
from . import orthopoly as op

_SLOT = {"x": 0, "x_u": 1, "x_d": 2}


class DtNotSupported(ValueError):
    """Automorphisms cannot act on words containing the parameter shift."""


@dataclass
class A1Generators:
    variable: str
    q_exp: int  # q = v**q_exp
    t: RatFun
    algebra: OreAlgebra
    T: OreOperator
    Tinv: OreOperator
    X: OreOperator
    Xinv: OreOperator
    Y: OreOperator
    Yinv: OreOperator
    D: OreOperator
    Dinv: OreOperator
    s: OreOperator
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def q(self) -> RatFun:
        return vpow(self.q_exp)

    @property
    def q_half(self) -> RatFun:
        return vpow(self.q_exp // 2)

    @cached_property
    def e(self) -> OreOperator:
        t = self.t
        return (self.T + t).scale((t + t.inverse()).inverse())

    def one(self) -> OreOperator:
        return OreOperator.scalar(ONE, self.algebra)

    def scalar(self, c) -> OreOperator:
        return OreOperator.scalar(c, self.algebra)

    def generator(self, name: str, power: int = 1) -> OreOperator:
        base = {"T": (self.T, self.Tinv), "X": (self.X, self.Xinv), "Y": (self.Y, self.Yinv)}[name]
        op_ = base[0] if power > 0 else base[1]
        out = self.one()
        for _ in range(abs(power)):
            out = compose(out, op_)
        return out

    def apply_generator(self, name: str, power: int, f: RatFun) -> RatFun:
        op_ = {"T": (self.T, self.Tinv), "X": (self.X, self.Xinv), "Y": (self.Y, self.Yinv)}[name]
        g = op_[0] if power > 0 else op_[1]
        for _ in range(abs(power)):
            f = apply(g, f)
        return f


def build_a1(variable: str = "x", q_exp: int = 4, t: RatFun | None = None,
             t_shift: int | None = None) -> A1Generators:
    """Polynomial representation on functions of ``variable`` with q = v**q_exp."""
    t = var("t") if t is None else as_ratfun(t)
    shifts = {variable: q_exp}
    if t_shift is not None:
        shifts["t"] = t_shift
    alg = OreAlgebra(shifts, involution=variable)
    z = var(variable)
    slot = _SLOT[variable]
    sh = [0, 0, 0, 0]
    sh[slot] = 1
    D = OreOperator.shift(*sh, algebra=alg)
    sh[slot] = -1
    Dinv = OreOperator.shift(*sh, algebra=alg)
    s = OreOperator.reflection(alg)
    one = OreOperator.scalar(ONE, alg)
    tinv = t.inverse()
    T = s.scale(tinv) + (s - one).scale((tinv - t) / (z * z - ONE))
    Tinv = T + (t - tinv)
    X = OreOperator.scalar(z, alg)
    Xinv = OreOperator.scalar(z.inverse(), alg)
    Y = compose(compose(D, s), T)
    Yinv = compose(compose(Tinv, s), Dinv)
    return A1Generators(variable, q_exp, t, alg, T, Tinv, X, Xinv, Y, Yinv, D, Dinv, s)


def macdonald_operator(variable: str = "x", q_exp: int = 4, t: RatFun | None = None,
                       algebra: OreAlgebra | None = None) -> OreOperator:
    """(t z - 1/(t z))/(z - 1/z) D + (z/t - t/z)/(z - 1/z) D^-1."""
    t = var("t") if t is None else as_ratfun(t)
    alg = algebra or OreAlgebra({variable: q_exp}, involution=variable)
    z = var(variable)
    slot = _SLOT[variable]
    up = [0, 0, 0, 0]
    up[slot] = 1
    down = [0, 0, 0, 0]
    down[slot] = -1
    den = z - z.inverse()
    return (OreOperator.shift(*up, coeff=(t * z - (t * z).inverse()) / den, algebra=alg)
            + OreOperator.shift(*down, coeff=(z / t - t / z) / den, algebra=alg))


def raising_operator(variable: str = "x", q_exp: int = 4, t: RatFun | None = None,
                     algebra: OreAlgebra | None = None) -> OreOperator:
    """Maps M_m(x; q, q t) to (q^{m+1} t^2 - q^{-m-1} t^-2) M_{m+1}(x; q, t)."""
    t = var("t") if t is None else as_ratfun(t)
    alg = algebra or OreAlgebra({variable: q_exp}, involution=variable)
    z = var(variable)
    q = vpow(q_exp)
    t2, z2 = t * t, z * z
    base = q * t2 * z * (z2 - ONE)
    slot = _SLOT[variable]
    up, down = [0, 0, 0, 0], [0, 0, 0, 0]
    up[slot], down[slot] = 1, -1
    return (OreOperator.shift(*up, coeff=(ONE - t2 * z2) * (ONE - q * q * t2 * z2) / base, algebra=alg)
            - OreOperator.shift(*down, coeff=(t2 - z2) * (t2 * q * q - z2) / base, algebra=alg))


def lowering_operator(variable: str = "x", q_exp: int = 4,
                      algebra: OreAlgebra | None = None) -> OreOperator:
    """x/(x^2 - 1) (D - D^-1): maps M_m(x; q, t) to (q^m - q^-m) M_{m-1}(x; q, q t)."""
    alg = algebra or OreAlgebra({variable: q_exp}, involution=variable)
    z = var(variable)
    slot = _SLOT[variable]
    up, down = [0, 0, 0, 0], [0, 0, 0, 0]
    up[slot], down[slot] = 1, -1
    c = z / (z * z - ONE)
    return OreOperator.shift(*up, coeff=c, algebra=alg) - OreOperator.shift(*down, coeff=c, algebra=alg)


def relation_residuals(g: A1Generators) -> dict[str, OreOperator]:
    """Residuals of the defining relations; all vanish."""
    t, q = g.t, g.q
    one = g.one()
    T, X, Y = g.T, g.X, g.Y
    out = {
        "hecke (T+t)(T-1/t)=0": compose(T + t, T - t.inverse()),
        "TXT=X^-1": compose(compose(T, X), T) - g.Xinv,
        "T^-1 Y T^-1=Y^-1": compose(compose(g.Tinv, Y), g.Tinv) - g.Yinv,
        "XY=q^-1 YXT^2": compose(X, Y) - compose(compose(compose(Y, X), T), T).scale(q.inverse()),
        "T T^-1=1": compose(T, g.Tinv) - one,
        "Y Y^-1=1": compose(Y, g.Yinv) - one,
        "e^2=e": compose(g.e, g.e) - g.e,
        "eT=t^-1 e": compose(g.e, T) - g.e.scale(t.inverse()),
        "Te=t^-1 e": compose(T, g.e) - g.e.scale(t.inverse()),
    }
    return out


# ---------------------------------------------------------------------------
# words and automorphisms


@dataclass(frozen=True)
class Word:
    """``coeff * prod(letter**power)`` with letters in {T, X, Y}."""

    coeff: RatFun
    letters: tuple[tuple[str, int], ...]

    @staticmethod
    def of(*letters: tuple[str, int], coeff=ONE) -> Word:
        return Word(as_ratfun(coeff), _merge(letters))

    def __mul__(self, other: Word) -> Word:
        return Word(self.coeff * other.coeff, _merge(self.letters + other.letters))

    def inverse(self) -> Word:
        return Word(self.coeff.inverse(), tuple((a, -p) for a, p in reversed(self.letters)))

    def power(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        out = Word(ONE, ())
        for _ in range(abs(n)):
            out = out * base
        return out


def _merge(letters) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for a, p in letters:
        if p == 0:
            continue
        if out and out[-1][0] == a:
            out[-1][1] += p
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([a, p])
    return tuple((a, p) for a, p in out)


X_WORD = Word.of(("X", 1))
Y_WORD = Word.of(("Y", 1))
T_WORD = Word.of(("T", 1))

# Twist alphabet: tau_R, tau_L and inverses, epsilon, epsilon'.
TWISTS = ("tR", "tR-", "tL", "tL-", "eps", "eps'")


def _images(name: str, q_half: RatFun) -> dict[str, Word]:
    if name == "tR":
        return {"T": T_WORD, "X": X_WORD, "Y": Word.of(("X", 1), ("Y", 1), coeff=q_half)}
    if name == "tR-":
        return {"T": T_WORD, "X": X_WORD, "Y": Word.of(("X", -1), ("Y", 1), coeff=q_half.inverse())}
    if name == "tL":
        return {"T": T_WORD, "Y": Y_WORD, "X": Word.of(("Y", 1), ("X", 1), coeff=q_half.inverse())}
    if name == "tL-":
        return {"T": T_WORD, "Y": Y_WORD, "X": Word.of(("Y", -1), ("X", 1), coeff=q_half)}
    if name == "eps":
        return {"T": Word.of(("T", -1)), "X": Y_WORD, "Y": X_WORD}
    if name == "eps'":
        return {"T": T_WORD, "X": Word.of(("Y", -1)), "Y": Word.of(("X", -1))}
    raise ValueError(f"unknown twist {name!r}")


def _invert_qt(f: RatFun) -> RatFun:
    return substitute(f, {"v": vpow(-1), "t": var("t").inverse()})


def apply_single_twist(name: str, w: Word, q_exp: int = 4) -> Word:
    imgs = _images(name, vpow(q_exp // 2))
    coeff = _invert_qt(w.coeff) if name == "eps" else w.coeff
    pieces = []
    for a, p in w.letters:
        img = imgs[a]
        pieces.append(img.power(p))
    if name == "eps'":
        pieces.reverse()
        pieces = [Word(pc.coeff, tuple(reversed(pc.letters))) for pc in pieces]
    out = Word(coeff, ())
    for pc in pieces:
        out = out * pc
    return out


def apply_twist(twists: Sequence[str], w: Word, q_exp: int = 4) -> Word:
    """Image of ``w`` under ``twists[0] o twists[1] o ...`` (rightmost first)."""
    if any(a == "Dt" for a, _ in w.letters):
        raise DtNotSupported("automorphisms do not act on the parameter shift here")
    for name in reversed(list(twists)):
        w = apply_single_twist(name, w, q_exp)
    return w


def word_operator(g: A1Generators, w: Word) -> OreOperator:
    out = g.scalar(w.coeff)
    for a, p in w.letters:
        out = compose(out, g.generator(a, p))
    return out


def word_apply(g: A1Generators, w: Word, f) -> RatFun:
    f = as_ratfun(f)
    for a, p in reversed(w.letters):
        f = g.apply_generator(a, p, f)
    return w.coeff * f


# ---------------------------------------------------------------------------
# curves on the once-punctured torus


def curve_word(r: int, s: int, q_exp: int = 4) -> Word:
    """Word O_(r,s) for the families (1,0), (0,1), (1,n), (n,1), (2k+1,2)."""
    qh = vpow(q_exp // 2)
    if (r, s) == (1, 0):
        return X_WORD
    if (r, s) == (0, 1):
        return Y_WORD
    if (r, s) == (1, -1):
        return Word.of(("X", -1), ("Y", 1), coeff=qh.inverse())
    if r == 1 and s >= 1:
        # q^{-n/2+1} Y^{n-1} X Y
        return Word.of(("Y", s - 1), ("X", 1), ("Y", 1), coeff=_half_power(q_exp, 2 - s))
    if s == 1 and r >= 1:
        return Word.of(("X", r - 1), ("Y", 1), ("X", 1), coeff=_half_power(q_exp, r - 2))
    if s == 2 and r % 2 == 1:
        k = (r - 1) // 2
        return apply_twist(["tR"] * k + ["tL", "tL"], X_WORD, q_exp)
    raise ValueError(f"no word helper for slope ({r},{s})")


def _half_power(q_exp: int, n: int) -> RatFun:
    """q**(n/2)."""
    e = q_exp * n
    if e % 2:
        raise ValueError("q**(n/2) not integral in v")
    return vpow(e // 2)


def curve_operator_t11(g: A1Generators, w: Word) -> OreOperator:
    """ch(O) = O + O^-1 for the word O."""
    return word_operator(g, w) + word_operator(g, w.inverse())


def sym_operator(g: A1Generators, w: Word) -> OreOperator:
    """ch(O) restricted to symmetric functions (s dropped)."""
    return symmetric_restriction(curve_operator_t11(g, w))


def daha_poly_torus(n: int, w: Word, g: A1Generators | None = None) -> RatFun:
    """P_n = M_{n-1}(O; q, t)(1): Macdonald polynomial evaluated on the word."""
    g = g or build_a1()
    m = op.macdonald_a1(n - 1, g.t, g.q, g.variable)
    coeffs = op.power_sum_expand(m, g.variable)
    total = ZERO
    powers = {0: ONE}
    inv = w.inverse()
    f = ONE
    for k in range(1, max(coeffs) + 1 if coeffs else 1):
        f = word_apply(g, w, f)
        powers[k] = f
    f = ONE
    for k in range(1, max(coeffs) + 1 if coeffs else 1):
        f = word_apply(g, inv, f)
        powers[-k] = f
    for k, c in coeffs.items():
        if k == 0:
            total = total + c
        else:
            total = total + c * (powers[k] + powers[-k])
    return total


def s_poly_on_word(g: A1Generators, w: Word, n: int, f=ONE) -> RatFun:
    """S_n(ch O)(f) = sum_{m=0}^{n} O^{n-2m}(f)."""
    if n < 0:
        raise ValueError("negative index")
    pos = {0: as_ratfun(f)}
    cur = as_ratfun(f)
    for k in range(1, n + 1):
        cur = word_apply(g, w, cur)
        pos[k] = cur
    cur = as_ratfun(f)
    inv = w.inverse()
    for k in range(1, n + 1):
        cur = word_apply(g, inv, cur)
        pos[-k] = cur
    total = ZERO
    for m in range(n + 1):
        total = total + pos[n - 2 * m]
    return total


def torus_knot_operator(k: int, g: A1Generators | None = None) -> OreOperator:
    """The symmetric-space operator for ch(q^{k-1}(X^k Y)^2 X) in closed form."""
    g = g or build_a1()
    x = var(g.variable)
    q, t = g.q, g.t
    x2, t2, q2 = x * x, t * t, q * q
    c_up = (q * x) ** (2 * k + 1) * (ONE - t2 * x2) * (ONE - q2 * t2 * x2) / (t2 * (ONE - x2) * (ONE - q2 * x2))
    c_dn = (q / x) ** (2 * k + 1) * (t2 - x2) * (q2 * t2 - x2) / (t2 * (ONE - x2) * (q2 - x2))
    c_0 = -q / t2 * (q2 - t2) * (ONE - t2) * x * (ONE + x2) / ((q2 - x2) * (ONE - q2 * x2))
    slot = _SLOT[g.variable]
    up, dn = [0, 0, 0, 0], [0, 0, 0, 0]
    up[slot], dn[slot] = 2, -2
    return (OreOperator.shift(*up, coeff=c_up, algebra=g.algebra)
            + OreOperator.shift(*dn, coeff=c_dn, algebra=g.algebra)
            + OreOperator.scalar(c_0, g.algebra))


def product_to_sum_residuals(g: A1Generators, max_n: int = 3) -> dict[str, OreOperator]:
    """Curve-operator product identities, on the symmetric space."""
    q, t = g.q, g.t
    qh = g.q_half
    M = {rs: sym_operator(g, curve_word(*rs, g.q_exp)) for rs in [(1, 0), (0, 1), (1, 1), (1, -1)]}
    for n in range(2, max_n + 2):
        M[(1, n)] = sym_operator(g, curve_word(1, n, g.q_exp))
        M[(n, 1)] = sym_operator(g, curve_word(n, 1, g.q_exp))
    out = {}
    out["M10 M01 = q^-1/2 M11 + q^1/2 M1-1"] = (
        compose(M[(1, 0)], M[(0, 1)]) - M[(1, 1)].scale(qh.inverse()) - M[(1, -1)].scale(qh))
    for n in range(1, max_n + 1):
        prev = M[(0, 1)] if n == 1 else M[(1, n - 1)]
        out[f"M01 M1{n} = q^-1/2 M1{n-1} + q^1/2 M1{n+1}"] = (
            compose(M[(0, 1)], M[(1, n)]) - prev.scale(qh.inverse()) - M[(1, n + 1)].scale(qh)
            if n > 1 else
            compose(M[(0, 1)], M[(1, 1)]) - M[(1, 0)].scale(qh.inverse()) - M[(1, 2)].scale(qh))
        prev = M[(1, 0)] if n == 1 else M[(n - 1, 1)]
        out[f"M{n}1 M10 = q^-1/2 M{n-1}1 + q^1/2 M{n+1}1"] = (
            compose(M[(n, 1)], M[(1, 0)]) - prev.scale(qh.inverse()) - M[(n + 1, 1)].scale(qh)
            if n > 1 else
            compose(M[(1, 1)], M[(1, 0)]) - M[(0, 1)].scale(qh.inverse()) - M[(2, 1)].scale(qh))
    x = var(g.variable)
    x2 = OreOperator.scalar(x * x + (x * x).inverse(), g.algebra)
    y2 = symmetric_restriction(word_operator(g, Word.of(("Y", 2))) + word_operator(g, Word.of(("Y", -2))))
    const = q + q.inverse() - (t * t / q + q / (t * t))
    out["M1-1 M11 expansion"] = (
        compose(M[(1, -1)], M[(1, 1)]) - x2.scale(q.inverse()) - y2.scale(q) - const)
    return out
