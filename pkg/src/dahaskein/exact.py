"""Exact arithmetic over the Gaussian rationals.

Everything in the package lives in the field Q(i)(v, t, x, x_u, x_d, x_l, x_r,
t0, t1, t2, t3, w); ``w`` is a square root of ``x`` used only when checking
the gluing ratio rules.  The single root variable ``v`` carries all q-powers:
q = v**4, q**(1/2) = v**2, q_u = v**2, q_u**(1/2) = v.

A :class:`RatFun` is stored as ``(re + i*im) / den`` where ``re``, ``im`` and
``den`` are polynomials with rational coefficients (flint ``fmpq_mpoly``) and
``den`` is free of ``i``.  The triple is kept reduced: no nonunit polynomial
divides all three, and ``den`` has leading coefficient one.  That form is
unique, so equality is a field comparison; :func:`cross_equal` gives the
cross-multiplication route as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import flint

VARIABLES: tuple[str, ...] = (
    "v", "t", "x", "x_u", "x_d", "x_l", "x_r", "t0", "t1", "t2", "t3", "w",
)
NVARS = len(VARIABLES)
VAR_INDEX = {name: k for k, name in enumerate(VARIABLES)}

_CTX = flint.fmpq_mpoly_ctx.get(VARIABLES, "degrevlex")
_ZERO_POLY = _CTX.from_dict({})
_ONE_POLY = _CTX.from_dict({(0,) * NVARS: 1})
_ZERO_EXP = (0,) * NVARS


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class SpecializationSingular(ArithmeticError):
    """A substitution made a denominator vanish identically."""


@dataclass(frozen=True)
class GaussianRational:
    """A scalar ``re + im*i`` with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other: GaussianRational) -> GaussianRational:
        other = _as_gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        return self + (-_as_gauss(other))

    def __mul__(self, other: GaussianRational) -> GaussianRational:
        o = _as_gauss(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other: GaussianRational) -> GaussianRational:
        o = _as_gauss(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise DivisionByZero("division by zero scalar")
        p = self * o.conjugate()
        return GaussianRational(p.re / norm, p.im / norm)

    def __pow__(self, n: int) -> GaussianRational:
        if n < 0:
            return GaussianRational(1) / (self ** -n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _as_gauss(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(Fraction(value))


def _fmpq(value: Fraction) -> flint.fmpq:
    return flint.fmpq(value.numerator, value.denominator)


def _frac(value: flint.fmpq) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _poly_from_terms(terms: Mapping[tuple[int, ...], object]) -> flint.fmpq_mpoly:
    return _CTX.from_dict({e: c for e, c in terms.items() if c != 0})


def _monomial(exps: Iterable[int]) -> flint.fmpq_mpoly:
    return _CTX.from_dict({tuple(exps): 1})


class RatFun:
    """Exact rational function over Q(i) in the fixed variable universe."""

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, re, im=None, den=None, *, reduced: bool = False):
        if not isinstance(re, flint.fmpq_mpoly):
            re = _CTX.constant(_fmpq(Fraction(re)))
        im = _ZERO_POLY if im is None else im
        den = _ONE_POLY if den is None else den
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if not reduced:
            re, im, den = _reduce(re, im, den)
        self.re = re
        self.im = im
        self.den = den
        self._hash = None

    # construction helpers
    @staticmethod
    def const(value) -> RatFun:
        g = _as_gauss(value)
        return RatFun(_CTX.constant(_fmpq(g.re)), _CTX.constant(_fmpq(g.im)), _ONE_POLY)

    @staticmethod
    def var(name: str) -> RatFun:
        return RatFun(_CTX.gen(VAR_INDEX[name]), _ZERO_POLY, _ONE_POLY, reduced=True)

    @staticmethod
    def monomial(exps: Mapping[str, int], coeff=1) -> RatFun:
        """``coeff * prod(var**e)`` with signed exponents."""
        pos = [0] * NVARS
        neg = [0] * NVARS
        for name, e in exps.items():
            if e >= 0:
                pos[VAR_INDEX[name]] += e
            else:
                neg[VAR_INDEX[name]] -= e
        g = _as_gauss(coeff)
        m = _monomial(pos)
        return RatFun(m * _fmpq(g.re), m * _fmpq(g.im), _monomial(neg))

    @staticmethod
    def from_terms(terms: Mapping[tuple[int, ...], GaussianRational]) -> RatFun:
        """Laurent polynomial from ``{exponent vector: coefficient}``."""
        if not terms:
            return ZERO
        low = [min(e[k] for e in terms) for k in range(NVARS)]
        shift = [max(0, -m) for m in low]
        re, im = {}, {}
        for e, c in terms.items():
            c = _as_gauss(c)
            key = tuple(a + s for a, s in zip(e, shift))
            if c.re:
                re[key] = _fmpq(c.re)
            if c.im:
                im[key] = _fmpq(c.im)
        return RatFun(_CTX.from_dict(re), _CTX.from_dict(im), _monomial(shift))

    # predicates
    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_one(self) -> bool:
        return self.im.is_zero() and self.den.is_one() and self.re.is_one()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_laurent(self) -> bool:
        return len(self.den) == 1

    def variables(self) -> set[str]:
        used = set()
        for p in (self.re, self.im, self.den):
            for k, d in enumerate(p.degrees()):
                if d > 0:
                    used.add(VARIABLES[k])
        return used

    # arithmetic
    def __add__(self, other) -> RatFun:
        other = as_ratfun(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFun(self.re + other.re, self.im + other.im, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            d1, d2 = self.den, other.den
            re = self.re * d2 + other.re * d1
            im = _lin(self.im, d2, other.im, d1)
            if re.is_zero() and im.is_zero():
                return ZERO
            return RatFun(re, im, self.den * d2, reduced=True)._finish()
        d1 = self.den / g
        d2 = other.den / g
        re = self.re * d2 + other.re * d1
        im = _lin(self.im, d2, other.im, d1)
        den = d1 * other.den
        return RatFun(re, im, den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(-self.re, -self.im, self.den, reduced=True)

    def __sub__(self, other) -> RatFun:
        return self + (-as_ratfun(other))

    def __rsub__(self, other) -> RatFun:
        return as_ratfun(other) - self

    def __mul__(self, other) -> RatFun:
        other = as_ratfun(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        if other.is_one():
            return self
        if self.is_one():
            return other
        if self.im.is_zero() and other.im.is_zero():
            g1 = self.re.gcd(other.den)
            g2 = other.re.gcd(self.den)
            a, d = (self.re, other.den) if g1.is_one() else (self.re / g1, other.den / g1)
            c, b = (other.re, self.den) if g2.is_one() else (other.re / g2, self.den / g2)
            return RatFun(a * c, _ZERO_POLY, b * d, reduced=True)._normalize_lc()
        re = self.re * other.re - _mul0(self.im, other.im)
        im = _mul0(self.re, other.im) + _mul0(self.im, other.re)
        return RatFun(re, im, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFun:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.im.is_zero():
            return RatFun(self.den, _ZERO_POLY, self.re)
        norm = self.re * self.re + self.im * self.im
        return RatFun(self.den * self.re, -(self.den * self.im), norm)

    def __truediv__(self, other) -> RatFun:
        return self * as_ratfun(other).inverse()

    def __rtruediv__(self, other) -> RatFun:
        return as_ratfun(other) * self.inverse()

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        if self.im.is_zero():
            return RatFun(self.re ** n, _ZERO_POLY, self.den ** n, reduced=True)._normalize_lc()
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> RatFun:
        """Complex conjugation of coefficients (variables treated as real)."""
        return RatFun(self.re, -self.im, self.den, reduced=True)

    # comparison
    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            try:
                other = as_ratfun(other)
            except TypeError:
                return NotImplemented
        return self.den == other.den and self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((str(self.re), str(self.im), str(self.den)))
        return self._hash

    # internal normalization
    def _normalize_lc(self) -> RatFun:
        lc = self.den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            self.re = self.re * inv
            self.im = self.im * inv
            self.den = self.den * inv
        return self

    def _finish(self) -> RatFun:
        return self._normalize_lc()

    # substitution
    def subs(self, bindings: Mapping[str, object]) -> RatFun:
        return substitute(self, bindings)

    def numerator(self) -> RatFun:
        return RatFun(self.re, self.im, _ONE_POLY, reduced=True)

    def denominator(self) -> RatFun:
        return RatFun(self.den, _ZERO_POLY, _ONE_POLY, reduced=True)

    def laurent_terms(self) -> dict[tuple[int, ...], GaussianRational]:
        """Terms of a Laurent polynomial; raises ValueError otherwise."""
        if len(self.den) != 1:
            raise ValueError("not a Laurent polynomial")
        ((dexp, dcoef),) = self.den.to_dict().items()
        scale = _frac(dcoef)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for e, c in self.re.to_dict().items():
            key = tuple(a - b for a, b in zip(e, dexp))
            out[key] = GaussianRational(_frac(c) / scale)
        for e, c in self.im.to_dict().items():
            key = tuple(a - b for a, b in zip(e, dexp))
            prev = out.get(key, GaussianRational())
            out[key] = GaussianRational(prev.re, _frac(c) / scale)
        return out

    def __repr__(self) -> str:
        return f"RatFun({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


def _mul0(a, b):
    if a.is_zero() or b.is_zero():
        return _ZERO_POLY
    return a * b


def _lin(a, d2, b, d1):
    out = _ZERO_POLY
    if not a.is_zero():
        out = a * d2
    if not b.is_zero():
        out = out + b * d1
    return out


def _reduce(re, im, den):
    if re.is_zero() and im.is_zero():
        return _ZERO_POLY, _ZERO_POLY, _ONE_POLY
    g = den.gcd(re) if not re.is_zero() else den
    if not im.is_zero() and not g.is_one():
        g = g.gcd(im)
    if not g.is_one():
        re = re / g
        den = den / g
        if not im.is_zero():
            im = im / g
    lc = den.leading_coefficient()
    if lc != 1:
        inv = 1 / lc
        re, im, den = re * inv, im * inv, den * inv
    return re, im, den


def as_ratfun(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return RatFun.const(value)
    raise TypeError(f"cannot convert {type(value).__name__} to RatFun")


ZERO = RatFun(_ZERO_POLY, _ZERO_POLY, _ONE_POLY, reduced=True)
ONE = RatFun(_ONE_POLY, _ZERO_POLY, _ONE_POLY, reduced=True)
I = RatFun(_ZERO_POLY, _ONE_POLY, _ONE_POLY, reduced=True)


def cross_equal(a: RatFun, b: RatFun) -> bool:
    """Equality by cross-multiplication, independent of the canonical form."""
    lhs_re, lhs_im = a.re * b.den, a.im * b.den
    rhs_re, rhs_im = b.re * a.den, b.im * a.den
    return lhs_re == rhs_re and lhs_im == rhs_im


def reduce_gcd(f: RatFun) -> RatFun:
    """Fully reduced representative; values are stored reduced already."""
    re, im, den = _reduce(f.re, f.im, f.den)
    return RatFun(re, im, den, reduced=True)


# ---------------------------------------------------------------------------
# substitution


def _monomial_binding(value: RatFun):
    """Return (coeff, exponent vector) when ``value`` is c * Laurent monomial."""
    if len(value.den) != 1:
        return None
    num_terms = {}
    for part, unit in ((value.re, GaussianRational(1)), (value.im, GaussianRational(0, 1))):
        for e, c in part.to_dict().items():
            prev = num_terms.get(e, GaussianRational())
            num_terms[e] = prev + unit * GaussianRational(_frac(c))
    if len(num_terms) != 1:
        return None
    ((nexp, ncoef),) = num_terms.items()
    ((dexp, dcoef),) = value.den.to_dict().items()
    exps = tuple(a - b for a, b in zip(nexp, dexp))
    return ncoef / GaussianRational(_frac(dcoef)), exps


class MonomialMap:
    """A substitution sending each variable to ``coeff * Laurent monomial``.

    Variables absent from the map are fixed.  Results are cached per input,
    since operator composition shifts the same coefficients repeatedly.
    """

    __slots__ = ("images", "key", "_cache")

    def __init__(self, images: Mapping[int, tuple[GaussianRational, tuple[int, ...]]]):
        self.images = dict(images)
        self.key = tuple(sorted((k, str(c), e) for k, (c, e) in self.images.items()))
        self._cache: dict[RatFun, RatFun] = {}

    def _apply_poly(self, poly, unit: GaussianRational):
        """Image of ``unit * poly`` as (terms dict with signed exps)."""
        images = self.images
        out: dict[tuple[int, ...], GaussianRational] = {}
        for e, c in poly.to_dict().items():
            coeff = unit * GaussianRational(_frac(c))
            new = list(e)
            for k, (ic, iexp) in images.items():
                d = e[k]
                if d == 0:
                    continue
                new[k] -= d
                for j, a in enumerate(iexp):
                    if a:
                        new[j] += a * d
                if not (ic.re == 1 and ic.im == 0):
                    coeff = coeff * ic ** d
            key = tuple(new)
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
        return out

    def __call__(self, f: RatFun) -> RatFun:
        hit = self._cache.get(f)
        if hit is not None:
            return hit
        if not self.images:
            return f
        num = self._apply_poly(f.re, GaussianRational(1))
        if not f.im.is_zero():
            for e, c in self._apply_poly(f.im, GaussianRational(0, 1)).items():
                prev = num.get(e)
                num[e] = c if prev is None else prev + c
        den = self._apply_poly(f.den, GaussianRational(1))
        den = {e: c for e, c in den.items() if not c.is_zero()}
        if not den:
            raise SpecializationSingular("denominator vanishes under substitution")
        num = {e: c for e, c in num.items() if not c.is_zero()}
        result = RatFun.from_terms(num) / RatFun.from_terms(den) if num else ZERO
        if len(self._cache) > 20000:
            self._cache.clear()
        self._cache[f] = result
        return result


def monomial_map(bindings: Mapping[str, object]) -> MonomialMap | None:
    images = {}
    for name, value in bindings.items():
        mb = _monomial_binding(as_ratfun(value))
        if mb is None:
            return None
        images[VAR_INDEX[name]] = mb
    return MonomialMap(images)


def substitute(f: RatFun, bindings: Mapping[str, object]) -> RatFun:
    """Simultaneous substitution of variables by rational functions."""
    f = as_ratfun(f)
    mm = monomial_map(bindings)
    if mm is not None:
        return mm(f)
    values = {VAR_INDEX[k]: as_ratfun(v) for k, v in bindings.items()}

    def image(poly) -> RatFun:
        total = ZERO
        powers: dict[tuple[int, int], RatFun] = {}
        for e, c in poly.to_dict().items():
            term = RatFun.const(_frac(c))
            rest = list(e)
            for k, val in values.items():
                d = e[k]
                if d:
                    rest[k] = 0
                    pw = powers.get((k, d))
                    if pw is None:
                        pw = val ** d
                        powers[(k, d)] = pw
                    term = term * pw
            term = term * RatFun(_monomial(rest), reduced=True)
            total = total + term
        return total

    den = image(f.den)
    if den.is_zero():
        raise SpecializationSingular("denominator vanishes under substitution")
    num = image(f.re)
    if not f.im.is_zero():
        num = num + I * image(f.im)
    return num / den


# ---------------------------------------------------------------------------
# named constructors used throughout


def var(name: str) -> RatFun:
    return RatFun.var(name)


def vpow(n: int) -> RatFun:
    """v**n; q**a is vpow(4*a)."""
    return RatFun.monomial({"v": n})


def mono(coeff=1, **exps: int) -> RatFun:
    return RatFun.monomial(exps, coeff)


def ch(f: RatFun) -> RatFun:
    """f + 1/f."""
    return f + f.inverse()


def sh(f: RatFun) -> RatFun:
    """f - 1/f."""
    return f - f.inverse()


def laurent_in(f: RatFun, name: str) -> dict[int, RatFun]:
    """Expand ``f`` as a Laurent polynomial in one variable.

    The denominator must factor as (something free of ``name``) times a power
    of ``name``.  Returns ``{exponent: coefficient}``.
    """
    k = VAR_INDEX[name]
    dd = f.den.to_dict()
    # denominator must be a power of the variable times a polynomial free of it
    shift = min(e[k] for e in dd)
    if any(e[k] != shift for e in dd):
        raise ValueError(f"denominator depends on {name} non-monomially")
    base = {}
    for e, c in dd.items():
        ee = list(e)
        ee[k] = 0
        base[tuple(ee)] = c
    den_free = RatFun(_CTX.from_dict(base), reduced=True)
    groups: dict[int, list] = {}
    for part, unit in ((f.re, 0), (f.im, 1)):
        for e, c in part.to_dict().items():
            ee = list(e)
            d = ee[k]
            ee[k] = 0
            groups.setdefault(d - shift, [{}, {}])[unit][tuple(ee)] = c
    out = {}
    for d, (re, im) in groups.items():
        coef = RatFun(_CTX.from_dict(re), _CTX.from_dict(im), reduced=True) / den_free
        if not coef.is_zero():
            out[d] = coef
    return out


# ---------------------------------------------------------------------------
# serialization


def _exp_text(exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _terms_text(terms: Mapping[tuple[int, ...], GaussianRational]) -> str:
    if not terms:
        return "0"
    pieces = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mono_text = _exp_text(e)
        coeff = str(c)
        if c.im != 0 and c.re != 0:
            coeff = f"({coeff})"
        if not mono_text:
            pieces.append(coeff)
        elif c == GaussianRational(1):
            pieces.append(mono_text)
        elif c == GaussianRational(-1):
            pieces.append(f"-{mono_text}")
        else:
            pieces.append(f"{coeff}*{mono_text}")
    return " + ".join(pieces).replace("+ -", "- ")


def _poly_terms(re, im) -> dict[tuple[int, ...], GaussianRational]:
    out: dict[tuple[int, ...], GaussianRational] = {}
    for e, c in re.to_dict().items():
        out[e] = GaussianRational(_frac(c))
    for e, c in im.to_dict().items():
        prev = out.get(e, GaussianRational())
        out[e] = GaussianRational(prev.re, _frac(c))
    return out


def to_text(f: RatFun) -> str:
    """Canonical text: a Laurent polynomial, or ``(num)/(den)``."""
    if f.is_laurent():
        return _terms_text(f.laurent_terms())
    num = _terms_text(_poly_terms(f.re, f.im))
    den = _terms_text(_poly_terms(f.den, _ZERO_POLY))
    return f"({num})/({den})"


def _terms_json(terms: Mapping[tuple[int, ...], GaussianRational]) -> dict:
    rows = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        rows.append({
            "coeff": [str(c.re), str(c.im)],
            "exps": {n: int(a) for n, a in zip(VARIABLES, e) if a},
        })
    return {"terms": rows}


def to_json(f: RatFun) -> dict:
    if f.is_laurent():
        return _terms_json(f.laurent_terms())
    return {
        "num": _terms_json(_poly_terms(f.re, f.im)),
        "den": _terms_json(_poly_terms(f.den, _ZERO_POLY)),
    }


def from_json(data: Mapping) -> RatFun:
    def load(block) -> RatFun:
        terms = {}
        for row in block["terms"]:
            e = tuple(int(row["exps"].get(n, 0)) for n in VARIABLES)
            re, im = row["coeff"]
            terms[e] = GaussianRational(Fraction(re), Fraction(im))
        return RatFun.from_terms(terms)

    if "terms" in data:
        return load(data)
    return load(data["num"]) / load(data["den"])
