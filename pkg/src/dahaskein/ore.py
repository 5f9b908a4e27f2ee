"""q-difference operators with an optional reflection, kept in normal form.

An operator is a finite sum of terms ``f * Dx^a Du^b Dd^c Dt^e * s^eps`` with
the rational coefficient ``f`` on the left.  Shifts act by ``D_z g(z) =
g(c_z z) D_z``; the reflection ``s`` inverts one designated variable and
anticommutes with that variable's shift.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    MonomialMap,
    RatFun,
    VAR_INDEX,
    NVARS,
    as_ratfun,
    substitute,
    to_text,
)

SHIFT_VARS = ("x", "x_u", "x_d", "t")
SHIFT_LABELS = ("Dx", "Du", "Dd", "Dt")

Key = tuple[int, int, int, int, int]


class OreAlgebra:
    """Shift constants (as powers of v) and the variable carrying ``s``.

    ``shifts`` maps each shift variable to the exponent ``k`` with
    ``D_z z = v**k z D_z``.
    """

    def __init__(self, shifts: Mapping[str, int] | None = None, involution: str | None = "x"):
        base = {"x": 4, "x_u": 2, "x_d": 2, "t": 2}
        if shifts:
            base.update(shifts)
        self.shifts = tuple(base[z] for z in SHIFT_VARS)
        self.involution = involution
        self.inv_slot = SHIFT_VARS.index(involution) if involution else None
        self._maps: dict[tuple, MonomialMap] = {}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OreAlgebra)
            and self.shifts == other.shifts
            and self.involution == other.involution
        )

    def __hash__(self) -> int:
        return hash((self.shifts, self.involution))

    def __repr__(self) -> str:
        return f"OreAlgebra(shifts={dict(zip(SHIFT_VARS, self.shifts))}, involution={self.involution!r})"

    def move_map(self, shift: Sequence[int], eps: int) -> MonomialMap:
        """Map g -> coefficient produced by moving ``D^shift s^eps`` past g."""
        key = (tuple(shift), eps)
        m = self._maps.get(key)
        if m is not None:
            return m
        images = {}
        for slot, (z, a) in enumerate(zip(SHIFT_VARS, shift)):
            k = VAR_INDEX[z]
            exps = [0] * NVARS
            inverted = eps and slot == self.inv_slot
            exps[k] = -1 if inverted else 1
            # g(1/(c^a z)) when reflected, g(c^a z) otherwise
            exps[VAR_INDEX["v"]] = (-1 if inverted else 1) * a * self.shifts[slot]
            if a or inverted:
                images[k] = (GaussianRational(1), tuple(exps))
        m = MonomialMap(images)
        self._maps[key] = m
        return m


DEFAULT = OreAlgebra()


class OreOperator:
    """Normal-form operator: ``{(a, b, c, e, eps): coefficient}``."""

    __slots__ = ("terms", "algebra")

    def __init__(self, terms: Mapping[Key, RatFun] | None = None, algebra: OreAlgebra = DEFAULT):
        self.algebra = algebra
        self.terms: dict[Key, RatFun] = {}
        if terms:
            for k, c in terms.items():
                c = as_ratfun(c)
                if not c.is_zero():
                    self.terms[tuple(k)] = c

    # constructors
    @classmethod
    def scalar(cls, f, algebra: OreAlgebra = DEFAULT) -> OreOperator:
        return cls({(0, 0, 0, 0, 0): as_ratfun(f)}, algebra)

    @classmethod
    def shift(cls, x: int = 0, u: int = 0, d: int = 0, t: int = 0, coeff=ONE,
              algebra: OreAlgebra = DEFAULT) -> OreOperator:
        return cls({(x, u, d, t, 0): as_ratfun(coeff)}, algebra)

    @classmethod
    def reflection(cls, algebra: OreAlgebra = DEFAULT) -> OreOperator:
        if algebra.involution is None:
            raise ValueError("algebra has no reflection")
        return cls({(0, 0, 0, 0, 1): ONE}, algebra)

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def _like(self, terms) -> OreOperator:
        out = OreOperator.__new__(OreOperator)
        out.algebra = self.algebra
        out.terms = terms
        return out

    def _check(self, other: OreOperator):
        if other.algebra != self.algebra:
            raise ValueError("operators from different algebras")

    def __add__(self, other) -> OreOperator:
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = s
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self) -> OreOperator:
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> OreOperator:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> OreOperator:
        return self._coerce(other) - self

    def _coerce(self, other) -> OreOperator:
        if isinstance(other, OreOperator):
            self._check(other)
            return other
        return OreOperator.scalar(other, self.algebra)

    def scale(self, f) -> OreOperator:
        """Left multiplication by a function."""
        f = as_ratfun(f)
        if f.is_zero():
            return self._like({})
        return self._like({k: f * c for k, c in self.terms.items()})

    def __mul__(self, other) -> OreOperator:
        if isinstance(other, OreOperator):
            return compose(self, other)
        return compose(self, OreOperator.scalar(other, self.algebra))

    def __rmul__(self, other) -> OreOperator:
        return self.scale(other)

    def __pow__(self, n: int) -> OreOperator:
        if n < 0:
            raise ValueError("negative powers of operators are not supported")
        result = OreOperator.scalar(ONE, self.algebra)
        base = self
        while n:
            if n & 1:
                result = compose(result, base)
            n >>= 1
            if n:
                base = compose(base, base)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, OreOperator):
            other = OreOperator.scalar(other, self.algebra)
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        raise TypeError("OreOperator is unhashable")

    def __call__(self, f) -> RatFun:
        return apply(self, f)

    def coefficient(self, x: int = 0, u: int = 0, d: int = 0, t: int = 0, eps: int = 0) -> RatFun:
        return self.terms.get((x, u, d, t, eps), ZERO)

    def shift_range(self, slot: str) -> tuple[int, int]:
        i = SHIFT_VARS.index(slot)
        vals = [k[i] for k in self.terms]
        return (min(vals), max(vals)) if vals else (0, 0)

    def map_coefficients(self, fn) -> OreOperator:
        terms = {}
        for k, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                terms[k] = c2
        return self._like(terms)

    def inverse_multiplication(self) -> OreOperator:
        """Inverse of a pure multiplication operator."""
        if set(self.terms) != {(0, 0, 0, 0, 0)}:
            raise ValueError("only multiplication operators can be inverted")
        return self._like({(0, 0, 0, 0, 0): self.terms[(0, 0, 0, 0, 0)].inverse()})

    def __repr__(self) -> str:
        return f"OreOperator({render(self)})"

    __str__ = lambda self: render(self)


def compose(A: OreOperator, B: OreOperator) -> OreOperator:
    """Normal form of ``A o B``."""
    A._check(B)
    alg = A.algebra
    inv = alg.inv_slot
    buckets: dict[Key, list[RatFun]] = {}
    for ka, f in A.terms.items():
        alpha, eps = ka[:4], ka[4]
        move = alg.move_map(alpha, eps)
        for kb, g in B.terms.items():
            beta = list(kb[:4])
            if eps and inv is not None:
                beta[inv] = -beta[inv]
            key = (
                alpha[0] + beta[0], alpha[1] + beta[1], alpha[2] + beta[2],
                alpha[3] + beta[3], eps ^ kb[4],
            )
            buckets.setdefault(key, []).append(f * move(g))
    terms = {}
    for key, items in buckets.items():
        s = _sum(items)
        if not s.is_zero():
            terms[key] = s
    return A._like(terms)


def _sum(items: list[RatFun]) -> RatFun:
    # pairwise summation keeps intermediate denominators small
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0] if items else ZERO


def compose_all(ops: Iterable[OreOperator]) -> OreOperator:
    ops = list(ops)
    out = ops[0]
    for op in ops[1:]:
        out = compose(out, op)
    return out


def apply(A: OreOperator, f) -> RatFun:
    """Image of a function under the operator."""
    f = as_ratfun(f)
    alg = A.algebra
    parts = [c * alg.move_map(k[:4], k[4])(f) for k, c in A.terms.items()]
    return _sum(parts) if parts else ZERO


def op_equal(A: OreOperator, B: OreOperator) -> bool:
    return (A - B).is_zero()


def op_poly(A: OreOperator, coeffs: Sequence) -> OreOperator:
    """``sum(coeffs[k] * A**k)`` by Horner's rule."""
    alg = A.algebra
    result = OreOperator.scalar(as_ratfun(coeffs[-1]), alg)
    for c in reversed(coeffs[:-1]):
        result = compose(result, A) + OreOperator.scalar(as_ratfun(c), alg)
    return result


def dt_coefficient(A: OreOperator, k: int) -> OreOperator:
    """The part of ``A`` multiplying ``Dt**k``, with ``Dt`` stripped."""
    return A._like({
        (a, b, c, 0, eps): coef for (a, b, c, e, eps), coef in A.terms.items() if e == k
    })


def symmetric_restriction(A: OreOperator) -> OreOperator:
    """Drop ``s`` (valid on inputs fixed by ``s`` for operators preserving them)."""
    terms: dict[Key, RatFun] = {}
    for (a, b, c, e, _), coef in A.terms.items():
        key = (a, b, c, e, 0)
        s = terms.get(key)
        s = coef if s is None else s + coef
        if s.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = s
    return A._like(terms)


def specialize(A: OreOperator, bindings: Mapping[str, object]) -> OreOperator:
    """Substitute into coefficients only (bindings must not touch shifted variables)."""
    return A.map_coefficients(lambda c: substitute(c, bindings))


def render(A: OreOperator) -> str:
    if not A.terms:
        return "0"
    pieces = []
    for key in sorted(A.terms):
        coef = A.terms[key]
        pieces.append(
            f"({to_text(coef)}) * "
            + " ".join(f"{lab}^{e}" for lab, e in zip(SHIFT_LABELS, key[:4]))
            + f" * s^{key[4]}"
        )
    return " + ".join(pieces)


def to_json(A: OreOperator) -> list[dict]:
    from .exact import to_json as rf_json

    rows = []
    for key in sorted(A.terms):
        rows.append({
            "shift": dict(zip(SHIFT_VARS, key[:4])),
            "s": key[4],
            "coeff": rf_json(A.terms[key]),
        })
    return rows
