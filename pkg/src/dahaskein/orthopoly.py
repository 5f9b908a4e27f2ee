"""q-Pochhammer symbols, Chebyshev polynomials and q-orthogonal families."""

from __future__ import annotations

from functools import lru_cache

from .exact import (
    ONE,
    ZERO,
    RatFun,
    SpecializationSingular,
    as_ratfun,
    laurent_in,
    var,
    vpow,
)

Q = vpow(4)
Q_HALF = vpow(2)


def q_pochhammer(a, q, n: int) -> RatFun:
    """(a; q)_n, with (a; q)_{-n} = 1 / (a q^{-n}; q)_n."""
    a, q = as_ratfun(a), as_ratfun(q)
    if n >= 0:
        out = ONE
        p = ONE
        for _ in range(n):
            out = out * (ONE - a * p)
            p = p * q
        return out
    out = ONE
    qinv = q.inverse()
    p = qinv
    for _ in range(-n):
        factor = ONE - a * p
        if factor.is_zero():
            raise SpecializationSingular("vanishing factor in negative Pochhammer")
        out = out * factor
        p = p * qinv
    return out.inverse()


def q_pochhammer_multi(args, q, n: int) -> RatFun:
    out = ONE
    for a in args:
        out = out * q_pochhammer(a, q, n)
    return out


# ---------------------------------------------------------------------------
# Chebyshev polynomials as integer coefficient lists (index = power of z)


@lru_cache(maxsize=None)
def _cheb(kind: str, n: int) -> tuple[int, ...]:
    if kind == "second":
        if n == -1:
            return (0,)
        if n < -1:
            return tuple(-c for c in _cheb("second", -n - 2))
        if n == 0:
            return (1,)
        if n == 1:
            return (0, 1)
    else:
        if n < 0:
            raise ValueError("first-kind Chebyshev index must be nonnegative")
        if n == 0:
            return (2,)
        if n == 1:
            return (0, 1)
    a, b = _cheb(kind, n - 1), _cheb(kind, n - 2)
    out = [0] * (n + 1)
    for k, c in enumerate(a):
        out[k + 1] += c
    for k, c in enumerate(b):
        out[k] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def chebyshev(kind: str, n: int) -> list[int]:
    """Coefficients of S_n (kind='second') or T_n (kind='first') in z.

    S_n(x + 1/x) = (x^{n+1} - x^{-n-1}) / (x - 1/x), extended by S_{-1} = 0 and
    S_{-n} = -S_{n-2}; T_n(x + 1/x) = x^n + x^{-n} with T_0 = 2.
    """
    if kind not in ("first", "second"):
        raise ValueError(kind)
    return list(_cheb(kind, n))


def chebyshev_shifted_negative(n: int) -> list[int]:
    """The alternative negative-index rule S_{-n} = -S_{n-1} (n >= 1)."""
    if n >= 0:
        return chebyshev("second", n)
    return [-c for c in chebyshev("second", -n - 1)]


def eval_poly(coeffs, z):
    """Evaluate an integer/RatFun coefficient list at a RatFun."""
    out = ZERO
    for c in reversed(list(coeffs)):
        out = out * z + as_ratfun(c)
    return out


def sym(name: str = "x") -> RatFun:
    z = var(name)
    return z + z.inverse()


def cheb_s(n: int, name: str = "x", rule=chebyshev) -> RatFun:
    """S_n(z + 1/z) as a Laurent polynomial in ``name``."""
    if rule is chebyshev:
        return eval_poly(chebyshev("second", n), sym(name))
    return eval_poly(rule(n), sym(name))


def s_basis_expand(f: RatFun, name: str = "x") -> dict[int, RatFun]:
    """Coordinates of a symmetric Laurent polynomial in {S_n(z + 1/z)}."""
    terms = laurent_in(f, name)
    coords: dict[int, RatFun] = {}
    while terms:
        top = max(terms)
        if top < 0 or terms.get(-top) != terms[top]:
            raise ValueError("not symmetric under inversion")
        c = terms[top]
        coords[top] = c
        # subtract c * S_top = c * (z^top + z^{top-2} + ... + z^-top)
        for e in range(-top, top + 1, 2):
            new = terms.get(e, ZERO) - c
            if new.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = new
    return coords


def power_sum_expand(f: RatFun, name: str = "x") -> dict[int, RatFun]:
    """Coordinates in {1} u {z^n + z^-n : n >= 1}."""
    terms = laurent_in(f, name)
    out = {}
    for e, c in terms.items():
        if e < 0:
            continue
        if e > 0 and terms.get(-e) != c:
            raise ValueError("not symmetric under inversion")
        out[e] = c
    return out


# ---------------------------------------------------------------------------
# A1 Macdonald (Rogers) polynomials


@lru_cache(maxsize=None)
def macdonald_a1(n: int, t: RatFun | None = None, q: RatFun | None = None, name: str = "x") -> RatFun:
    """Symmetric Macdonald polynomial M_n(x; q, t), monic in x^n + x^-n."""
    t = var("t") if t is None else t
    q = Q if q is None else q
    q2, t2 = q * q, t * t
    z = var(name)
    norm_den = q_pochhammer(t2, q2, n)
    if norm_den.is_zero():
        raise SpecializationSingular("(t^2; q^2)_n vanishes")
    total = ZERO
    for j in range(n + 1):
        k = n - j
        c = (q_pochhammer(t2, q2, j) * q_pochhammer(t2, q2, k)) / (
            q_pochhammer(q2, q2, j) * q_pochhammer(q2, q2, k))
        total = total + c * z ** (j - k)
    return q_pochhammer(q2, q2, n) / norm_den * total


def macdonald_eigenvalue(n: int, t: RatFun | None = None, q: RatFun | None = None) -> RatFun:
    t = var("t") if t is None else t
    q = Q if q is None else q
    return t * q ** n + (t * q ** n).inverse()


def three_term_coefficient(n: int, t: RatFun | None = None, q: RatFun | None = None) -> RatFun:
    """Coefficient of M_{n-1} in (x + 1/x) M_n."""
    t = var("t") if t is None else t
    q = Q if q is None else q
    q2, t2 = q * q, t * t
    return ((ONE - q2 ** n) * (ONE - q2 ** (n - 1) * t2 * t2)) / (
        (ONE - q2 ** (n - 1) * t2) * (ONE - q2 ** n * t2))


def second_three_term_residual(n: int) -> RatFun:
    """(q^-1/2 Y X + q^1/2 X^-1 Y^-1) M_n minus its expansion in M_{n+1}, M_{n-1}."""
    from .a1 import build_a1
    from .ore import apply

    t = var("t")
    g = build_a1("x", 4, t)
    m = macdonald_a1(n)
    lhs = apply(g.Y, apply(g.X, m)) / Q_HALF + Q_HALF * apply(g.Xinv, apply(g.Yinv, m))
    rhs = t * Q ** n * Q_HALF * macdonald_a1(n + 1)
    if n > 0:
        rhs = rhs + Q ** (-n) * Q_HALF / t * three_term_coefficient(n) * macdonald_a1(n - 1)
    return lhs - rhs


def gf_series(order: int, t: RatFun | None = None, q: RatFun | None = None):
    """Both sides of the generating function as coefficient lists in z.

    Left: sum_n M_n (t^2;q^2)_n/(q^2;q^2)_n z^n.  Right: the product
    (t^2 x z, t^2 z/x; q^2)_inf / (x z, z/x; q^2)_inf, each ratio expanded by
    the q-binomial theorem.
    """
    t = var("t") if t is None else t
    q = Q if q is None else q
    q2, t2 = q * q, t * t
    x = var("x")
    lhs = [macdonald_a1(n, t, q) * q_pochhammer(t2, q2, n) / q_pochhammer(q2, q2, n)
           for n in range(order + 1)]
    binom = [q_pochhammer(t2, q2, n) / q_pochhammer(q2, q2, n) for n in range(order + 1)]
    left = [binom[n] * x ** n for n in range(order + 1)]
    right = [binom[n] * x ** (-n) for n in range(order + 1)]
    rhs = []
    for n in range(order + 1):
        acc = ZERO
        for j in range(n + 1):
            acc = acc + left[j] * right[n - j]
        rhs.append(acc)
    return lhs, rhs


def gf_check(order: int) -> bool:
    lhs, rhs = gf_series(order)
    return all(a == b for a, b in zip(lhs, rhs))


# ---------------------------------------------------------------------------
# Askey-Wilson polynomials


def aw_parameters(t0=None, t1=None, t2=None, t3=None):
    """(a, b, c, d) in terms of the DAHA parameters t0..t3."""
    t0 = var("t0") if t0 is None else as_ratfun(t0)
    t1 = var("t1") if t1 is None else as_ratfun(t1)
    t2 = var("t2") if t2 is None else as_ratfun(t2)
    t3 = var("t3") if t3 is None else as_ratfun(t3)
    a = (t1 * t3).inverse()
    b = -t3 / t1
    c = Q_HALF / (t0 * t2)
    d = -Q_HALF * t2 / t0
    return a, b, c, d


def askey_wilson(m: int, params=None, name: str = "x") -> RatFun:
    """Monic Askey-Wilson polynomial P_m from the terminating 4phi3 series."""
    a, b, c, d = aw_parameters(*(params or ()))
    q = Q
    z = var(name)
    abcd = a * b * c * d
    total = ZERO
    for k in range(m + 1):
        num = (q_pochhammer(q ** (-m), q, k) * q_pochhammer(q ** (m - 1) * abcd, q, k)
               * q_pochhammer(a * z, q, k) * q_pochhammer(a / z, q, k))
        den = q_pochhammer_multi((a * b, a * c, a * d, q), q, k)
        total = total + num / den * q ** k
    pref = q_pochhammer_multi((a * b, a * c, a * d), q, m) / (
        a ** m * q_pochhammer(abcd * q ** (m - 1), q, m))
    return pref * total


def aw_eigenvalue(m: int, params=None) -> RatFun:
    t0 = var("t0") if not params else as_ratfun(params[0])
    t1 = var("t1") if not params else as_ratfun(params[1])
    s = t0 * t1
    return s.inverse() * Q ** m + s * Q ** (-m)


def aw_three_term(n: int, params=None) -> tuple[RatFun, RatFun]:
    """(B_n, C_n) with (x + 1/x) P_n = P_{n+1} + B_n P_n + C_n P_{n-1}."""
    a, b, c, d = aw_parameters(*(params or ()))
    q = Q
    abcd = a * b * c * d
    one = ONE
    pairs = [a * b, a * c, a * d, b * c, b * d, c * d]
    Cn = ((one - abcd * q ** (n - 2)) / ((one - abcd * q ** (2 * n - 3)) * (one - abcd * q ** (2 * n - 2)))
          * (one - q ** n) / ((one - abcd * q ** (2 * n - 2)) * (one - abcd * q ** (2 * n - 1))))
    for p in pairs:
        Cn = Cn * (one - p * q ** (n - 1))
    first = ((one - abcd * q ** (n - 1)) / ((one - abcd * q ** (2 * n - 1)) * (one - abcd * q ** (2 * n)))
             * a.inverse() * (one - a * b * q ** n) * (one - a * c * q ** n) * (one - a * d * q ** n))
    if Cn.is_zero():
        second = ZERO
    else:
        second = (Cn * (one - abcd * q ** (2 * n - 3)) * (one - abcd * q ** (2 * n - 2))
                  / (one - abcd * q ** (n - 2))
                  * a / ((one - a * b * q ** (n - 1)) * (one - a * c * q ** (n - 1)) * (one - a * d * q ** (n - 1))))
    Bn = a + a.inverse() - first - second
    return Bn, Cn


# ---------------------------------------------------------------------------
# nonsymmetric A1 Macdonald polynomials


class EigenDegenerate(ArithmeticError):
    """The eigenvector is not unique under the requested normalization."""


def _solve(rows: list[list[RatFun]], rhs: list[RatFun]) -> list[RatFun]:
    """Unique solution of a consistent (possibly overdetermined) linear system."""
    ncols = len(rows[0]) if rows else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows = len(a)
    for col in range(ncols):
        piv = next((r for r in range(col, nrows) if not a[r][col].is_zero()), None)
        if piv is None:
            raise EigenDegenerate("eigen-system has a free coefficient")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [c * inv for c in a[col]]
        for r in range(nrows):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    if any(not a[r][ncols].is_zero() for r in range(ncols, nrows)):
        raise EigenDegenerate("eigen-system is inconsistent")
    return [a[r][ncols] for r in range(ncols)]


def nonsym_macdonald_a1(m: int, t: RatFun | None = None, name: str = "x") -> RatFun:
    """E_m with Y E_m = t q^m E_m (m > 0) and Y E_{-m} = t^-1 q^-m E_{-m} (m >= 0).

    Solved on span{x^-|m|, ..., x^|m|} with E_m = x^m + lower for m > 0 and
    E_{-m} = x^-m + (no other x^-m term) for m >= 0.
    """
    from .a1 import build_a1
    from .ore import apply

    t = var("t") if t is None else as_ratfun(t)
    g = build_a1(name, 4, t)
    z = var(name)
    n = abs(m)
    if n == 0:
        return ONE
    lam = t * Q ** m if m > 0 else (t * Q ** n).inverse()
    exps = list(range(-n, n + 1))
    images = {k: laurent_in(apply(g.Y, z ** k), name) for k in exps}
    lead = m
    # for m > 0 the x^-m coefficient vanishes; for m < 0 the leading x^-n is fixed
    unknowns = [k for k in exps if k != lead and not (m > 0 and k == -n)]
    rows, rhs = [], []
    for e in exps:
        rows.append([images[k].get(e, ZERO) - (lam if k == e else ZERO) for k in unknowns])
        rhs.append(-(images[lead].get(e, ZERO) - (lam if lead == e else ZERO)))
    sol = _solve(rows, rhs)
    f = z ** lead
    for k, c in zip(unknowns, sol):
        f = f + c * z ** k
    return f
