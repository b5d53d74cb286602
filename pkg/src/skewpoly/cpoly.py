"""Commutative univariate polynomials over an effective field.

Coefficients are stored little-endian with no trailing zeros; the zero
polynomial is the empty tuple and deg 0 = -inf.  The field handle must
provide p, order, zero/one, add/sub/neg/mul/inv/pow_ plus `key` for
canonical sorting; GF handles additionally expose vectorized kernels
which the hot paths use.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import FieldError

NEG_INF = float("-inf")


# ---------------------------------------------------------------------------
# tuple kernels

def pk_trim(field, c):
    c = list(c)
    while c and c[-1] == field.zero:
        c.pop()
    return tuple(c)


def pk_add(field, a, b):
    if field.vectorized:
        n = max(len(a), len(b))
        u = np.zeros(n, dtype=np.int64)
        v = np.zeros(n, dtype=np.int64)
        u[:len(a)] = a
        v[:len(b)] = b
        return pk_trim(field, field.vadd(u, v).tolist())
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return pk_trim(field, out)


def pk_neg(field, a):
    if field.p == 2:
        return a
    if field.vectorized:
        return tuple(field.vneg(np.asarray(a, dtype=np.int64)).tolist())
    return tuple(field.neg(c) for c in a)


def pk_sub(field, a, b):
    return pk_add(field, a, pk_neg(field, b))


def pk_scale(field, c, a):
    if c == field.zero:
        return ()
    if c == field.one:
        return tuple(a)
    if field.vectorized:
        return tuple(field.vscale(c, np.asarray(a, dtype=np.int64)).tolist())
    return tuple(field.mul(c, x) for x in a)


def pk_mul(field, a, b):
    if not a or not b:
        return ()
    if field.vectorized:
        if len(a) > len(b):
            a, b = b, a
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        bv = np.asarray(b, dtype=np.int64)
        for i, c in enumerate(a):
            if c:
                out[i:i + len(b)] = field.vadd(out[i:i + len(b)],
                                               field.vscale(c, bv))
        return pk_trim(field, out.tolist())
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai != field.zero:
            for j, bj in enumerate(b):
                out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return pk_trim(field, out)


def pk_divmod(field, a, b):
    b = pk_trim(field, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = pk_trim(field, a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv_lc = field.inv(b[-1])
    if field.vectorized:
        r = np.asarray(a, dtype=np.int64).copy()
        bv = np.asarray(b, dtype=np.int64)
        q = np.zeros(len(a) - db, dtype=np.int64)
        top = len(r) - 1
        while top >= db:
            if r[top]:
                c = field.mul(int(r[top]), inv_lc)
                q[top - db] = c
                r[top - db:top + 1] = field.vsub(r[top - db:top + 1],
                                                 field.vscale(c, bv))
            top -= 1
        return pk_trim(field, q.tolist()), pk_trim(field, r.tolist())
    r = list(a)
    q = [field.zero] * (len(a) - db)
    top = len(r) - 1
    while top >= db:
        if r[top] != field.zero:
            c = field.mul(r[top], inv_lc)
            q[top - db] = c
            for j, bj in enumerate(b):
                r[top - db + j] = field.sub(r[top - db + j], field.mul(c, bj))
        top -= 1
    return pk_trim(field, q), pk_trim(field, r)


def pk_mod(field, a, b):
    return pk_divmod(field, a, b)[1]


def pk_monic(field, a):
    a = pk_trim(field, a)
    if not a or a[-1] == field.one:
        return a
    return pk_scale(field, field.inv(a[-1]), a)


def pk_gcd(field, a, b):
    a, b = pk_trim(field, a), pk_trim(field, b)
    if field.vectorized:
        u = np.asarray(a, dtype=np.int64).copy()
        v = np.asarray(b, dtype=np.int64).copy()
        while len(v):
            dv = len(v) - 1
            inv = field.inv(int(v[-1]))
            vl = v[:-1]
            top = len(u) - 1
            while top >= dv:
                if u[top]:
                    lam = field.mul(int(u[top]), inv)
                    if dv:
                        u[top - dv:top] = field.vsub(u[top - dv:top],
                                                     field.vscale(lam, vl))
                top -= 1
            n = min(dv, len(u))
            while n and not u[n - 1]:
                n -= 1
            u, v = v, u[:n]
        if len(u) and u[-1] != field.one:
            u = field.vscale(field.inv(int(u[-1])), u)
        return tuple(int(c) for c in u)
    zero = field.zero
    u, v = list(a), list(b)
    while v:
        dv = len(v) - 1
        inv = field.inv(v[-1])
        for top in range(len(u) - 1, dv - 1, -1):
            c = u[top]
            if c != zero:
                lam = field.mul(c, inv)
                for j in range(dv):
                    u[top - dv + j] = field.sub(u[top - dv + j],
                                                field.mul(lam, v[j]))
                u[top] = zero
        n = min(dv, len(u))
        while n and u[n - 1] == zero:
            n -= 1
        u, v = v, u[:n]
    return pk_monic(field, tuple(u))


def pk_half_extgcd(field, a, b):
    """(s, g) with g = gcd(a, b) monic and s*a = g mod b."""
    s0, s1 = (field.one,), ()
    while b:
        q, r = pk_divmod(field, a, b)
        a, b = b, r
        s0, s1 = s1, pk_sub(field, s0, pk_mul(field, q, s1))
    if a:
        c = field.inv(a[-1])
        return pk_scale(field, c, s0), pk_scale(field, c, a)
    return s0, a


def pk_eval(field, a, x):
    out = field.zero
    for c in reversed(a):
        out = field.add(field.mul(out, x), c)
    return out


def pk_pth_power(field, a):
    """a(x)**p via the Frobenius: exponents times p, coefficients to the p."""
    p = field.p
    if not a:
        return ()
    out = [field.zero] * (p * (len(a) - 1) + 1)
    for i, c in enumerate(a):
        if c != field.zero:
            out[p * i] = field.pow_(c, p)
    return tuple(out)


# ---------------------------------------------------------------------------

class ComPoly:
    """Dense commutative polynomial; immutable, hashable, canonical."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs=()):
        self.field = field
        self.c = pk_trim(field, coeffs)

    @property
    def deg(self):
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def lc(self):
        return self.c[-1] if self.c else self.field.zero

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == (self.field.one,)

    def is_monic(self):
        return bool(self.c) and self.c[-1] == self.field.one

    def _new(self, coeffs):
        return ComPoly(self.field, coeffs)

    def __add__(self, other):
        return self._new(pk_add(self.field, self.c, other.c))

    def __sub__(self, other):
        return self._new(pk_sub(self.field, self.c, other.c))

    def __neg__(self):
        return self._new(pk_neg(self.field, self.c))

    def __mul__(self, other):
        return self._new(pk_mul(self.field, self.c, other.c))

    def divmod(self, other):
        q, r = pk_divmod(self.field, self.c, other.c)
        return self._new(q), self._new(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        return self._new(pk_monic(self.field, self.c))

    def gcd(self, other):
        return self._new(pk_gcd(self.field, self.c, other.c))

    def scale(self, cst):
        return self._new(pk_scale(self.field, cst, self.c))

    def shift(self, k):
        if not self.c:
            return self
        return self._new((self.field.zero,) * k + self.c)

    def eval(self, x):
        return pk_eval(self.field, self.c, x)

    def deriv(self):
        f = self.field
        out = []
        for i in range(1, len(self.c)):
            s = f.zero
            ci = self.c[i]
            for _ in range(i % f.p):
                s = f.add(s, ci)
            out.append(s)
        return self._new(out)

    def coeff(self, i):
        return self.c[i] if i < len(self.c) else self.field.zero

    def key(self):
        f = self.field
        return (len(self.c), tuple(f.key(x) for x in self.c))

    def __eq__(self, other):
        return (isinstance(other, ComPoly) and self.field == other.field
                and self.c == other.c)

    def __hash__(self):
        return hash((id(self.field), self.c))

    def __repr__(self):
        return f"ComPoly({self.c!r})"


def x_poly(field):
    return ComPoly(field, (field.zero, field.one))


def one_poly(field):
    return ComPoly(field, (field.one,))


def const_poly(field, c):
    return ComPoly(field, (c,))


# ---------------------------------------------------------------------------
# modular exponentiation

def powmod(base: ComPoly, e: int, mod: ComPoly) -> ComPoly:
    field = base.field
    r = one_poly(field) % mod
    b = base % mod
    while e:
        if e & 1:
            r = (r * b) % mod
        e >>= 1
        if e:
            b = (b * b) % mod
    return r


def frob_powmod(h: ComPoly, times: int, mod: ComPoly) -> ComPoly:
    """h**(p**times) mod `mod`."""
    field = h.field
    for _ in range(times):
        h = ComPoly(field, pk_pth_power(field, h.c)) % mod
    return h


def q_powmod(h: ComPoly, mod: ComPoly) -> ComPoly:
    """h**q mod `mod` for q the field order."""
    field = h.field
    k = round(math_log(field.order, field.p))
    return frob_powmod(h, k, mod)


def math_log(q, p):
    k = 0
    while p ** k < q:
        k += 1
    assert p ** k == q
    return k


# ---------------------------------------------------------------------------
# factorization: squarefree / distinct-degree / equal-degree

def pth_root_poly(f: ComPoly) -> ComPoly:
    """Inverse of x -> x**p on polynomials whose derivative vanishes."""
    field = f.field
    p = field.p
    e = field.order // p
    out = []
    for i in range(0, len(f.c), p):
        out.append(field.pow_(f.c[i], e))
    return ComPoly(field, out)


def squarefree_decomposition(f: ComPoly) -> list[tuple[ComPoly, int]]:
    """Monic squarefree parts with multiplicities, product recovering f."""
    field = f.field
    f = f.monic()
    out = []
    n = 1
    while f.deg > 0:
        d = f.deriv()
        if not d.is_zero():
            g = f.gcd(d)
            h = f // g
            i = 1
            while not h.is_one():
                gg = h.gcd(g)
                part = h // gg
                if part.deg > 0:
                    out.append((part, i * n))
                h = gg
                g = g // gg
                i += 1
            if g.is_one():
                break
            f = g
        f = pth_root_poly(f)
        n *= field.p
    return out


def distinct_degree_decomposition(f: ComPoly) -> list[tuple[ComPoly, int]]:
    """Pairs (product of irreducibles of degree d, d) for monic squarefree f."""
    field = f.field
    k = math_log(field.order, field.p)
    out = []
    h = x_poly(field) % f
    i = 1
    fstar = f
    while fstar.deg >= 2 * i:
        h = frob_powmod(h, k, fstar)
        g = fstar.gcd(h - x_poly(field))
        if g.deg > 0:
            out.append((g, i))
            fstar = fstar // g
            h = h % fstar
        i += 1
    if fstar.deg > 0:
        out.append((fstar, fstar.deg))
    return out


def _edf_split_attempt(f, d, rng):
    field = f.field
    n = f.deg
    r = ComPoly(field, tuple(field.rand(rng) for _ in range(n)))
    if r.deg < 1:
        return None
    if field.p == 2:
        k = math_log(field.order, 2)
        t = ComPoly(field)
        cur = r % f
        for _ in range(k * d):
            t = t + cur
            cur = (cur * cur) % f
        g = f.gcd(t)
    else:
        w = powmod(r, (field.order ** d - 1) // 2, f)
        g = f.gcd(w - one_poly(field))
    if 0 < g.deg < f.deg:
        return g
    return None


def equal_degree_factorization(f: ComPoly, d: int, rng) -> list[ComPoly]:
    if f.deg == d:
        return [f.monic()]
    while True:
        g = _edf_split_attempt(f, d, rng)
        if g is not None:
            return (equal_degree_factorization(g, d, rng)
                    + equal_degree_factorization(f // g, d, rng))


def cpoly_factor(f: ComPoly, rng_seed=0) -> list[tuple[ComPoly, int]]:
    """Monic irreducible factors of f with multiplicities, canonically sorted.

    The order of the output depends only on f, not on the seed.
    """
    if f.is_zero():
        raise FieldError("cannot factor the zero polynomial")
    rng = random.Random(rng_seed)
    out = []
    for part, mult in squarefree_decomposition(f):
        for prod, d in distinct_degree_decomposition(part):
            for irr in equal_degree_factorization(prod, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: t[0].key())
    return out


def cpoly_is_irreducible(f: ComPoly) -> bool:
    """Deterministic Rabin irreducibility test."""
    n = f.deg
    if n is NEG_INF or n < 1:
        raise FieldError("irreducibility needs degree >= 1")
    if n == 1:
        return True
    field = f.field
    k = math_log(field.order, field.p)
    x = x_poly(field)
    from .ffield import prime_factors
    h = frob_powmod(x % f, k * n, f)
    if not (h - x % f).is_zero():
        return False
    for ell in prime_factors(n):
        h = frob_powmod(x % f, k * (n // ell), f)
        if f.gcd(h - x).deg != 0:
            return False
    return True


def roots_in_field(f: ComPoly, seed=0) -> list:
    """All roots of f lying in its coefficient field."""
    field = f.field
    x = x_poly(field)
    # roots are the linear part: gcd with x^q - x
    h = frob_powmod(x % f, math_log(field.order, field.p), f)
    lin = f.gcd(h - x)
    roots = []
    for g, _ in cpoly_factor(lin, rng_seed=seed):
        if g.deg == 1:
            roots.append(field.neg(g.c[0]))
    return roots
