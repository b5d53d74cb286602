"""Skew polynomial rings D[X;sigma] (zero derivation) and their arithmetic.

Left polynomials sum a_i X^i are dense coefficient vectors; the product
rule X*a = sigma(a)*X pushes coefficients right through precomputed
sigma-power application.  Over table-mode finite fields the kernels are
vectorized numpy; over rational function fields (and poly-mode fields)
they run on plain coefficient lists.

Canonical outputs of rgcd / llcm / annihilator are monic via left scaling.
"""

from __future__ import annotations

import numpy as np

from .errors import RingMismatchError, UnsupportedFieldError
from .ffield import GF, SubfieldMap
from .ratfun import RatFunField, RatSigma

NEG_INF = float("-inf")


class SkewRing:
    """Shared driver code; concrete rings fill in the coefficient protocol."""

    # -- raw polynomial kernels (generic list fallback) ----------------------

    def k_empty(self):
        return []

    def k_of(self, coeffs):
        return self.k_trim(list(coeffs))

    def k_trim(self, c):
        n = len(c)
        while n and self.c_is_zero(c[n - 1]):
            n -= 1
        return c[:n] if n < len(c) else c

    def k_add(self, u, v):
        if len(u) < len(v):
            u, v = v, u
        out = list(u)
        for i, c in enumerate(v):
            out[i] = self.c_add(out[i], c)
        return self.k_trim(out)

    def k_neg(self, u):
        return [self.c_neg(c) for c in u]

    def k_sub(self, u, v):
        return self.k_add(u, self.k_neg(v))

    def k_scale_left(self, a, u):
        if self.c_is_zero(a):
            return []
        return [self.c_mul(a, c) for c in u]

    def k_shift(self, u, k):
        if not len(u):
            return u
        return [self.c_zero] * k + list(u)

    def k_mul_const_right(self, u, c):
        # (sum u_i X^i) * c = sum u_i sigma^i(c) X^i
        prof = self._profile(c, len(u))
        return self.k_trim([self.c_mul(ui, pi) for ui, pi in zip(u, prof)])

    def _profile(self, c, n):
        base = [self.sigma(c, e) for e in range(self.mu)]
        return [base[i % self.mu] for i in range(n)]

    def _twists(self, v):
        out = [list(v)]
        for _ in range(self.mu - 1):
            out.append([self.sigma(c, 1) for c in out[-1]])
        return out

    def k_mul(self, u, v):
        if not len(u) or not len(v):
            return self.k_empty()
        out = [self.c_zero] * (len(u) + len(v) - 1)
        tw = self._twists(v)
        for i, a in enumerate(u):
            if not self.c_is_zero(a):
                tv = tw[i % self.mu]
                for j, b in enumerate(tv):
                    out[i + j] = self.c_add(out[i + j], self.c_mul(a, b))
        return self.k_trim(out)

    def k_divrem(self, f, g):
        g = self.k_trim(list(g))
        if not len(g):
            raise ZeroDivisionError("skew division by zero")
        dg = len(g) - 1
        if len(f) - 1 < dg:
            return self.k_empty(), list(f)
        r = list(f)
        q = [self.c_zero] * (len(f) - dg)
        binv = self.c_inv(g[-1])
        tw = self._twists(g)
        top = len(r) - 1
        while top >= dg:
            if not self.c_is_zero(r[top]):
                d = top - dg
                a = self.c_mul(r[top], self.sigma(binv, d))
                q[d] = a
                tv = tw[d % self.mu]
                for j, b in enumerate(tv):
                    r[d + j] = self.c_sub(r[d + j], self.c_mul(a, b))
            top -= 1
        return self.k_trim(q), self.k_trim(r[:dg])

    def k_eq(self, u, v):
        return len(u) == len(v) and all(a == b for a, b in zip(u, v))

    # -- SkewPoly constructors ----------------------------------------------

    def poly(self, coeffs) -> "SkewPoly":
        return SkewPoly(self, self.k_of(list(coeffs)))

    def zero(self):
        return SkewPoly(self, self.k_empty())

    def one(self):
        return SkewPoly(self, self.k_of([self.c_one]))

    def const(self, c):
        return SkewPoly(self, self.k_of([c]))

    def x(self, k=1):
        return SkewPoly(self, self.k_of([self.c_zero] * k + [self.c_one]))

    def random_poly(self, deg, rng, monic=True, nonzero_const=False):
        co = [self.c_rand(rng) for _ in range(deg + 1)]
        if monic:
            co[-1] = self.c_one
        else:
            while self.c_is_zero(co[-1]):
                co[-1] = self.c_rand(rng)
        if nonzero_const:
            while self.c_is_zero(co[0]):
                co[0] = self.c_rand(rng)
        return self.poly(co)


class FiniteSkewRing(SkewRing):
    """F_{p^m}[X; sigma] with sigma = Frobenius^s."""

    kind = "finite"

    def __init__(self, field: GF, s: int, k_gen_name="b"):
        self.field = field
        self.s = s % field.m
        self.submap = SubfieldMap(field, self.s, gen_name=k_gen_name)
        self.mu = self.submap.mu
        self.r = self.mu ** 2
        self.vectorized = field.vectorized
        self.c_zero = field.zero
        self.c_one = field.one
        self._gen = field.gen if field.m > 1 else field.one

    # coefficient protocol
    def c_add(self, a, b):
        return self.field.add(a, b)

    def c_sub(self, a, b):
        return self.field.sub(a, b)

    def c_neg(self, a):
        return self.field.neg(a)

    def c_mul(self, a, b):
        return self.field.mul(a, b)

    def c_inv(self, a):
        return self.field.inv(a)

    def c_is_zero(self, a):
        return a == 0

    def c_rand(self, rng):
        return self.field.rand(rng)

    def sigma(self, c, e):
        return self.field.frob(c, (self.s * e) % self.field.m)

    def algebra_generators(self):
        return [self.const(self._gen), self.x()]

    def module_generators(self):
        F = self.field
        out = []
        ai = F.one
        for _ in range(self.mu):
            for j in range(self.mu):
                out.append(self.poly([F.zero] * j + [ai]))
            ai = F.mul(ai, self._gen)
        return out

    # -- vectorized kernel overrides -----------------------------------------

    def k_empty(self):
        if self.vectorized:
            return np.zeros(0, dtype=np.int64)
        return []

    def k_of(self, coeffs):
        if self.vectorized:
            return self.k_trim(np.asarray(list(coeffs), dtype=np.int64))
        return super().k_of(coeffs)

    def k_add(self, u, v):
        if not self.vectorized:
            return super().k_add(u, v)
        F = self.field
        if len(u) < len(v):
            u, v = v, u
        out = u.copy()
        out[:len(v)] = F.vadd(out[:len(v)], v)
        return self.k_trim(out)

    def k_neg(self, u):
        if not self.vectorized:
            return super().k_neg(u)
        return self.field.vneg(u)

    def k_sub(self, u, v):
        if not self.vectorized:
            return super().k_sub(u, v)
        F = self.field
        n = max(len(u), len(v))
        out = np.zeros(n, dtype=np.int64)
        out[:len(u)] = u
        out[:len(v)] = F.vsub(out[:len(v)], v)
        return self.k_trim(out)

    def k_scale_left(self, a, u):
        if not self.vectorized:
            return super().k_scale_left(a, u)
        if a == 0:
            return self.k_empty()
        return self.field.vscale(a, u)

    def k_shift(self, u, k):
        if not self.vectorized:
            return super().k_shift(u, k)
        if not len(u) or k == 0:
            return u
        return np.concatenate([np.zeros(k, dtype=np.int64), u])

    def _vprofile(self, c, n):
        base = np.asarray([self.sigma(c, e) for e in range(self.mu)],
                          dtype=np.int64)
        reps = -(-n // self.mu)
        return np.tile(base, reps)[:n]

    def k_mul_const_right(self, u, c):
        if not self.vectorized:
            return super().k_mul_const_right(u, c)
        if c == 0 or not len(u):
            return self.k_empty()
        return self.k_trim(self.field.vmul(u, self._vprofile(c, len(u))))

    def _vtwists(self, v):
        F = self.field
        e1 = (self.s * 1) % F.m
        out = [v]
        for _ in range(self.mu - 1):
            out.append(F.vfrob(out[-1], e1))
        return out

    def k_mul(self, u, v):
        if not self.vectorized:
            return super().k_mul(u, v)
        if not len(u) or not len(v):
            return self.k_empty()
        F = self.field
        out = np.zeros(len(u) + len(v) - 1, dtype=np.int64)
        if len(u) <= len(v):
            tw = self._vtwists(v)
            for i in range(len(u)):
                a = int(u[i])
                if a:
                    seg = out[i:i + len(v)]
                    out[i:i + len(v)] = F.vadd(seg,
                                               F.vscale(a, tw[i % self.mu]))
        else:
            for j in range(len(v)):
                b = int(v[j])
                if b:
                    w = F.vmul(u, self._vprofile(b, len(u)))
                    out[j:j + len(u)] = F.vadd(out[j:j + len(u)], w)
        return self.k_trim(out)

    def k_divrem(self, f, g):
        if not self.vectorized:
            return super().k_divrem(f, g)
        F = self.field
        g = self.k_trim(g)
        if not len(g):
            raise ZeroDivisionError("skew division by zero")
        dg = len(g) - 1
        if len(f) - 1 < dg:
            return self.k_empty(), f.copy()
        r = f.copy()
        q = np.zeros(len(f) - dg, dtype=np.int64)
        binv = F.inv(int(g[-1]))
        tw = self._vtwists(g)
        top = len(r) - 1
        while top >= dg:
            if r[top]:
                d = top - dg
                a = F.mul(int(r[top]), self.sigma(binv, d))
                q[d] = a
                seg = r[d:top + 1]
                r[d:top + 1] = F.vsub(seg, F.vscale(a, tw[d % self.mu]))
            top -= 1
        return self.k_trim(q), self.k_trim(r[:dg])

    def k_eq(self, u, v):
        if self.vectorized:
            return len(u) == len(v) and bool(np.array_equal(u, v))
        return super().k_eq(u, v)

    def elem_str(self, c):
        return self.field.elem_str(c)

    # -- coefficient expansion over K = F^sigma -------------------------------

    @property
    def k_field(self):
        return self.submap.k

    def k_embed(self, ck):
        return self.submap.embed(ck)

    def k_section(self, c):
        return self.submap.section(c)

    def expand_coeff(self, c):
        return self.submap.expand(c)

    def contract_coeff(self, coords):
        return self.submap.contract(coords)

    def __eq__(self, other):
        return (isinstance(other, FiniteSkewRing)
                and self.field == other.field and self.s == other.s)

    def __hash__(self):
        return hash((self.field, self.s))

    def __repr__(self):
        return f"SkewRing({self.field!r}, frobenius^{self.s})"


class RatSkewRing(SkewRing):
    """F_q(t)[X; sigma] with sigma(t) = c*t."""

    kind = "ratfun"
    vectorized = False

    def __init__(self, rfield: RatFunField, c):
        self.rf = rfield
        self.sigma_map = RatSigma(rfield, c)
        self.mu = self.sigma_map.mu
        self.r = self.mu ** 2
        self.c_zero = rfield.zero
        self.c_one = rfield.one

    def c_add(self, a, b):
        return self.rf.add(a, b)

    def c_sub(self, a, b):
        return self.rf.sub(a, b)

    def c_neg(self, a):
        return self.rf.neg(a)

    def c_mul(self, a, b):
        return self.rf.mul(a, b)

    def c_inv(self, a):
        return self.rf.inv(a)

    def c_is_zero(self, a):
        return not a.num

    def c_rand(self, rng):
        # random fraction of small degree, denominator nonzero
        k = self.rf.base
        num = [k.rand(rng) for _ in range(rng.randrange(1, 3))]
        den = [k.rand(rng) for _ in range(rng.randrange(1, 3))]
        den[-1] = k.one
        return self.rf.make(tuple(num), tuple(den))

    def sigma(self, c, e):
        return self.sigma_map.apply(c, e)

    def algebra_generators(self):
        return [self.const(self.rf.t_elem()), self.x()]

    def module_generators(self):
        t = self.rf.t_elem()
        out = []
        ti = self.rf.one
        for _ in range(self.mu):
            for j in range(self.mu):
                out.append(self.poly([self.rf.zero] * j + [ti]))
            ti = self.rf.mul(ti, t)
        return out

    def elem_str(self, c):
        from .literals import format_ratfun
        return format_ratfun(self.rf, c)

    # -- coefficient expansion over K = F_q(t^mu) -----------------------------
    # K-elements are kept as sigma-invariant RatFun values.

    @property
    def k_field(self):
        return self.rf

    def k_embed(self, ck):
        return ck

    def k_section(self, c):
        from .errors import FieldError
        if not self.sigma_map.is_invariant(c):
            raise FieldError("coefficient not sigma-invariant")
        return c

    def expand_coeff(self, c):
        """Coordinates in the K-basis {1, t, ..., t^(mu-1)} of F_q(t)."""
        from .cpoly import pk_mul
        k = self.rf.base
        mu = self.mu
        den_prod = (k.one,)
        for e in range(1, mu):
            den_prod = pk_mul(k, den_prod,
                              self.sigma_map._subst(c.den,
                                                    k.pow_(self.sigma_map.c,
                                                           e)))
        num = pk_mul(k, c.num, den_prod)
        den = pk_mul(k, c.den, den_prod)
        out = []
        for j in range(mu):
            pj = [k.zero] * (len(num) + mu)
            for idx in range(j, len(num), mu):
                pj[idx - j] = num[idx]
            kappa = self.rf.make(tuple(pj), den)
            assert self.sigma_map.is_invariant(kappa)
            out.append(kappa)
        return tuple(out)

    def contract_coeff(self, coords):
        t = self.rf.t_elem()
        out, tp = self.rf.zero, self.rf.one
        for kappa in coords:
            out = self.rf.add(out, self.rf.mul(kappa, tp))
            tp = self.rf.mul(tp, t)
        return out

    def __eq__(self, other):
        return (isinstance(other, RatSkewRing) and self.rf == other.rf
                and self.sigma_map.c == other.sigma_map.c)

    def __hash__(self):
        return hash((self.rf, self.sigma_map.c))

    def __repr__(self):
        return f"SkewRing({self.rf!r}, t->c*t)"


def rat_skew_ring(q_field: GF, c) -> RatSkewRing:
    return RatSkewRing(RatFunField(q_field), c)


# ---------------------------------------------------------------------------

class SkewPoly:
    """Dense left polynomial over a SkewRing; treat as immutable."""

    __slots__ = ("ring", "c")

    def __init__(self, ring, raw):
        self.ring = ring
        self.c = raw

    @property
    def deg(self):
        return len(self.c) - 1 if len(self.c) else NEG_INF

    @property
    def lc(self):
        return self.c[-1] if len(self.c) else self.ring.c_zero

    def is_zero(self):
        return not len(self.c)

    def is_one(self):
        return len(self.c) == 1 and self.c[0] == self.ring.c_one

    def is_monic(self):
        return len(self.c) > 0 and self.c[-1] == self.ring.c_one

    def constant_coefficient(self):
        return self.c[0] if len(self.c) else self.ring.c_zero

    def coeff(self, i):
        return self.c[i] if i < len(self.c) else self.ring.c_zero

    @property
    def coeffs(self):
        if isinstance(self.c, np.ndarray):
            return tuple(int(v) for v in self.c)
        return tuple(self.c)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operands from different skew rings")

    def __add__(self, other):
        self._check(other)
        return SkewPoly(self.ring, self.ring.k_add(self.c, other.c))

    def __sub__(self, other):
        self._check(other)
        return SkewPoly(self.ring, self.ring.k_sub(self.c, other.c))

    def __neg__(self):
        return SkewPoly(self.ring, self.ring.k_neg(self.c))

    def __mul__(self, other):
        self._check(other)
        return SkewPoly(self.ring, self.ring.k_mul(self.c, other.c))

    def scale_left(self, a):
        return SkewPoly(self.ring, self.ring.k_scale_left(a, self.c))

    def mul_const_right(self, a):
        return SkewPoly(self.ring, self.ring.k_mul_const_right(self.c, a))

    def times_x(self, k=1):
        return SkewPoly(self.ring, self.ring.k_shift(self.c, k))

    def ldivrem(self, other):
        self._check(other)
        q, r = self.ring.k_divrem(self.c, other.c)
        return SkewPoly(self.ring, q), SkewPoly(self.ring, r)

    def lrem(self, other):
        return self.ldivrem(other)[1]

    def lquot(self, other):
        return self.ldivrem(other)[0]

    def monic(self):
        if self.is_zero():
            raise ZeroDivisionError("monic of the zero polynomial")
        if self.is_monic():
            return self
        return self.scale_left(self.ring.c_inv(self.lc))

    def strip_x(self):
        """(g, m) with self = g * X^m and the constant term of g nonzero."""
        if self.is_zero():
            raise ZeroDivisionError("strip_x of the zero polynomial")
        m = 0
        while self.ring.c_is_zero(self.c[m]):
            m += 1
        return SkewPoly(self.ring, self.c[m:]), m

    def __eq__(self, other):
        return (isinstance(other, SkewPoly) and self.ring == other.ring
                and self.ring.k_eq(self.c, other.c))

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        from .literals import format_skew_poly
        return format_skew_poly(self)


# ---------------------------------------------------------------------------
# extended left Euclid and friends

def _leea_raw(ring, f, g, need_u, need_v):
    r0, r1 = f, g
    one = ring.k_of([ring.c_one])
    u0, u1 = (one, ring.k_empty()) if need_u else (None, None)
    v0, v1 = (ring.k_empty(), one) if need_v else (None, None)
    while len(r1):
        c, r = ring.k_divrem(r0, r1)
        r0, r1 = r1, r
        if need_u:
            u0, u1 = u1, ring.k_sub(u0, ring.k_mul(c, u1))
        if need_v:
            v0, v1 = v1, ring.k_sub(v0, ring.k_mul(c, v1))
    return r0, u0, v0, u1, v1


def sp_leea(f: SkewPoly, g: SkewPoly):
    """(rgcd, u, v, u1, v1, llcm): rgcd = u f + v g and llcm = u1 f = -v1 g.

    rgcd and llcm are monic; the cofactors are scaled to match.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("extended Euclid needs nonzero inputs")
    ring = f.ring
    f._check(g)
    r0, u0, v0, u1, v1 = _leea_raw(ring, f.c, g.c, True, True)
    lam = ring.c_inv(r0[-1])
    rg = ring.k_scale_left(lam, r0)
    u = ring.k_scale_left(lam, u0)
    v = ring.k_scale_left(lam, v0)
    lraw = ring.k_mul(ring.k_neg(v1), g.c)
    lam2 = ring.c_inv(lraw[-1])
    llcm = ring.k_scale_left(lam2, lraw)
    u1 = ring.k_scale_left(lam2, u1)
    v1 = ring.k_scale_left(lam2, v1)
    mk = lambda raw: SkewPoly(ring, raw)  # noqa: E731
    return mk(rg), mk(u), mk(v), mk(u1), mk(v1), mk(llcm)


def sp_rgcd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    if f.is_zero() and g.is_zero():
        raise ZeroDivisionError("rgcd(0, 0) undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    ring = f.ring
    f._check(g)
    r0, *_ = _leea_raw(ring, f.c, g.c, False, False)
    return SkewPoly(ring, ring.k_scale_left(ring.c_inv(r0[-1]), r0))


def sp_llcm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("llcm needs nonzero inputs")
    ring = f.ring
    f._check(g)
    _, _, _, _, v1 = _leea_raw(ring, f.c, g.c, False, True)
    lraw = ring.k_mul(ring.k_neg(v1), g.c)
    return SkewPoly(ring, ring.k_scale_left(ring.c_inv(lraw[-1]), lraw))


def sp_annihilator(f: SkewPoly, h: SkewPoly) -> SkewPoly:
    """Monic generator of Ann(h + Rf); the identity when h is 0 mod f."""
    if f.is_zero() or h.is_zero():
        raise ZeroDivisionError("annihilator needs nonzero inputs")
    ring = f.ring
    f._check(h)
    if h.deg >= f.deg:
        h = h.lrem(f)
        if h.is_zero():
            return ring.one()
    _, _, _, _, v1 = _leea_raw(ring, f.c, h.c, False, True)
    return SkewPoly(ring, ring.k_scale_left(ring.c_inv(v1[-1]), v1))


# functional aliases mirroring the method API

def sp_add(f, g):
    return f + g


def sp_mul(f, g):
    return f * g


def sp_scale_left(c, f):
    return f.scale_left(c)


def sp_ldivrem(f, g):
    return f.ldivrem(g)


def sp_strip_x(f):
    return f.strip_x()


def sp_monic(f):
    return f.monic()


def require_finite(ring, what):
    if ring.kind != "finite":
        raise UnsupportedFieldError(
            f"{what} is only available over finite coefficient fields")
