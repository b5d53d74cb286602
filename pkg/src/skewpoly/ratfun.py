"""The coefficient field D = F_q(t) with automorphisms sigma(t) = c*t.

Fractions are kept canonical at all times: monic denominator and
gcd(num, den) = 1, with zero represented as 0/1.  Numerators and
denominators are little-endian F_q coefficient tuples driven by the
fast GF kernels.
"""

from __future__ import annotations

from .cpoly import pk_add, pk_divmod, pk_gcd, pk_mul, pk_neg, \
    pk_scale, pk_trim
from .errors import FieldError
from .ffield import GF


class RatFun:
    """One canonical fraction num/den over F_q[t]."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (isinstance(other, RatFun) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"


class RatFunField:
    """Field handle for F_q(t) following the scalar field protocol."""

    vectorized = False
    order = None  # infinite

    def __init__(self, base: GF, var="t"):
        self.base = base
        self.var = var
        self.p = base.p
        self.zero = RatFun((), (base.one,))
        self.one = RatFun((base.one,), (base.one,))

    def make(self, num, den=None) -> RatFun:
        """Canonical fraction from raw coefficient tuples."""
        k = self.base
        num = pk_trim(k, num)
        den = pk_trim(k, den if den is not None else (k.one,))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = pk_gcd(k, num, den)
        if len(g) > 1:
            num = pk_divmod(k, num, g)[0]
            den = pk_divmod(k, den, g)[0]
        lc = den[-1]
        if lc != k.one:
            c = k.inv(lc)
            num = pk_scale(k, c, num)
            den = pk_scale(k, c, den)
        return RatFun(num, den)

    def from_base(self, c) -> RatFun:
        return RatFun((c,), (self.base.one,)) if c != self.base.zero \
            else self.zero

    def from_int(self, n):
        return self.from_base(n % self.p)

    # -- arithmetic ----------------------------------------------------------

    def add(self, x, y):
        k = self.base
        num = pk_add(k, pk_mul(k, x.num, y.den), pk_mul(k, y.num, x.den))
        return self.make(num, pk_mul(k, x.den, y.den))

    def neg(self, x):
        return RatFun(pk_neg(self.base, x.num), x.den)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        k = self.base
        return self.make(pk_mul(k, x.num, y.num), pk_mul(k, x.den, y.den))

    def inv(self, x):
        if not x.num:
            raise ZeroDivisionError("field inverse of zero")
        return self.make(x.den, x.num)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow_(self, x, e):
        if e < 0:
            return self.pow_(self.inv(x), -e)
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def is_zero(self, x):
        return not x.num

    def key(self, x):
        return (x.num, x.den)

    def t_elem(self) -> RatFun:
        k = self.base
        return RatFun((k.zero, k.one), (k.one,))

    def size(self, x) -> int:
        """max(deg num, deg den); growth diagnostic only."""
        return max(len(x.num) - 1, len(x.den) - 1)

    def __eq__(self, other):
        return (isinstance(other, RatFunField) and self.base == other.base
                and self.var == other.var)

    def __hash__(self):
        return hash((self.base, self.var))

    def __repr__(self):
        return f"RatFunField({self.base!r}, {self.var})"


def rf_arith(field: RatFunField, op: str, x: RatFun, y=None) -> RatFun:
    if op == "add":
        return field.add(x, y)
    if op == "sub":
        return field.sub(x, y)
    if op == "mul":
        return field.mul(x, y)
    if op == "div":
        return field.div(x, y)
    if op == "inv":
        return field.inv(x)
    if op == "pow":
        return field.pow_(x, y)
    raise FieldError(f"unknown operation {op!r}")


class RatSigma:
    """The automorphism t -> c*t of F_q(t), of order = ord(c) in F_q^*."""

    def __init__(self, field: RatFunField, c):
        if c == field.base.zero:
            raise FieldError("sigma scale factor must be nonzero")
        self.field = field
        self.c = c
        k = field.base
        mu = 1
        acc = c
        while acc != k.one:
            acc = k.mul(acc, c)
            mu += 1
        self.mu = mu

    def _subst(self, coeffs, ce):
        """p(t) -> p(ce * t)."""
        k = self.field.base
        out, scale = [], k.one
        for co in coeffs:
            out.append(k.mul(co, scale))
            scale = k.mul(scale, ce)
        return pk_trim(k, out)

    def apply(self, x: RatFun, e: int = 1) -> RatFun:
        e %= self.mu
        if e == 0:
            return x
        ce = self.field.base.pow_(self.c, e)
        return self.field.make(self._subst(x.num, ce),
                               self._subst(x.den, ce))

    def is_invariant(self, x: RatFun) -> bool:
        return self.apply(x, 1) == x


def rf_sigma_pow(sigma: RatSigma, x: RatFun, e: int) -> RatFun:
    return sigma.apply(x, e)
