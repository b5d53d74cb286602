"""The field K_f = K[z]/(fhat) for fhat monic irreducible over a finite K.

Small quotients (order <= 2^16 with a canonically-built K) are backed by
an isomorphic table-mode GF of degree deg(fhat) * [K : F_p]; elements are
then plain codes and all vectorized kernels apply.  Larger quotients fall
back to polynomial-basis tuples over K.  Both satisfy the field protocol,
so ComPoly machinery (including cpoly_factor) works over either.
"""

from __future__ import annotations

import numpy as np

from .cpoly import (ComPoly, cpoly_is_irreducible, pk_half_extgcd, pk_mul,
                    pk_trim, roots_in_field)
from .errors import FieldError
from .ffield import GF, TABLE_LIMIT, FpSolver, SubfieldMap


def _check_fhat(fhat: ComPoly):
    if not fhat.is_monic():
        raise FieldError("defining polynomial must be monic")
    if fhat.deg < 1:
        raise FieldError("defining polynomial must be nonconstant")


class QuotFieldGeneric:
    """Polynomial-basis quotient: elements are length-d tuples of K codes."""

    vectorized = False
    table_backed = False

    def __init__(self, k, fhat: ComPoly, check=True):
        _check_fhat(fhat)
        if check and not cpoly_is_irreducible(fhat):
            raise FieldError("defining polynomial is reducible")
        self.k = k
        self.fhat = fhat
        self.d = fhat.deg
        self.p = k.p
        self.order = k.order ** self.d
        self.zero = (k.zero,) * self.d
        self.one = (k.one,) + (k.zero,) * (self.d - 1)
        # z^(d+j) mod fhat for j = 0..d-2
        rows = []
        cur = list(self._pad(tuple(k.neg(c) for c in fhat.c[:-1])))
        rows.append(tuple(cur))
        for _ in range(self.d - 2):
            cur = [k.zero] + cur
            if len(cur) > self.d:
                top = cur.pop()
                cur = [k.add(c, k.mul(top, r)) for c, r in zip(cur, rows[0])]
            rows.append(tuple(cur))
        self._red = rows

    def _pad(self, c):
        return tuple(c) + (self.k.zero,) * (self.d - len(c))

    def add(self, x, y):
        k = self.k
        return tuple(k.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        k = self.k
        return tuple(k.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        k = self.k
        return tuple(k.neg(a) for a in x)

    def mul(self, x, y):
        k, d = self.k, self.d
        conv = pk_mul(k, x, y)
        out = list(conv[:d]) + [k.zero] * (d - min(len(conv), d))
        for j in range(d, len(conv)):
            cj = conv[j]
            if cj != k.zero:
                row = self._red[j - d]
                for i in range(d):
                    if row[i] != k.zero:
                        out[i] = k.add(out[i], k.mul(cj, row[i]))
        return tuple(out)

    def inv(self, x):
        if x == self.zero:
            raise ZeroDivisionError("field inverse of zero")
        s, g = pk_half_extgcd(self.k, pk_trim(self.k, x), self.fhat.c)
        assert len(g) == 1
        return self._pad(s)

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

    def rand(self, rng):
        return tuple(self.k.rand(rng) for _ in range(self.d))

    def key(self, x):
        return tuple(self.k.key(c) for c in x)

    def from_k(self, c):
        return (c,) + (self.k.zero,) * (self.d - 1)

    def from_cpoly(self, poly: ComPoly):
        return self._pad((poly % self.fhat).c)

    def to_cpoly(self, x) -> ComPoly:
        return ComPoly(self.k, x)

    def elem_str(self, x):
        from .literals import format_cpoly
        return format_cpoly(self.to_cpoly(x), "z")

    def __eq__(self, other):
        return (isinstance(other, QuotFieldGeneric) and self.k == other.k
                and self.fhat.c == other.fhat.c)

    def __hash__(self):
        return hash((self.k, self.fhat.c))

    def __repr__(self):
        return f"QuotField({self.k!r}, deg {self.d})"


class QuotFieldTable(GF):
    """Table-backed quotient: an isomorphic GF carrying conversion maps."""

    table_backed = True

    def __init__(self, k: GF, fhat: ComPoly, check=True):
        _check_fhat(fhat)
        if check and not cpoly_is_irreducible(fhat):
            raise FieldError("defining polynomial is reducible")
        d = fhat.deg
        super().__init__(k.p, k.m * d, gen_name="w")
        self.k = k
        self.fhat = fhat
        self.d = d
        smap = SubfieldMap(self, k.m % self.m)
        sk = smap.k
        if (sk.p, sk.m, sk.modulus) != (k.p, k.m, k.modulus):
            raise FieldError("base field is not canonically constructed")
        self._smap = smap
        big_fhat = ComPoly(self, tuple(smap.embed(c) for c in fhat.c))
        roots = roots_in_field(big_fhat, seed=0)
        if not roots:
            raise FieldError("no root of fhat in the table field")
        self._rho = min(roots)
        cols = []
        rho_pow = self.one
        for _ in range(d):
            for j in range(k.m):
                cols.append(self._digits(self.mul(smap.embed(k._pows[j]),
                                                  rho_pow)))
            rho_pow = self.mul(rho_pow, self._rho)
        self._to_coords = FpSolver(np.array(cols, dtype=np.int64).T, self.p)
        assert self._to_coords.rank == self.m

    def __eq__(self, other):
        return (isinstance(other, QuotFieldTable) and self.k == other.k
                and self.fhat.c == other.fhat.c)

    def __hash__(self):
        return hash((self.k, self.fhat.c))

    def from_k(self, c):
        return self._smap.embed(c)

    def from_cpoly(self, poly: ComPoly):
        poly = poly % self.fhat
        out = self.zero
        for c in reversed(poly.c):
            out = self.add(self.mul(out, self._rho), self._smap.embed(c))
        return out

    def to_cpoly(self, x) -> ComPoly:
        sol = self._to_coords.solve(self._digits(x))
        assert sol is not None
        k = self.k
        coeffs = []
        for ell in range(self.d):
            digs = list(sol[ell * k.m:(ell + 1) * k.m])
            coeffs.append(k._encode(digs))
        return ComPoly(k, coeffs)

    def elem_str(self, x):
        from .literals import format_cpoly
        return format_cpoly(self.to_cpoly(x), "z")


def kf_make(k: GF, fhat: ComPoly, check=True):
    """Working field K_f = K[z]/(fhat); table-backed when small enough."""
    _check_fhat(fhat)
    if check and not cpoly_is_irreducible(fhat):
        raise FieldError("defining polynomial is reducible")
    if k.mode == "table" and k.order ** fhat.deg <= TABLE_LIMIT:
        try:
            return QuotFieldTable(k, fhat, check=False)
        except FieldError:
            pass  # non-canonical base; use the generic representation
    return QuotFieldGeneric(k, fhat, check=False)


QuotField = QuotFieldGeneric
