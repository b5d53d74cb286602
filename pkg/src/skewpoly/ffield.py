"""Finite fields F_{p^m} and their Frobenius-invariant subfields.

Elements are integer codes packing the coordinate vector over F_p in the
polynomial basis {1, a, ..., a^{m-1}}: code = sum(c_i * p**i).  Fields of
order <= 2**16 run on full log/exp (Zech-style) tables and expose
vectorized numpy kernels; larger fields fall back to polynomial-basis
arithmetic on the same codes.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import FieldError

TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense F_p[x] helpers on little-endian int tuples (construction-time only)

def _pp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(out)


def _pp_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lc = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(_pp_trim(a)) - 1 >= db:
        a = _pp_trim(a)
        k = len(a) - 1 - db
        c = a[-1] * inv_lc % p
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
    return _pp_trim(q), _pp_trim(a)


def _pp_gcd(a, b, p):
    a, b = _pp_trim(a), _pp_trim(b)
    while b:
        a, b = b, _pp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _pp_powmod_frob(h, times, mod, p):
    """h**(p**times) mod `mod` by iterated freshman exponentiation."""
    for _ in range(times):
        out = [0] * (p * (len(h) - 1) + 1) if h else []
        for i, c in enumerate(h):
            out[p * i] = pow(c, p, p) if p > 2 else c
        h = _pp_divmod(out, mod, p)[1]
    return h


def _pp_is_irreducible(f, p):
    f = _pp_trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    h = _pp_powmod_frob(x, n, f, p)
    if _pp_trim([(a - b) % p for a, b in
                 zip(h + [0] * 2, x + [0] * len(h))]) != []:
        return False
    for ell in prime_factors(n):
        h = _pp_powmod_frob(x, n // ell, f, p)
        diff = [(a - b) % p for a, b in zip(h + [0] * 2, x + [0] * len(h))]
        if len(_pp_gcd(diff, f, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over F_p with the smallest packed code."""
    if m == 1:
        return (0, 1)
    for low in range(p ** m):
        digs, v = [], low
        for _ in range(m):
            digs.append(v % p)
            v //= p
        cand = digs + [1]
        if _pp_is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible of degree {m} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------

class GF:
    """A finite field F_{p^m} on integer element codes.

    mode "table": log/exp tables and vectorized numpy kernels (order <= 2^16).
    mode "poly": polynomial-basis arithmetic on digit vectors, any order.
    """

    def __init__(self, p, m=1, modulus=None, mode=None, gen_name="a"):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(_pp_trim(modulus)) - 1 != m or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if m > 1 and not _pp_is_irreducible(list(modulus), p):
                raise FieldError("modulus is reducible over F_p")
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = tuple(modulus)
        self.gen_name = gen_name
        if mode is None:
            mode = "table" if self.order <= TABLE_LIMIT else "poly"
        if mode == "table" and self.order > TABLE_LIMIT:
            raise FieldError("field too large for table mode")
        self.mode = mode
        self.vectorized = mode == "table"
        self.zero = 0
        self.one = 1
        self.gen = p if m > 1 else None  # code of a
        self._pows = tuple(p ** i for i in range(m))
        self._frob = {}
        if mode == "table":
            self._build_tables()

    # -- construction ------------------------------------------------------

    def _digits(self, x):
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return out

    def _encode(self, digs):
        return sum(int(d) % self.p * w for d, w in zip(digs, self._pows))

    def _raw_mul(self, x, y):
        prod = _pp_mul(self._digits(x), self._digits(y), self.p)
        _, rem = _pp_divmod(prod, list(self.modulus), self.p) \
            if len(prod) - 1 >= self.m else (None, prod)
        return self._encode(rem + [0] * self.m)

    def _build_tables(self):
        q, n = self.order, self.order - 1
        factors = prime_factors(n) if n > 1 else []
        g = 1  # correct for F_2; overwritten below otherwise
        for cand in range(2, q):
            if all(self._raw_pow(cand, n // ell) != 1 for ell in factors):
                g = cand
                break
        exp = np.zeros(n, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, g)
        if x != 1:
            raise FieldError("generator search failed")  # unreachable
        log[0] = 2 * n  # sentinel pushing any zero operand past the table
        big = np.zeros(4 * n + 1, dtype=np.int64)
        if n > 0:
            big[: 2 * n] = np.concatenate([exp, exp])
        else:
            big[0] = 1
        self._exp, self._log, self._exp2 = exp, log, big
        self._n = n
        self._neg_t = None
        if self.p > 2:
            digs = self._dig_table()
            self._neg_t = ((-digs) % self.p).astype(np.int64) @ \
                np.asarray(self._pows, dtype=np.int64)
            assert self._neg_t[0] == 0

    def _dig_table(self):
        if getattr(self, "_digt", None) is None:
            q = self.order
            digs = np.zeros((q, self.m), dtype=np.int64)
            codes = np.arange(q, dtype=np.int64)
            for i in range(self.m):
                digs[:, i] = codes % self.p
                codes = codes // self.p
            self._digt = digs
        return self._digt

    _digt = None

    def _raw_pow(self, x, e):
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, x)
            x = self._raw_mul(x, x)
            e >>= 1
        return r

    # -- scalar arithmetic -------------------------------------------------

    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        return self._encode([(a + b) % self.p for a, b in
                             zip(self._digits(x), self._digits(y))])

    def neg(self, x):
        if self.p == 2:
            return x
        if self.mode == "table":
            return int(self._neg_t[x])
        return self._encode([(-a) % self.p for a in self._digits(x)])

    def sub(self, x, y):
        if self.p == 2:
            return x ^ y
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if self.mode == "table":
            return int(self._exp[(self._log[x] + self._log[y]) % self._n]) \
                if self._n else 1
        return self._raw_mul(x, y)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("field inverse of zero")
        if self.mode == "table":
            return int(self._exp[(-self._log[x]) % self._n]) if self._n else 1
        # extended Euclid in F_p[x]
        a, b = list(self.modulus), self._digits(x)
        t0, t1 = [], [1]
        while _pp_trim(b):
            q, r = _pp_divmod(a, _pp_trim(b), self.p)
            a, b = _pp_trim(b), r
            prod = _pp_mul(q, t1, self.p)
            nt = [(u - v) % self.p for u, v in
                  zip(t0 + [0] * len(prod), prod + [0] * len(t0))]
            t0, t1 = t1, _pp_trim(nt)
        inv_lc = pow(a[-1], self.p - 2, self.p)
        t0 = [c * inv_lc % self.p for c in t0]
        return self._encode(t0 + [0] * self.m)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow_(self, x, e):
        if e < 0:
            return self.pow_(self.inv(x), -e)
        if e == 0:
            return self.one
        if x == 0:
            return 0
        if self.mode == "table" and self._n:
            return int(self._exp[(self._log[x] * e) % self._n])
        return self._raw_pow(x, e % (self.order - 1) or (self.order - 1))

    def frob(self, x, e):
        """x ** (p**e), the e-th Frobenius power."""
        e %= self.m
        if e == 0:
            return x
        if self.mode == "table":
            return int(self._frob_table(e)[x])
        return self.pow_(x, self.p ** e)

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.order)

    def rand(self, rng):
        return rng.randrange(self.order)

    def key(self, x):
        return x

    # -- vectorized kernels (table mode) ------------------------------------

    def varr(self, coeffs):
        return np.asarray(coeffs, dtype=np.int64)

    def vadd(self, u, v):
        if self.p == 2:
            return u ^ v
        digs = (self._dig_table()[u] + self._dig_table()[v]) % self.p
        return digs @ np.asarray(self._pows, dtype=np.int64)

    def vneg(self, u):
        if self.p == 2:
            return u
        return self._neg_t[u]

    def vsub(self, u, v):
        if self.p == 2:
            return u ^ v
        return self.vadd(u, self._neg_t[v])

    def vscale(self, c, u):
        if c == 0:
            return np.zeros(len(u), dtype=np.int64)
        return self._exp2[self._log[c] + self._log[u]]

    def vmul(self, u, v):
        return self._exp2[self._log[u] + self._log[v]]

    def _frob_table(self, e):
        e %= self.m
        t = self._frob.get(e)
        if t is None:
            if e == 0:
                t = np.arange(self.order, dtype=np.int64)
            elif e == 1:
                t = np.zeros(self.order, dtype=np.int64)
                if self._n:
                    t[self._exp] = self._exp[(self._log[self._exp] * self.p)
                                             % self._n]
                else:
                    t[1] = 1
            else:
                t = self._frob_table(1)[self._frob_table(e - 1)]
            self._frob[e] = t
        return t

    def vfrob(self, u, e):
        e %= self.m
        if e == 0:
            return u
        if self.mode == "table":
            return self._frob_table(e)[u]
        return np.asarray([self.frob(int(x), e) for x in u], dtype=np.int64)

    # -- misc ----------------------------------------------------------------

    def elem_str(self, x):
        if self.m == 1:
            return str(x % self.p)
        digs = self._digits(x)
        terms = []
        for i in range(self.m - 1, -1, -1):
            d = digs[i]
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                var = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
                terms.append(var if d == 1 else f"{d}*{var}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (isinstance(other, GF) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


def make_field(p, m=1, modulus=None, mode=None, gen_name="a") -> GF:
    return GF(p, m, modulus=modulus, mode=mode, gen_name=gen_name)


def frobenius_pow(field: GF, x: int, e: int) -> int:
    return field.frob(x, e)


def ff_arith(field: GF, op: str, x: int, y=None) -> int:
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


# ---------------------------------------------------------------------------
# F_p linear algebra (tiny dense systems for the basis-change maps)

class FpSolver:
    """Row-reduced snapshot of an n x k matrix over F_p with a solver."""

    def __init__(self, mat, p):
        a = np.array(mat, dtype=np.int64) % p
        n, k = a.shape
        t = np.eye(n, dtype=np.int64)
        piv = []
        row = 0
        for col in range(k):
            sel = None
            for r in range(row, n):
                if a[r, col] % p:
                    sel = r
                    break
            if sel is None:
                continue
            if sel != row:
                a[[row, sel]] = a[[sel, row]]
                t[[row, sel]] = t[[sel, row]]
            inv = pow(int(a[row, col]), p - 2, p)
            a[row] = a[row] * inv % p
            t[row] = t[row] * inv % p
            for r in range(n):
                if r != row and a[r, col] % p:
                    c = int(a[r, col])
                    a[r] = (a[r] - c * a[row]) % p
                    t[r] = (t[r] - c * t[row]) % p
            piv.append(col)
            row += 1
        self.p = p
        self.rref = a
        self.transform = t
        self.pivots = piv
        self.rank = row
        self.ncols = k

    def solve(self, b):
        """Solution x (free vars zero) of A x = b, or None if inconsistent."""
        y = self.transform @ (np.asarray(b, dtype=np.int64) % self.p) % self.p
        if np.any(y[self.rank:] % self.p):
            return None
        x = np.zeros(self.ncols, dtype=np.int64)
        for r, c in enumerate(self.pivots):
            x[c] = y[r]
        return x


# ---------------------------------------------------------------------------

class SubfieldMap:
    """The invariant subfield K = F^sigma for sigma = Frobenius^s.

    K is materialized as its own GF of degree gcd(m, s) over F_p together
    with the embedding K -> F, the partial inverse (section), and the
    expansion of F in the K-basis {1, a, ..., a^{mu-1}}.
    """

    def __init__(self, field: GF, s: int, gen_name="b"):
        m = field.m
        s = s % m
        self.field = field
        self.s = s
        if s == 0:
            self.k = field
            self.k_degree = m
            self.mu = 1
            self._identity = True
            return
        self._identity = False
        g = math.gcd(m, s)
        self.k_degree = g
        self.mu = m // g
        self.k = GF(field.p, g, gen_name=gen_name) if g > 1 else \
            GF(field.p, 1, gen_name=gen_name)
        self._beta = self._find_root(self.k.modulus)
        self._build_maps()
        kg = self.k.gen if self.k.m > 1 else self.k.one
        assert field.frob(self.embed(kg), s) == self.embed(kg)

    def _find_root(self, kmod):
        """Smallest root in F of K's defining polynomial."""
        from . import cpoly  # deferred; cpoly imports this module

        F = self.field
        if len(kmod) == 2:  # K = F_p: root of x - c
            return F.neg(F.from_int(kmod[0]))
        h = cpoly.ComPoly(F, tuple(F.from_int(c) for c in kmod))
        roots = cpoly.roots_in_field(h, seed=0)
        if not roots:
            raise FieldError("subfield modulus has no root")  # unreachable
        return min(roots)

    def _build_maps(self):
        F, K = self.field, self.k
        p, m, g, mu = F.p, F.m, self.k_degree, self.mu
        beta_pows = [F.one]
        for _ in range(g - 1):
            beta_pows.append(F.mul(beta_pows[-1], self._beta))
        emb = np.zeros((m, g), dtype=np.int64)
        for j, bp in enumerate(beta_pows):
            emb[:, j] = F._digits(bp)
        self._emb_mat = emb
        self._emb_solver = FpSolver(emb, p)
        if self._emb_solver.rank != g:
            raise FieldError("subfield embedding degenerate")  # unreachable
        # columns: digits of embed(basis_K[j]) * a^i, index = i*g + j
        a = F.gen if F.m > 1 else F.one
        apow = F.one
        cols = np.zeros((m, m), dtype=np.int64)
        for i in range(mu):
            for j in range(g):
                cols[:, i * g + j] = F._digits(F.mul(beta_pows[j], apow))
            apow = F.mul(apow, a)
        self._exp_solver = FpSolver(cols, p)
        if self._exp_solver.rank != m:
            raise FieldError("K-basis expansion degenerate")  # unreachable
        self._beta_pows = beta_pows

    # -- maps ----------------------------------------------------------------

    def embed(self, xk):
        if self._identity:
            return xk
        digs = self.k._digits(xk)
        out = self.field.zero
        for d, bp in zip(digs, self._beta_pows):
            if d:
                # d in 0..p-1 is its own code in F
                out = self.field.add(out, self.field.mul(d, bp))
        return out

    def section(self, x):
        """Inverse of embed; FieldError if x lies outside K."""
        if self._identity:
            return x
        sol = self._emb_solver.solve(self.field._digits(x))
        if sol is None:
            raise FieldError("element not in the invariant subfield")
        return self.k._encode(list(sol))

    def expand(self, x):
        """Coordinates of x in the K-basis {1, a, ..., a^{mu-1}} of F."""
        if self._identity:
            return (x,)
        sol = self._exp_solver.solve(self.field._digits(x))
        assert sol is not None
        g = self.k_degree
        return tuple(self.k._encode(list(sol[i * g:(i + 1) * g]))
                     for i in range(self.mu))

    def contract(self, coords):
        if self._identity:
            return coords[0]
        F = self.field
        a = F.gen if F.m > 1 else F.one
        out, apow = F.zero, F.one
        for c in coords:
            out = F.add(out, F.mul(self.embed(c), apow))
            apow = F.mul(apow, a)
        return out

    def is_invariant(self, x):
        return self.field.frob(x, self.s) == x


def invariant_subfield(field: GF, s: int, gen_name="b") -> SubfieldMap:
    return SubfieldMap(field, s, gen_name=gen_name)


def expand_in_k_basis(x, submap: SubfieldMap):
    return submap.expand(x)
