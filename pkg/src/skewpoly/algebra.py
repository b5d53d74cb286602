"""The quotient A = R/R*fhat(X^mu) as a mu^2-dimensional algebra over K_f.

Elements are coordinate vectors over K_f in the basis a^i X^j
(0 <= i, j < mu, index i*mu + j); multiplication runs on precomputed
structure constants.  On top of that: von Neumann equation solving,
idempotent corners (1-e)A(1-e), and a Las Vegas zero-divisor search via
minimal polynomials of random elements.
"""

from __future__ import annotations

import random

from .bound import central_lift
from .cpoly import ComPoly, cpoly_factor, cpoly_is_irreducible
from .errors import FieldError, InternalInvariantError, TrialsExhaustedError
from .linalg import SpanSolver, make_dep_finder, solve_square
from .quotfield import kf_make
from .seeds import derive_seed
from .skew import SkewPoly, require_finite


class AlgElem:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def __add__(self, other):
        kf = self.algebra.kf
        return AlgElem(self.algebra, [kf.add(a, b) for a, b in
                                      zip(self.coords, other.coords)])

    def __sub__(self, other):
        kf = self.algebra.kf
        return AlgElem(self.algebra, [kf.sub(a, b) for a, b in
                                      zip(self.coords, other.coords)])

    def __mul__(self, other):
        return AlgElem(self.algebra,
                       self.algebra.mul_coords(self.coords, other.coords))

    def scale(self, c):
        kf = self.algebra.kf
        return AlgElem(self.algebra, [kf.mul(c, a) for a in self.coords])

    def is_zero(self):
        kf = self.algebra.kf
        return all(c == kf.zero for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, AlgElem) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"AlgElem({self.coords!r})"


class StructAlgebra:
    """A = R/Rf* for f* = fhat(X^mu), fhat monic irreducible over K."""

    def __init__(self, ring, fhat: ComPoly):
        require_finite(ring, "the quotient algebra")
        if not cpoly_is_irreducible(fhat):
            raise FieldError("fhat must be irreducible over K")
        self.ring = ring
        self.fhat = fhat
        self.kf = kf_make(ring.k_field, fhat, check=False)
        self.mu = ring.mu
        self.r = ring.r
        self.dim = self.r
        self.lift_mod = central_lift(ring, fhat)
        self._build_constants()
        one = [self.kf.zero] * self.r
        one[0] = self.kf.one
        self.one_coords = tuple(one)

    def _build_constants(self):
        ring, kf, mu = self.ring, self.kf, self.mu
        F = ring.field
        K = ring.k_field
        gen = ring._gen
        apows = [F.one]
        for _ in range(mu - 1):
            apows.append(F.mul(apows[-1], gen))
        z_of = {}

        def kz(kappa, shift):
            key = (kappa, shift)
            if key not in z_of:
                z_of[key] = kf.from_cpoly(
                    ComPoly(K, (K.zero,) * shift + (kappa,)))
            return z_of[key]

        table = [[None] * self.r for _ in range(self.r)]
        for i1 in range(mu):
            for j1 in range(mu):
                for i2 in range(mu):
                    w = F.mul(apows[i1], ring.sigma(apows[i2], j1))
                    kappas = ring.expand_coeff(w)
                    for j2 in range(mu):
                        jt = j1 + j2
                        j3, shift = jt % mu, jt // mu
                        ent = [(k * mu + j3, kz(kappa, shift))
                               for k, kappa in enumerate(kappas)
                               if kappa != K.zero]
                        table[i1 * mu + j1][i2 * mu + j2] = ent
        self._table = table

    # -- coordinate arithmetic ------------------------------------------------

    def mul_coords(self, x, y):
        kf = self.kf
        out = [kf.zero] * self.r
        table = self._table
        for i, xi in enumerate(x):
            if xi == kf.zero:
                continue
            row = table[i]
            for j, yj in enumerate(y):
                if yj == kf.zero:
                    continue
                c = kf.mul(xi, yj)
                for k, w in row[j]:
                    out[k] = kf.add(out[k], kf.mul(c, w))
        return tuple(out)

    def rand_coords(self, rng):
        return tuple(self.kf.rand(rng) for _ in range(self.r))

    def is_commutative(self):
        for i in range(self.r):
            ei = self.unit(i).coords
            for j in range(i + 1, self.r):
                ej = self.unit(j).coords
                if self.mul_coords(ei, ej) != self.mul_coords(ej, ei):
                    return False
        return True

    # -- elements --------------------------------------------------------------

    def elem(self, coords) -> AlgElem:
        return AlgElem(self, coords)

    def zero(self) -> AlgElem:
        return AlgElem(self, (self.kf.zero,) * self.r)

    def one(self) -> AlgElem:
        return AlgElem(self, self.one_coords)

    def unit(self, k) -> AlgElem:
        co = [self.kf.zero] * self.r
        co[k] = self.kf.one
        return AlgElem(self, co)

    # -- transfer to and from R -------------------------------------------------

    def project(self, f: SkewPoly) -> AlgElem:
        ring, mu, kf = self.ring, self.mu, self.kf
        K = ring.k_field
        g = f.lrem(self.lift_mod)
        d = self.fhat.deg
        zco = [[K.zero] * d for _ in range(self.r)]
        for idx in range(len(g.c)):
            c = g.coeff(idx)
            if ring.c_is_zero(c):
                continue
            j, ell = idx % mu, idx // mu
            for i, kappa in enumerate(ring.expand_coeff(c)):
                zco[i * mu + j][ell] = kappa
        return AlgElem(self, [kf.from_cpoly(ComPoly(K, row)) for row in zco])

    def lift(self, x: AlgElem) -> SkewPoly:
        ring, mu, kf = self.ring, self.mu, self.kf
        d = self.fhat.deg
        n = mu * d
        cols = [[ring.k_field.zero] * mu for _ in range(n)]
        for i in range(mu):
            for j in range(mu):
                poly = kf.to_cpoly(x.coords[i * mu + j])
                for ell, kappa in enumerate(poly.c):
                    cols[j + mu * ell][i] = kappa
        raw = [ring.contract_coeff(col) for col in cols]
        return ring.poly(raw)


def alg_build(ring, fhat: ComPoly) -> StructAlgebra:
    return StructAlgebra(ring, fhat)


def alg_project(f: SkewPoly, alg: StructAlgebra) -> AlgElem:
    return alg.project(f)


def alg_lift(x: AlgElem) -> SkewPoly:
    return x.algebra.lift(x)


def alg_mul(x: AlgElem, y: AlgElem) -> AlgElem:
    if x.algebra is not y.algebra:
        raise FieldError("operands from different algebras")
    return x * y


# ---------------------------------------------------------------------------

def solve_von_neumann(a: AlgElem) -> AlgElem:
    """Some y with a*y*a = a; free variables of the system set to zero."""
    alg = a.algebra
    kf = alg.kf
    if a.is_zero():
        return alg.zero()
    cols = []
    for j in range(alg.dim):
        uj = alg.unit(j).coords
        cols.append(alg.mul_coords(alg.mul_coords(a.coords, uj), a.coords))
    rows = [[cols[j][s] for j in range(alg.dim)] for s in range(alg.dim)]
    sol = solve_square(kf, rows, list(a.coords))
    if sol is None:
        raise InternalInvariantError("von Neumann system inconsistent")
    y = AlgElem(alg, sol)
    if (a * y * a).coords != a.coords:
        raise InternalInvariantError("von Neumann solution check failed")
    return y


class CornerAlgebra:
    """(1-e)A(1-e) on a selected basis, with conversion to and from A."""

    def __init__(self, parent: StructAlgebra, e: AlgElem):
        kf = parent.kf
        if not (e * e).coords == e.coords:
            raise FieldError("corner requires an idempotent")
        self.parent = parent
        self.kf = kf
        om = parent.one() - e
        self._span = SpanSolver(kf, parent.dim)
        basis = []
        for k in range(parent.dim):
            w = om * parent.unit(k) * om
            if self._span.add_vector(w.coords):
                basis.append(w.coords)
        self.basis = basis
        self.dim = len(basis)
        if self.dim:
            ident = self._span.express(om.coords)
            assert ident is not None
            self.one_coords = tuple(ident)
        else:
            self.one_coords = ()
        const = [[None] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                prod = parent.mul_coords(basis[i], basis[j])
                expr = self._span.express(prod)
                if expr is None:
                    raise InternalInvariantError("corner is not closed")
                const[i][j] = tuple(expr)
        self.const = const

    def mul_coords(self, x, y):
        kf = self.kf
        out = [kf.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == kf.zero:
                continue
            row = self.const[i]
            for j, yj in enumerate(y):
                if yj == kf.zero:
                    continue
                c = kf.mul(xi, yj)
                ck = row[j]
                for k in range(self.dim):
                    if ck[k] != kf.zero:
                        out[k] = kf.add(out[k], kf.mul(c, ck[k]))
        return tuple(out)

    def rand_coords(self, rng):
        return tuple(self.kf.rand(rng) for _ in range(self.dim))

    def embed(self, coords) -> AlgElem:
        """Corner coordinates -> element of the parent algebra."""
        kf = self.kf
        out = [kf.zero] * self.parent.dim
        for i, ci in enumerate(coords):
            if ci == kf.zero:
                continue
            for k, b in enumerate(self.basis[i]):
                if b != kf.zero:
                    out[k] = kf.add(out[k], kf.mul(ci, b))
        return AlgElem(self.parent, out)

    def retract(self, x: AlgElem):
        """Parent coordinates -> corner coordinates (None if outside)."""
        expr = self._span.express(list(x.coords))
        return tuple(expr) if expr is not None else None

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.const[i][j] != self.const[j][i]:
                    return False
        return True


def corner(e: AlgElem) -> CornerAlgebra:
    return CornerAlgebra(e.algebra, e)


# ---------------------------------------------------------------------------
# Las Vegas zero-divisor search

def _minpoly_coords(alg, x) -> ComPoly:
    kf = alg.kf
    finder = make_dep_finder(kf, alg.dim)
    cur = alg.one_coords
    i = 0
    while True:
        combo = finder.offer(list(cur), i)
        if combo is not None:
            return ComPoly(kf, combo)
        cur = alg.mul_coords(cur, x)
        i += 1
        if i > alg.dim + 1:
            raise InternalInvariantError("minimal polynomial not found")


def _eval_in_alg(alg, poly: ComPoly, x):
    kf = alg.kf
    out = (kf.zero,) * alg.dim
    for c in reversed(poly.c):
        out = alg.mul_coords(out, x)
        if c != kf.zero:
            out = tuple(kf.add(o, kf.mul(c, e))
                        for o, e in zip(out, alg.one_coords))
    return out


def find_zero_divisor(alg, rng_seed=0, max_trials=200):
    """A pair (zeta, eta) of nonzero coords with zeta*eta = 0, or None.

    None certifies the algebra is a division algebra (by Wedderburn a
    field): it is returned only when the algebra is commutative and some
    sampled element has an irreducible minimal polynomial of full degree.
    Raises TrialsExhaustedError when the trial budget runs out.
    """
    kf = alg.kf
    if alg.dim == 0 or alg.dim == 1:
        return None
    commutative = alg.is_commutative()
    rng = random.Random(rng_seed)
    zero = (kf.zero,) * alg.dim
    for trial in range(max_trials):
        x = alg.rand_coords(rng)
        if x == zero:
            continue
        m = _minpoly_coords(alg, x)
        if m.deg < 1:
            continue
        if cpoly_is_irreducible(m):
            if commutative and m.deg == alg.dim:
                return None  # kf[x] is the whole algebra, hence a field
            continue
        m1 = cpoly_factor(m, derive_seed(rng_seed, "edf", trial))[0][0]
        m2 = m // m1
        zeta = _eval_in_alg(alg, m1, x)
        eta = _eval_in_alg(alg, m2, x)
        if zeta == zero or eta == zero:
            raise InternalInvariantError("degenerate zero-divisor split")
        if alg.mul_coords(zeta, eta) != zero:
            raise InternalInvariantError("zero-divisor product check failed")
        return zeta, eta
    raise TrialsExhaustedError(
        f"no zero divisor found in {max_trials} trials; retry with a new seed")
