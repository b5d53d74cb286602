"""Bounds of skew polynomials: the least-degree twosided left multiple.

Two computations are provided: one running over the module generators of
the ring over its center, one restarting over the algebra generators
only.  Every bound returned by either is post-verified: twosided, a left
multiple of the input, degree at most mu * deg(input).  An independent
linear-algebra oracle recovers the central part for cross-checking.
"""

from __future__ import annotations

from .cpoly import ComPoly
from .errors import FieldError, InternalInvariantError
from .linalg import make_dep_finder
from .skew import SkewPoly, sp_annihilator, sp_llcm

#: number of bounds computed and post-verified since import (test telemetry)
BOUND_CHECKS = {"count": 0}


def is_twosided(f: SkewPoly) -> bool:
    """Rf = fR, tested on the algebra generators of the ring."""
    if f.is_zero():
        raise ZeroDivisionError("twosidedness of the zero polynomial")
    for d in f.ring.algebra_generators():
        if not (f * d).lrem(f).is_zero():
            return False
    return True


def _post_verify(f: SkewPoly, fs: SkewPoly) -> SkewPoly:
    if fs.deg > f.ring.mu * f.deg:
        raise InternalInvariantError("bound degree exceeds mu * deg f")
    if not fs.lrem(f).is_zero():
        raise InternalInvariantError("bound is not a left multiple")
    if not is_twosided(fs):
        raise InternalInvariantError("bound is not twosided")
    BOUND_CHECKS["count"] += 1
    return fs


def bound_v1(f: SkewPoly, early_exit=True) -> SkewPoly:
    """Monic bound via annihilators of all module generators of R over C.

    early_exit=False disables the twosidedness shortcut and walks every
    generator (diagnostics only; the result is identical).
    """
    if f.is_zero():
        raise ZeroDivisionError("bound of the zero polynomial")
    fs = f.monic()
    for c in f.ring.module_generators():
        if early_exit and is_twosided(fs):
            break
        h = c.lrem(f) if c.deg >= f.deg else c
        if h.is_zero():
            continue
        fh = sp_annihilator(f, h)
        fs = sp_llcm(fh, fs)
    return _post_verify(f, fs)


def bound_v2(f: SkewPoly) -> SkewPoly:
    """Monic bound via the restart loop over the algebra generators only."""
    if f.is_zero():
        raise ZeroDivisionError("bound of the zero polynomial")
    ring = f.ring
    fs = f.monic()
    cap = ring.mu * f.deg
    gens = ring.algebra_generators()
    i = 0
    while i < len(gens):
        d = gens[i]
        if (fs * d).lrem(fs).is_zero():
            i += 1
            continue
        h = d.lrem(fs) if d.deg >= fs.deg else d
        assert not h.is_zero()
        fd = sp_annihilator(fs, h)
        fs = sp_llcm(fd, fs)
        if fs.deg > cap:
            raise InternalInvariantError("bound loop exceeded mu * deg f")
        i = 0
    return _post_verify(f, fs)


def bound(f: SkewPoly, algorithm="v2") -> SkewPoly:
    return bound_v1(f) if algorithm == "v1" else bound_v2(f)


# ---------------------------------------------------------------------------

class CentralForm:
    """A twosided polynomial decomposed as d * X^m * fhat(X^mu).

    After monic normalization d is 1; fhat is a monic polynomial in
    z = X^mu with coefficients in K, with nonzero constant term.
    """

    __slots__ = ("ring", "m", "d", "fhat")

    def __init__(self, ring, m, fhat: ComPoly, d=None):
        self.ring = ring
        self.m = m
        self.d = ring.c_one if d is None else d
        self.fhat = fhat

    def __eq__(self, other):
        return (isinstance(other, CentralForm) and self.ring == other.ring
                and self.m == other.m and self.d == other.d
                and self.fhat == other.fhat)

    def __hash__(self):
        return hash((self.m, self.fhat.c))

    def __repr__(self):
        return f"CentralForm(m={self.m}, fhat={self.fhat!r})"


def centralize(fstar: SkewPoly) -> CentralForm:
    """Decompose a monic twosided polynomial into its X-power and center part."""
    ring = fstar.ring
    if fstar.is_zero():
        raise ZeroDivisionError("centralize of zero")
    if not is_twosided(fstar):
        raise FieldError("centralize requires a twosided polynomial")
    fstar = fstar.monic()
    g, m = fstar.strip_x()
    mu = ring.mu
    kf = ring.k_field
    coeffs = []
    for idx in range(len(g.c)):
        c = g.coeff(idx)
        if idx % mu:
            if not ring.c_is_zero(c):
                raise InternalInvariantError(
                    "twosided polynomial has off-stride coefficients")
        elif ring.c_is_zero(c):
            coeffs.append(kf.zero)
        else:
            coeffs.append(ring.k_section(c))
    return CentralForm(ring, m, ComPoly(kf, coeffs))


def decentralize(cf: CentralForm) -> SkewPoly:
    """d * X^m * fhat(X^mu) as a skew polynomial."""
    ring = cf.ring
    if cf.fhat.is_zero():
        raise FieldError("central form with zero fhat")
    mu = ring.mu
    kf = cf.fhat.field
    raw = [ring.c_zero] * (cf.m + mu * (len(cf.fhat.c) - 1) + 1)
    for ell, ck in enumerate(cf.fhat.c):
        if ck != kf.zero:
            raw[cf.m + mu * ell] = ring.k_embed(ck)
    p = ring.poly(raw)
    if cf.d != ring.c_one:
        p = p.scale_left(cf.d)
    return p


def central_lift(ring, fhat: ComPoly) -> SkewPoly:
    """fhat(X^mu) for a center polynomial fhat in z."""
    return decentralize(CentralForm(ring, 0, fhat))


# ---------------------------------------------------------------------------
# independent minimality oracle

def oracle_min_central(f: SkewPoly) -> ComPoly:
    """Minimal monic m(z) in K[z] whose lift is left-divisible by f.

    Built purely from left remainders of X^(mu*i) and K-linear algebra,
    independently of the Euclidean bound algorithms.
    """
    ring = f.ring
    if f.is_zero():
        raise ZeroDivisionError("oracle on the zero polynomial")
    if ring.c_is_zero(f.constant_coefficient()):
        raise FieldError("oracle requires rgcd(f, X) = 1")
    kf = ring.k_field
    n = f.deg
    if n == 0:
        return ComPoly(kf, (kf.one,))
    mu = ring.mu
    width = mu * n
    finder = make_dep_finder(kf, width)
    cur = f.ring.one()
    for i in range(n + 1):
        vec = []
        for idx in range(n):
            vec.extend(ring.expand_coeff(cur.coeff(idx)))
        combo = finder.offer(vec, i)
        if combo is not None:
            return ComPoly(kf, combo)
        cur = cur.times_x(mu).lrem(f)
    raise InternalInvariantError("oracle found no dependency by degree n")
