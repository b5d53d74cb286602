"""Irreducibility and complete factorization of skew polynomials.

Over finite fields: the bound-based irreducibility test, peeling of the
central factorization, and recursive splitting of same-bound pieces via
zero divisors of the quotient algebra.  Over rational function fields
only central splitting is exposed; full factorization raises.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .algebra import StructAlgebra, corner, find_zero_divisor, \
    solve_von_neumann
from .bound import CentralForm, bound_v1, bound_v2, central_lift, centralize
from .cpoly import ComPoly, cpoly_factor, cpoly_is_irreducible
from .errors import FieldError, InternalInvariantError, UnsupportedFieldError
from .seeds import derive_seed
from .skew import SkewPoly, sp_rgcd


class Factorization:
    """unit * product(factors) = the input, with per-factor bound forms."""

    __slots__ = ("unit", "factors", "certificates")

    def __init__(self, unit, factors, certificates):
        self.unit = unit
        self.factors = list(factors)
        self.certificates = list(certificates)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def product(self) -> SkewPoly:
        ring = self.factors[0].ring
        out = ring.const(self.unit)
        for p in self.factors:
            out = out * p
        return out

    def __repr__(self):
        return f"Factorization({len(self.factors)} factors)"


def is_irreducible(f: SkewPoly, algorithm="v2") -> bool:
    """Bound-based irreducibility test; finite coefficient fields only."""
    ring = f.ring
    if ring.kind != "finite":
        raise UnsupportedFieldError(
            "the degree criterion is specific to finite fields")
    if f.is_zero() or f.deg < 1:
        raise FieldError("irreducibility needs degree >= 1")
    if not ring.c_is_zero(f.constant_coefficient()):
        fs = bound_v1(f) if algorithm == "v1" else bound_v2(f)
        cf = centralize(fs)
        if not cpoly_is_irreducible(cf.fhat):
            return False
        return fs.deg == ring.mu * f.deg
    return f.deg == 1


def num_factors(f: SkewPoly) -> int:
    """Number of irreducible factors, when the central part is irreducible."""
    ring = f.ring
    if ring.c_is_zero(f.constant_coefficient()):
        raise FieldError("num_factors requires rgcd(f, X) = 1")
    fs = bound_v2(f)
    cf = centralize(fs)
    if cf.m or not cpoly_is_irreducible(cf.fhat):
        raise FieldError("num_factors requires an irreducible central bound")
    total = ring.mu * f.deg
    t, rem = divmod(total, fs.deg)
    if rem:
        raise InternalInvariantError("bound degree does not divide mu*deg f")
    return t


def split_by_central(f: SkewPoly, pi: ComPoly):
    """(g, p) with f = g*p, p = rgcd(f, lift(pi)) and bound(p) = lift(pi)."""
    ring = f.ring
    if ring.c_is_zero(f.constant_coefficient()):
        raise FieldError("split requires rgcd(f, X) = 1")
    if not pi.is_monic():
        raise FieldError("central factor must be monic")
    lift = central_lift(ring, pi)
    p = sp_rgcd(f, lift)
    g, r = f.ldivrem(p)
    if not r.is_zero():
        raise InternalInvariantError("central split failed to divide exactly")
    pb = centralize(bound_v2(p))
    if pb.m or not pb.fhat == pi:
        raise InternalInvariantError("split factor has unexpected bound")
    return g, p


def factorize_irred(g: SkewPoly, pi: ComPoly, rng_seed=0,
                    _alg_cache=None) -> list:
    """Factor a piece whose bound is the irreducible central pi."""
    ring = g.ring
    if g.is_zero():
        raise FieldError("cannot factor zero")
    if g.deg < 1:
        return []
    g = g.monic()
    if pi.deg == g.deg:  # deg lift(pi) = mu*deg g: irreducible by the bound
        return [g]
    if pi.deg > g.deg:
        raise InternalInvariantError("central part larger than the piece")
    if _alg_cache is None:
        _alg_cache = {}
    alg = _alg_cache.get(pi.c)
    if alg is None:
        alg = StructAlgebra(ring, pi)
        _alg_cache[pi.c] = alg
    a = alg.project(g)
    if a.is_zero():
        e = alg.zero()
    else:
        y = solve_von_neumann(a)
        e = y * a
    cor = corner(e)
    found = find_zero_divisor(cor, derive_seed(rng_seed, "zd", g.coeffs),
                              max_trials=200)
    if found is None:
        raise InternalInvariantError(
            "reducible piece produced a division corner")
    zeta, _eta = found
    zlift = alg.lift(cor.embed(zeta))
    p = sp_rgcd(g, zlift)
    if not (0 < p.deg < g.deg):
        raise InternalInvariantError("zero divisor gave no strict chain")
    h, r = g.ldivrem(p)
    if not r.is_zero():
        raise InternalInvariantError("rgcd does not divide the piece")
    left = factorize_irred(h, pi, derive_seed(rng_seed, "left"), _alg_cache)
    right = factorize_irred(p, pi, derive_seed(rng_seed, "right"), _alg_cache)
    return left + right


def factorize(f: SkewPoly, rng_seed=0, central_factors=None,
              jobs=1) -> Factorization:
    """Complete factorization into monic irreducibles times a unit.

    central_factors optionally fixes the central peeling sequence (a list
    of monic irreducible ComPoly in z whose product is fhat, multiplicity
    repeats included); otherwise the canonical cpoly_factor order is used.
    """
    ring = f.ring
    if ring.kind != "finite":
        raise UnsupportedFieldError(
            "automatic factorization needs a finite coefficient field")
    if f.is_zero() or f.deg < 1:
        raise FieldError("factorization needs degree >= 1")
    unit = f.lc
    g, m = f.monic().strip_x()
    factors = []
    certs = []
    if g.deg >= 1:
        fs = bound_v2(g)
        cf = centralize(fs)
        assert cf.m == 0
        if central_factors is None:
            pis = []
            for p, mult in cpoly_factor(cf.fhat, derive_seed(rng_seed, "c")):
                pis.extend([p] * mult)
        else:
            pis = list(central_factors)
            prod = ComPoly(cf.fhat.field, (cf.fhat.field.one,))
            for p in pis:
                if not p.is_monic():
                    raise FieldError("supplied central factors must be monic")
                prod = prod * p
            if prod != cf.fhat:
                raise FieldError(
                    "supplied central factors do not multiply to fhat")
        pieces = []
        fi = g
        suffix = [None] * (len(pis) + 1)
        suffix[len(pis)] = ComPoly(cf.fhat.field, (cf.fhat.field.one,))
        for i in range(len(pis) - 1, -1, -1):
            suffix[i] = pis[i] * suffix[i + 1]
        for i in range(len(pis) - 1):
            fnext = sp_rgcd(fi, central_lift(ring, suffix[i + 1]))
            gi, r = fi.ldivrem(fnext)
            if not r.is_zero():
                raise InternalInvariantError("central peeling not exact")
            pieces.append((gi, pis[i]))
            fi = fnext
        pieces.append((fi, pis[-1]))

        shared_cache = {}

        def work(idx_piece):
            idx, (gi, pi) = idx_piece
            cache = {} if jobs > 1 else shared_cache
            return factorize_irred(gi, pi, derive_seed(rng_seed, "p", idx),
                                   cache)

        if jobs > 1 and len(pieces) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as ex:
                results = list(ex.map(work, enumerate(pieces)))
        else:
            results = [work(ip) for ip in enumerate(pieces)]
        for (gi, pi), sub in zip(pieces, results):
            factors.extend(sub)
            certs.extend(CentralForm(ring, 0, pi) for _ in sub)
    x_cert_fhat = ComPoly(ring.k_field, (ring.k_field.one,))
    for _ in range(m):
        factors.append(ring.x())
        certs.append(CentralForm(ring, 1, x_cert_fhat))
    fz = Factorization(unit, factors, certs)
    return fz


def verify_factorization(f: SkewPoly, fz: Factorization) -> bool:
    """Re-multiply, re-test irreducibility, check certificate bounds."""
    from .bound import decentralize
    if len(fz.factors) != len(fz.certificates):
        return False
    ring = f.ring
    prod = ring.const(fz.unit)
    for p in fz.factors:
        prod = prod * p
    if prod != f:
        return False
    for p, cert in zip(fz.factors, fz.certificates):
        if not is_irreducible(p):
            return False
        if bound_v2(p) != decentralize(cert):
            return False
    return True
