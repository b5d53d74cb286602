"""FastAPI service exposing the full operation surface of the package.

Every endpoint is a pure function of the request body (plus the explicit
seed), so responses are reproducible byte-for-byte; the CLI is a thin
client of this app.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import bench as bench_mod
from ..bound import (bound_v1, bound_v2, centralize, decentralize,
                     is_twosided, oracle_min_central, CentralForm)
from ..errors import (FieldError, InternalInvariantError, ParseError,
                      RingMismatchError, TrialsExhaustedError,
                      UnsupportedFieldError)
from ..factor import (factorize, is_irreducible, split_by_central,
                      verify_factorization)
from ..literals import (format_cpoly, format_ring, format_skew_poly,
                        parse_poly, parse_ring, parse_zpoly)
from ..skew import sp_leea, sp_llcm, sp_rgcd
from .models import (BenchRequest, BenchResponse, BinopRequest, BoundRequest,
                     BoundResponse, FactorRequest, FactorResponse,
                     IrreducibleRequest, IrreducibleResponse, LdivResponse,
                     ParseRequest, ParseResponse, PolyRequest, ResultResponse,
                     SplitRequest, SplitResponse)

app = FastAPI(title="skewpoly", version="0.1.0",
              description="Exact skew polynomial bounds, irreducibility "
                          "certificates and factorization.")


def _fail(status, code, message, position=None):
    detail = {"code": code, "message": message}
    if position is not None:
        detail["position"] = position
    raise HTTPException(status_code=status, detail=detail)


def _ring(literal):
    try:
        return parse_ring(literal)
    except ParseError as e:
        _fail(400, "parse_error", e.message, e.position)
    except FieldError as e:
        _fail(400, "invalid_ring", str(e))


def _poly(ring, literal, allow_zero=False):
    try:
        p = parse_poly(ring, literal)
    except ParseError as e:
        _fail(400, "parse_error", e.message, e.position)
    if p.is_zero() and not allow_zero:
        _fail(400, "invalid_input", "polynomial must be nonzero")
    return p


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except UnsupportedFieldError as e:
        _fail(400, "unsupported_field", str(e))
    except TrialsExhaustedError as e:
        _fail(500, "trials_exhausted", str(e))
    except (FieldError, RingMismatchError, ZeroDivisionError) as e:
        _fail(400, "invalid_input", str(e))
    except InternalInvariantError as e:
        _fail(500, "internal_invariant", str(e))


def _cert_dict(cf: CentralForm):
    return {"m": cf.m, "fhat": format_cpoly(cf.fhat, "z")}


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/v1/parse", response_model=ParseResponse)
def parse_endpoint(req: ParseRequest):
    ring = _ring(req.ring)
    p = _poly(ring, req.poly, allow_zero=True)
    deg = p.deg if not p.is_zero() else -1
    return ParseResponse(ring=format_ring(ring), input=req.poly,
                         canonical=format_skew_poly(p), degree=deg)


@app.post("/v1/mul", response_model=ResultResponse)
def mul_endpoint(req: BinopRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.f, allow_zero=True)
    g = _poly(ring, req.g, allow_zero=True)
    prod = f * g
    verified = None
    if req.verify:
        verified = prod.is_zero() if (f.is_zero() or g.is_zero()) else \
            prod.ldivrem(g) == (f, ring.zero())
    return ResultResponse(ring=format_ring(ring),
                          input=[format_skew_poly(f), format_skew_poly(g)],
                          result=[format_skew_poly(prod)], verified=verified)


@app.post("/v1/ldiv", response_model=LdivResponse)
def ldiv_endpoint(req: BinopRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.f, allow_zero=True)
    g = _poly(ring, req.g)
    q, r = _guard(f.ldivrem, g)
    verified = None
    if req.verify:
        verified = (q * g + r == f) and r.deg < g.deg
    return LdivResponse(ring=format_ring(ring),
                        input=[format_skew_poly(f), format_skew_poly(g)],
                        quotient=format_skew_poly(q),
                        remainder=format_skew_poly(r), verified=verified)


@app.post("/v1/rgcd", response_model=ResultResponse)
def rgcd_endpoint(req: BinopRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.f)
    g = _poly(ring, req.g)
    if req.verify:
        d, u, v, _, _, _ = _guard(sp_leea, f, g)
        verified = (u * f + v * g == d and f.lrem(d).is_zero()
                    and g.lrem(d).is_zero())
    else:
        d = _guard(sp_rgcd, f, g)
        verified = None
    return ResultResponse(ring=format_ring(ring),
                          input=[format_skew_poly(f), format_skew_poly(g)],
                          result=[format_skew_poly(d)], verified=verified)


@app.post("/v1/llcm", response_model=ResultResponse)
def llcm_endpoint(req: BinopRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.f)
    g = _poly(ring, req.g)
    m = _guard(sp_llcm, f, g)
    verified = None
    if req.verify:
        d = sp_rgcd(f, g)
        verified = (m.lrem(f).is_zero() and m.lrem(g).is_zero()
                    and m.deg + d.deg == f.deg + g.deg)
    return ResultResponse(ring=format_ring(ring),
                          input=[format_skew_poly(f), format_skew_poly(g)],
                          result=[format_skew_poly(m)], verified=verified)


@app.post("/v1/bound", response_model=BoundResponse)
def bound_endpoint(req: BoundRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.poly)
    fs = _guard(bound_v1 if req.algorithm == "v1" else bound_v2, f)
    cf = _guard(centralize, fs)
    verified = None
    if req.verify:
        verified = (is_twosided(fs) and fs.lrem(f).is_zero()
                    and fs.deg <= ring.mu * f.deg
                    and decentralize(cf) == fs)
    return BoundResponse(ring=format_ring(ring), input=[format_skew_poly(f)],
                         result=[format_skew_poly(fs)],
                         central=_cert_dict(cf), certificates=[_cert_dict(cf)],
                         degree=fs.deg, verified=verified, seed=req.seed)


@app.post("/v1/oracle-bound", response_model=BoundResponse)
def oracle_bound_endpoint(req: PolyRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.poly)
    m = _guard(oracle_min_central, f)
    cf = CentralForm(ring, 0, m)
    lift = decentralize(cf)
    verified = None
    if req.verify:
        verified = lift == bound_v2(f)
    return BoundResponse(ring=format_ring(ring), input=[format_skew_poly(f)],
                         result=[format_skew_poly(lift)],
                         central=_cert_dict(cf), certificates=[_cert_dict(cf)],
                         degree=lift.deg, verified=verified, seed=req.seed)


@app.post("/v1/irreducible", response_model=IrreducibleResponse)
def irreducible_endpoint(req: IrreducibleRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.poly)
    res = _guard(is_irreducible, f, req.algorithm)
    verified = None
    if req.verify:
        fz = _guard(factorize, f, req.seed)
        verified = (len(fz.factors) == 1) == res
    return IrreducibleResponse(ring=format_ring(ring),
                               input=[format_skew_poly(f)], irreducible=res,
                               verified=verified, seed=req.seed)


@app.post("/v1/factor", response_model=FactorResponse)
def factor_endpoint(req: FactorRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.poly)
    central = None
    if req.central_factors is not None:
        try:
            central = [parse_zpoly(ring, s) for s in req.central_factors]
        except ParseError as e:
            _fail(400, "parse_error", e.message, e.position)
    fz = _guard(factorize, f, req.seed, central, req.jobs)
    verified = None
    if req.verify:
        verified = verify_factorization(f, fz)
    return FactorResponse(
        ring=format_ring(ring), input=[format_skew_poly(f)],
        unit=ring.elem_str(fz.unit),
        result=[format_skew_poly(p) for p in fz.factors],
        certificates=[_cert_dict(c) for c in fz.certificates],
        count=len(fz.factors), verified=verified, seed=req.seed)


@app.post("/v1/split", response_model=SplitResponse)
def split_endpoint(req: SplitRequest):
    ring = _ring(req.ring)
    f = _poly(ring, req.poly)
    try:
        pi = parse_zpoly(ring, req.pi)
    except ParseError as e:
        _fail(400, "parse_error", e.message, e.position)
    except FieldError as e:
        _fail(400, "invalid_input", str(e))
    g, p = _guard(split_by_central, f, pi)
    verified = None
    if req.verify:
        verified = g * p == f
    return SplitResponse(ring=format_ring(ring), input=[format_skew_poly(f),
                                                        format_cpoly(pi)],
                         left=format_skew_poly(g), right=format_skew_poly(p),
                         verified=verified)


@app.post("/v1/bench", response_model=BenchResponse)
def bench_endpoint(req: BenchRequest):
    ring = _ring(req.ring)
    if not req.degrees:
        _fail(400, "invalid_input", "at least one degree required")
    table = _guard(bench_mod.run_bench, ring, req.op, req.degrees, req.trials,
                   req.seed, req.jobs, req.algorithm)
    return BenchResponse(ring=format_ring(ring), op=req.op,
                         rows=table["rows"], slope=table["slope"],
                         seed=req.seed)
