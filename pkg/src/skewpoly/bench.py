"""Benchmark harness: per-degree median wall time and log-log slope."""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from time import perf_counter

from .bound import bound_v1, bound_v2
from .factor import factorize
from .seeds import derive_seed


def _one_trial(ring, op, deg, seed, trial, algorithm):
    import random
    rng = random.Random(derive_seed(seed, "bench", op, deg, trial))
    f = ring.random_poly(deg, rng, monic=True, nonzero_const=True)
    t0 = perf_counter()
    if op == "bound":
        (bound_v1 if algorithm == "v1" else bound_v2)(f)
    elif op == "factor":
        factorize(f, derive_seed(seed, "fz", deg, trial))
    else:
        raise ValueError(f"unknown bench op {op!r}")
    return perf_counter() - t0


def run_bench(ring, op, degrees, trials, seed=0, jobs=1, algorithm="v2"):
    """Rows of (degree, median seconds) plus a fitted log-log slope.

    The slope is None when fewer than two distinct degrees are given.
    """
    rows = []
    for deg in degrees:
        args = [(ring, op, deg, seed, t, algorithm) for t in range(trials)]
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as ex:
                times = list(ex.map(lambda a: _one_trial(*a), args))
        else:
            times = [_one_trial(*a) for a in args]
        rows.append({"degree": deg, "median_s": statistics.median(times),
                     "trials": trials})
    slope = None
    pts = [(math.log(r["degree"]), math.log(r["median_s"]))
           for r in rows if r["median_s"] > 0]
    if len({r["degree"] for r in rows}) >= 2 and len(pts) >= 2:
        n = len(pts)
        sx = sum(x for x, _ in pts)
        sy = sum(y for _, y in pts)
        sxx = sum(x * x for x, _ in pts)
        sxy = sum(x * y for x, y in pts)
        den = n * sxx - sx * sx
        if den:
            slope = (n * sxy - sx * sy) / den
    return {"op": op, "rows": rows, "slope": slope}
