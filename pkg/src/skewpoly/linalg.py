"""Small dense linear algebra over an arbitrary field handle.

Everything here is exact and deterministic: first-nonzero pivoting,
free variables set to zero.  Sizes are tiny (at most a few hundred), so
the generic element-by-element path is fine; a vectorized variant covers
GF-coefficient rows for the larger oracle systems.
"""

from __future__ import annotations

import numpy as np


class DepFinder:
    """Incremental first-linear-dependency finder over a field handle."""

    def __init__(self, field, width):
        self.field = field
        self.width = width
        self.rows = []  # (pivot index, normalized vector, combo vector)

    def offer(self, vec, index):
        """Reduce vec; return combo coefficients if dependent, else None."""
        f = self.field
        combo = [f.zero] * index + [f.one]
        vec = list(vec)
        for pivot, rvec, rcombo in self.rows:
            lam = vec[pivot]
            if lam == f.zero:
                continue
            for i in range(self.width):
                vec[i] = f.sub(vec[i], f.mul(lam, rvec[i]))
            for i in range(len(rcombo)):
                combo[i] = f.sub(combo[i], f.mul(lam, rcombo[i]))
        pivot = next((i for i, c in enumerate(vec) if c != f.zero), None)
        if pivot is None:
            return combo
        inv = f.inv(vec[pivot])
        vec = [f.mul(inv, c) for c in vec]
        combo = [f.mul(inv, c) for c in combo]
        self.rows.append((pivot, vec, combo))
        return None


class DepFinderGF(DepFinder):
    """Vectorized variant for integer-coded GF rows."""

    def __init__(self, field, width):
        super().__init__(field, width)
        self.pivots = []
        self.mat = []
        self.combos = []

    def offer(self, vec, index):
        f = self.field
        vec = np.asarray(vec, dtype=np.int64).copy()
        combo = np.zeros(index + 1, dtype=np.int64)
        combo[index] = f.one
        for rix, pivot in enumerate(self.pivots):
            lam = int(vec[pivot])
            if lam:
                vec = f.vsub(vec, f.vscale(lam, self.mat[rix]))
                rc = self.combos[rix]
                combo[:len(rc)] = f.vsub(combo[:len(rc)], f.vscale(lam, rc))
        nz = np.nonzero(vec)[0]
        if not len(nz):
            return [int(c) for c in combo]
        inv = f.inv(int(vec[nz[0]]))
        vec = f.vscale(inv, vec)
        combo = f.vscale(inv, combo)
        self.pivots.append(int(nz[0]))
        self.mat.append(vec)
        self.combos.append(combo)
        return None


def make_dep_finder(field, width):
    if getattr(field, "vectorized", False):
        return DepFinderGF(field, width)
    return DepFinder(field, width)


def solve_square(field, rows, rhs):
    """One solution of the linear system rows * x = rhs, or None.

    rows is a list of row lists (n rows, m columns); free variables are
    set to zero.
    """
    f = field
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    n = len(a)
    m = len(rows[0]) if rows else 0
    pivots = []
    row = 0
    for col in range(m):
        sel = next((r for r in range(row, n) if a[r][col] != f.zero), None)
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        inv = f.inv(a[row][col])
        a[row] = [f.mul(inv, c) for c in a[row]]
        for r in range(n):
            if r != row and a[r][col] != f.zero:
                lam = a[r][col]
                a[r] = [f.sub(c, f.mul(lam, d)) for c, d in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    for r in range(row, n):
        if a[r][m] != f.zero:
            return None
    x = [f.zero] * m
    for r, col in enumerate(pivots):
        x[col] = a[r][m]
    return x


class SpanSolver:
    """Echelonized span of offered vectors, tracking selected originals.

    add_vector returns True when the vector enlarged the span (it is then
    part of the selected basis, in offer order); express writes any vector
    of the span in terms of the selected ones.
    """

    def __init__(self, field, width):
        self.field = field
        self.width = width
        self.rows = []  # (pivot, normalized vec, expr over selected)
        self.selected = 0

    def _reduce(self, vec):
        f = self.field
        vec = list(vec)
        lams = []
        for pivot, rvec, _ in self.rows:
            lam = vec[pivot]
            lams.append(lam)
            if lam != f.zero:
                for i in range(self.width):
                    vec[i] = f.sub(vec[i], f.mul(lam, rvec[i]))
        return vec, lams

    def add_vector(self, vec):
        f = self.field
        red, lams = self._reduce(vec)
        pivot = next((i for i, c in enumerate(red) if c != f.zero), None)
        if pivot is None:
            return False
        expr = [f.zero] * (self.selected + 1)
        expr[self.selected] = f.one
        for lam, (_, _, rexpr) in zip(lams, self.rows):
            if lam != f.zero:
                for i, e in enumerate(rexpr):
                    expr[i] = f.sub(expr[i], f.mul(lam, e))
        inv = f.inv(red[pivot])
        red = [f.mul(inv, c) for c in red]
        expr = [f.mul(inv, c) for c in expr]
        for prev in self.rows:
            prev[2].extend([f.zero] * (self.selected + 1 - len(prev[2])))
        self.rows.append((pivot, red, expr))
        self.selected += 1
        return True

    def express(self, vec):
        """Coefficients over the selected basis, or None if outside."""
        f = self.field
        red, lams = self._reduce(vec)
        if any(c != f.zero for c in red):
            return None
        out = [f.zero] * self.selected
        for lam, (_, _, rexpr) in zip(lams, self.rows):
            if lam != f.zero:
                for i, e in enumerate(rexpr):
                    out[i] = f.add(out[i], f.mul(lam, e))
        return out
