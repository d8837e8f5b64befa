"""Newton polyhedra of monomial ideals and the combinatorial
integral-closure oracle.

The polyhedron of a monomial ideal is conv(generator exponents) plus the
nonnegative orthant; a monomial is integral over the ideal exactly when
its exponent vector satisfies every facet inequality.  Facets are found
by brute-force enumeration over generator subsets (exact rational
arithmetic, ambient dimension at most 4), and the closure ideal is read
off as the minimal lattice points inside a stability-checked search box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .ideals import Ideal

MAX_HULL_DIM = 4


class NotMonomialError(ValueError):
    """Operation requires a monomial ideal in a plain polynomial ring."""


def _require_monomial(I):
    if not I.is_monomial:
        raise NotMonomialError("not a monomial ideal (or ring has relations)")


def _rank(rows):
    """Rank of a small integer/rational matrix, exactly."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][c]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _nullspace_1d(rows, n):
    """One nonzero integer solution of rows * a = 0, or None if the
    solution space is not one-dimensional."""
    if _rank(rows) != n - 1:
        return None
    m = [[Fraction(x) for x in row] for row in rows]
    # gaussian elimination to row echelon, then back-substitute free var
    pivots = []
    rank = 0
    for c in range(n):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][c]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(n) if c not in pivots][0]
    a = [Fraction(0)] * n
    a[free] = Fraction(1)
    for r, c in reversed(list(enumerate(pivots))):
        a[c] = -sum(m[r][j] * a[j] for j in range(c + 1, n))
    den = 1
    for v in a:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Exact facet description of conv(points) + nonnegative orthant.

    facets are (normal, rhs) pairs with primitive integer data, meaning
    <normal, x> >= rhs; every normal is componentwise nonnegative.
    """
    points: tuple
    vertices: tuple
    facets: tuple

    def member(self, exps):
        """Does the exponent vector lie in the polyhedron?"""
        if any(e < 0 for e in exps):
            return False
        return all(sum(a * x for a, x in zip(normal, exps)) >= rhs
                   for normal, rhs in self.facets)


def newton_hull(I):
    """Newton polyhedron of a nonzero monomial ideal (dimension <= 4)."""
    _require_monomial(I)
    if I._newton is not None:
        return I._newton
    points = [tuple(e) for e in I.min_exps()]
    if not points:
        raise ValueError("the zero ideal has no Newton polyhedron")
    n = len(points[0])
    if n > MAX_HULL_DIM:
        raise ValueError("exact hull supported up to dimension %d" % MAX_HULL_DIM)
    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    candidates = set()
    if n == 1:
        candidates.add(((1,), min(p[0] for p in points)))
    for k in range(1, n + 1):
        for pts in combinations(points, k):
            for dirs in combinations(range(n), n - k):
                rows = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
                rows += [unit[i] for i in dirs]
                rows = [r for r in rows if any(r)]
                if len(rows) != n - 1:
                    continue
                normal = _nullspace_1d(rows, n)
                if normal is None:
                    continue
                if all(v <= 0 for v in normal):
                    normal = tuple(-v for v in normal)
                if any(v < 0 for v in normal) or not any(normal):
                    continue
                rhs = min(sum(a * x for a, x in zip(normal, p)) for p in points)
                candidates.add((normal, rhs))

    facets = []
    for normal, rhs in sorted(candidates):
        tight_pts = [p for p in points
                     if sum(a * x for a, x in zip(normal, p)) == rhs]
        tight_dirs = [unit[i] for i in range(n) if normal[i] == 0]
        base = tight_pts[0]
        span = [tuple(a - b for a, b in zip(p, base)) for p in tight_pts[1:]]
        span += tight_dirs
        span = [r for r in span if any(r)]
        dim = _rank(span) if span else 0
        if dim == n - 1:
            facets.append((normal, rhs))

    vertices = []
    for p in points:
        tight_normals = [normal for normal, rhs in facets
                         if sum(a * x for a, x in zip(normal, p)) == rhs]
        if tight_normals and _rank(tight_normals) == n:
            vertices.append(p)

    hull = NewtonPolyhedron(points=tuple(points),
                            vertices=tuple(sorted(vertices)),
                            facets=tuple(facets))
    I._newton = hull
    return hull


def monomial_icl_member(mono_exps, I):
    """Is x^mono integral over the monomial ideal I (facet check)?"""
    hull = newton_hull(I)
    return hull.member(tuple(mono_exps))


def _minimal_lattice_points(hull, bounds):
    """Minimal lattice points of the polyhedron inside [0, b_i] per axis.

    The region is closed upward, so a point is minimal exactly when no
    coordinate can be decreased by one and stay inside; that test
    vectorizes cleanly.
    """
    n = len(bounds)
    axes = [np.arange(b + 1, dtype=np.int64) for b in bounds]
    grids = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.reshape(-1) for g in grids], axis=1)
    member = np.ones(len(pts), dtype=bool)
    for normal, rhs in hull.facets:
        member &= pts @ np.array(normal, dtype=np.int64) >= rhs
    grid = member.reshape([b + 1 for b in bounds])
    minimal = grid.copy()
    for axis in range(n):
        shifted = np.zeros_like(grid)
        idx_to = [slice(None)] * n
        idx_from = [slice(None)] * n
        idx_to[axis] = slice(1, None)
        idx_from[axis] = slice(0, -1)
        shifted[tuple(idx_to)] = grid[tuple(idx_from)]
        minimal &= ~shifted
    coords = np.argwhere(minimal)
    return sorted(tuple(int(v) for v in row) for row in coords)


def monomial_icl(I, margin=2, max_margin=10):
    """Integral closure of a monomial ideal, as a monomial ideal.

    Enumerates minimal lattice points of the Newton polyhedron inside a
    box (componentwise generator maximum plus `margin`) and re-checks
    with a larger box; a disagreement enlarges the box and retries.
    """
    _require_monomial(I)
    hull = newton_hull(I)
    base = [max(p[i] for p in hull.points) for i in range(len(hull.points[0]))]
    m = margin
    while m <= max_margin:
        first = _minimal_lattice_points(hull, [b + m for b in base])
        second = _minimal_lattice_points(hull, [b + m + 2 for b in base])
        if first == second:
            ring = I.ring
            result = Ideal(ring, [ring.monomial(e) for e in first])
            # double-inclusion guard: I inside result, result inside hull
            if not result.contains_ideal(I):
                raise RuntimeError("closure lost a generator (internal error)")
            if not all(hull.member(e) for e in result.min_exps()):
                raise RuntimeError("closure generator escaped the hull (internal error)")
            return result
        m += 2
    raise RuntimeError("lattice search box failed to stabilize at margin %d" % max_margin)
