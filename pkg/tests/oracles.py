"""Independent brute-force oracles used to cross-check the library.

These deliberately avoid the code paths they validate: the parallelepiped
scanner walks an integer bounding box instead of using Smith normal form,
the minor gcd enumerates every maximal minor by cofactor expansion, and the
least-denominator search tries denominators one by one.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def det_cofactor(rows):
    """Determinant by cofactor expansion (exponential; oracle only)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def gcd_minors_enumerated(rows):
    """gcd of all maximal minors via explicit subset enumeration."""
    r, c = len(rows), len(rows[0])
    if r > c:
        rows = [list(col) for col in zip(*rows)]
        r, c = c, r
    g = 0
    for cols in itertools.combinations(range(c), r):
        g = math.gcd(g, det_cofactor([[row[j] for j in cols] for row in rows]))
    return g


def solve_fraction_system(a, b):
    """Tiny exact Gaussian solver; returns one solution or None."""
    rows = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    ncols = len(a[0])
    pivots = []
    ri = 0
    for col in range(ncols):
        piv = next((i for i in range(ri, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[ri], rows[piv] = rows[piv], rows[ri]
        rows[ri] = [x / rows[ri][col] for x in rows[ri]]
        for i in range(len(rows)):
            if i != ri and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[ri])]
        pivots.append(col)
        ri += 1
    if any(rows[i][ncols] for i in range(ri, len(rows))):
        return None
    sol = [Fraction(0)] * ncols
    for k, col in enumerate(pivots):
        sol[col] = rows[k][ncols]
    if len(pivots) < ncols:
        return None  # oracle only handles unique solutions
    return sol


def box_scan_parallelepiped(gens):
    """All integer points of the half-open parallelepiped, by box scan.

    Exponential in the box size; intended for dimension <= 3 with small
    entries.  Returns a sorted list of (point, coefficients).
    """
    k = len(gens)
    n = len(gens[0])
    lo = [0] * n
    hi = [0] * n
    for i in range(n):
        for g in gens:
            if g[i] < 0:
                lo[i] += g[i]
            else:
                hi[i] += g[i]
    cols = [[Fraction(gens[j][i]) for j in range(k)] for i in range(n)]
    found = []
    for pt in itertools.product(*[range(lo[i], hi[i] + 1) for i in range(n)]):
        mu = solve_fraction_system(cols, [Fraction(x) for x in pt])
        if mu is None:
            continue
        if all(0 <= m < 1 for m in mu):
            found.append((tuple(pt), tuple(mu)))
    found.sort(key=lambda item: item[0])
    return found


def least_denominator_by_search(equations, n, limit=10_000):
    """Smallest q such that some x with q*x integral solves a.x + t = 0 for all
    (a, t) in equations.  Searches q = 1, 2, ... and decides solvability of the
    scaled integer system via Smith reduction over the integers.
    """
    from ratmeasure import lattice

    for q in range(1, limit + 1):
        # solve A z = -q t over the integers, z = q x
        a_rows = [list(a) for a, _ in equations]
        rhs = [-q * t for _, t in equations]
        if not a_rows:
            return 1
        u, d, v = lattice.smith_normal_form(a_rows)
        w = lattice.mat_vec(u, rhs)
        r, c = len(a_rows), n
        ok = True
        y = [0] * c
        for i in range(r):
            di = d[i][i] if i < min(r, c) else 0
            if i < min(r, c) and di:
                if w[i] % di:
                    ok = False
                    break
                y[i] = w[i] // di
            elif w[i]:
                ok = False
                break
        if ok:
            return q
    raise AssertionError("no denominator found within limit")
