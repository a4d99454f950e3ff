"""Exact integer and rational linear algebra.

Everything here works over arbitrary-precision integers (`int`) and exact
rationals (`fractions.Fraction`); no floating point is used anywhere.  The
module provides the small kernel the rest of the package is built on:
denominators and homogeneous (projective) integer lifts of rational points,
primitive vectors, determinants and maximal-minor gcds, Smith normal form
with transform matrices, saturated integer kernels, and enumeration of
lattice points in half-open parallelepipeds.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Point = tuple[Fraction, ...]
IntVec = tuple[int, ...]
IntMatrix = tuple[IntVec, ...]


def make_point(*coords) -> Point:
    """Build a point of Q^n from ints, strings like '2/3', or Fractions."""
    return tuple(Fraction(c) for c in coords)


def denominator(p: Sequence[Fraction]) -> int:
    """Least common denominator of the coordinates; 1 for integer points."""
    d = 1
    for c in p:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def homogenize(p: Sequence[Fraction]) -> IntVec:
    """den(p) * (p, 1) in Z^(n+1): the primitive integer lift of p.

    The last entry of the result equals den(p).
    """
    d = denominator(p)
    return tuple(int(c * d) for c in p) + (d,)


def dehomogenize(v: Sequence[int]) -> Point:
    """Inverse of homogenize for vectors with positive last coordinate."""
    last = v[-1]
    if last <= 0:
        raise ValueError("cone not graph-positioned")
    return tuple(Fraction(c, last) for c in v[:-1])


def primitive_vector(v: Sequence[int]) -> IntVec:
    """v divided by the gcd of its entries; sign preserved, idempotent."""
    g = 0
    for c in v:
        g = math.gcd(g, c)
    if g == 0:
        raise ValueError("no primitive representative on the zero ray")
    return tuple(c // g for c in v)


def vec_add(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(a - b for a, b in zip(u, v))


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> tuple:
    return tuple(dot(row, v) for row in a)


def transpose(a: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(col) for col in zip(*a))


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def gcd_maximal_minors(rows: Sequence[Sequence[int]]) -> int:
    """gcd of the absolute values of all maximal-size minors.

    Returns 0 exactly when the rows (for rows <= cols; columns otherwise)
    are linearly dependent.  Square matrices reduce to a single Bareiss
    determinant; small rectangular ones enumerate column subsets; anything
    larger falls back to the product of elementary divisors, which equals
    the maximal determinantal divisor.
    """
    r = len(rows)
    if r == 0:
        return 1
    c = len(rows[0])
    if r > c:
        rows = [list(col) for col in zip(*rows)]
        r, c = c, r
    if r == c:
        return abs(det(rows))
    if r <= 4:
        g = 0
        for cols in itertools.combinations(range(c), r):
            g = math.gcd(g, det([[row[j] for j in cols] for row in rows]))
            if g == 1:
                return 1
        return g
    _, d, _ = smith_normal_form(rows)
    g = 1
    for i in range(r):
        g *= d[i][i]
    return abs(g)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms: returns (U, D, V) with U*M*V = D.

    U and V are unimodular; D is diagonal with nonnegative entries and
    d_i | d_{i+1}.
    """
    r = len(rows)
    c = len(rows[0]) if r else 0
    d = [list(row) for row in rows]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def row_combine(i, j, a11, a12, a21, a22):
        # rows i,j <- (a11*i + a12*j, a21*i + a22*j); det of the 2x2 is +-1
        for mat in (d, u):
            ri, rj = mat[i], mat[j]
            for k in range(len(ri)):
                ri[k], rj[k] = a11 * ri[k] + a12 * rj[k], a21 * ri[k] + a22 * rj[k]

    def col_combine(i, j, a11, a12, a21, a22):
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = a11 * row[i] + a12 * row[j], a21 * row[i] + a22 * row[j]

    def clear_position(t):
        # repeat row/col elimination until column t and row t are zero
        # off-pivot.  A dividing entry is removed by plain subtraction,
        # which leaves the pivot row/column alone; otherwise the xgcd
        # combine strictly shrinks the pivot.  That makes the alternation
        # terminate.
        while True:
            if d[t][t] < 0:
                d[t] = [-x for x in d[t]]
                u[t] = [-x for x in u[t]]
            changed = False
            for i in range(t + 1, r):
                e = d[i][t]
                if e:
                    a = d[t][t]
                    if a and e % a == 0:
                        q = e // a
                        for mat in (d, u):
                            mat[i] = [x - q * y for x, y in zip(mat[i], mat[t])]
                    else:
                        g, x, y = _xgcd(a, e)
                        row_combine(t, i, x, y, -(e // g), a // g)
                    changed = True
            for j in range(t + 1, c):
                e = d[t][j]
                if e:
                    a = d[t][t]
                    if a and e % a == 0:
                        q = e // a
                        for mat in (d, v):
                            for row in mat:
                                row[j] -= q * row[t]
                    else:
                        g, x, y = _xgcd(a, e)
                        col_combine(t, j, x, y, -(e // g), a // g)
                    changed = True
            if not changed:
                return

    m = min(r, c)
    for t in range(m):
        # deterministic pivot: smallest nonzero |entry| in the submatrix
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                e = d[i][j]
                if e and (best is None or abs(e) < best):
                    best, pivot = abs(e), (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_combine(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_combine(t, pj, 0, 1, 1, 0)
        clear_position(t)

    # enforce the divisibility chain d_t | d_{t+1}
    changed = True
    while changed:
        changed = False
        for t in range(m - 1):
            a, b = d[t][t], d[t + 1][t + 1]
            if b % a if a else b:
                # bring d_{t+1} into column t so clearing mixes it with the
                # pivot and the gcd surfaces
                col_combine(t, t + 1, 1, 1, 0, 1)
                clear_position(t)
                changed = True
    for t in range(m):
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return (
        tuple(tuple(row) for row in u),
        tuple(tuple(row) for row in d),
        tuple(tuple(row) for row in v),
    )


def integer_kernel_basis(rows: Sequence[Sequence[int]]) -> tuple[IntVec, ...]:
    """Basis of the saturated integer kernel lattice {x in Z^c : M x = 0}."""
    r = len(rows)
    c = len(rows[0]) if r else 0
    if r == 0:
        return identity_matrix(c)
    _, d, v = smith_normal_form(rows)
    m = min(r, c)
    free = [j for j in range(c) if j >= m or d[j][j] == 0]
    return tuple(tuple(v[i][j] for i in range(c)) for j in free)


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix (exact)."""
    r = len(rows)
    if r == 0:
        return 0
    _, d, _ = smith_normal_form(rows)
    return sum(1 for i in range(min(r, len(rows[0]))) if d[i][i] != 0)


def solve_rational(
    a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]] | None:
    """Solve a x = b exactly over Q.

    Returns (particular solution, nullspace basis) or None when the system
    is inconsistent.  The particular solution sets all free variables to 0,
    so it is canonical given the row order.
    """
    rows = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    ri = 0
    for col in range(ncols):
        piv = None
        for i in range(ri, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[ri], rows[piv] = rows[piv], rows[ri]
        inv = 1 / rows[ri][col]
        rows[ri] = [x * inv for x in rows[ri]]
        for i in range(len(rows)):
            if i != ri and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[ri])]
        pivots.append(col)
        ri += 1
        if ri == len(rows):
            break
    for i in range(ri, len(rows)):
        if rows[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for k, col in enumerate(pivots):
        sol[col] = rows[k][ncols]
    free = [j for j in range(ncols) if j not in pivots]
    null = []
    for j in free:
        vec = [Fraction(0)] * ncols
        vec[j] = Fraction(1)
        for k, col in enumerate(pivots):
            vec[col] = -rows[k][j]
        null.append(tuple(vec))
    return tuple(sol), tuple(null)


def lattice_points_half_open(
    gens: Sequence[Sequence[int]],
) -> list[tuple[IntVec, tuple[Fraction, ...]]]:
    """Integer points of the half-open parallelepiped spanned by gens.

    gens must be linearly independent.  Returns every integer point
    mu_0 g_0 + ... + mu_j g_j with 0 <= mu_i < 1 together with its exact
    coefficient vector (mu_0, ..., mu_j), sorted lexicographically by
    point.  Always contains the origin; the number of points equals
    gcd_maximal_minors(gens).

    Enumeration goes through the Smith normal form of the generator
    matrix: coset representatives of the saturation lattice modulo the
    generated sublattice are mapped back and reduced into the box.
    """
    k = len(gens)
    n = len(gens[0])
    cols = [[gens[i][j] for i in range(k)] for j in range(n)]  # n x k, columns = gens
    u, d, v = smith_normal_form(cols)
    divisors = [d[i][i] for i in range(min(n, k))]
    if len(divisors) < k or 0 in divisors:
        raise ValueError("degenerate parallelepiped")
    # U * G * V = D with G the n x k column matrix, so G*V = U^-1 * D: the
    # saturation lattice is U^-1 applied to integer vectors supported on the
    # first k coordinates, and cosets are indexed by residues mod divisors.
    uinv = unimodular_inverse(u)
    frac_rows = [[Fraction(x) for x in row] for row in cols]
    out = []
    for residues in itertools.product(*[range(di) for di in divisors]):
        z = [0] * n
        for j, t in enumerate(residues):
            if t:
                for i in range(n):
                    z[i] += uinv[i][j] * t
        solved = solve_rational(frac_rows, [Fraction(x) for x in z])
        assert solved is not None
        mu = [x - (x.numerator // x.denominator) for x in solved[0]]  # frac part
        pt = [0] * n
        for i in range(n):
            acc = Fraction(0)
            for j in range(k):
                acc += mu[j] * gens[j][i]
            assert acc.denominator == 1
            pt[i] = acc.numerator
        out.append((tuple(pt), tuple(mu)))
    out.sort(key=lambda item: item[0])
    return out


def parallelepiped_has_nonzero_point(gens: Sequence[Sequence[int]]) -> bool:
    """Whether the half-open parallelepiped of gens holds a nonzero integer point.

    Equivalent to lattice_points_half_open(gens) having more than one
    element, but decided without full enumeration: the parallelepiped is
    free of nonzero integer points exactly when every lattice point of the
    saturation of span(gens) has integer coordinates in the gens basis.
    Square full-rank systems check integrality of the adjugate columns;
    the general case tests the saturated kernel-complement basis.
    """
    k = len(gens)
    n = len(gens[0])
    if k == n:
        dv = det(gens)
        if dv == 0:
            raise ValueError("degenerate parallelepiped")
        if dv < 0:
            dv = -dv
        if dv == 1:
            return False
        # e_i lies in the row lattice iff row i of G^-1 is integral; the
        # adjugate has an entry not divisible by det(G) iff some e_i escapes.
        if k == 1:
            return True
        if k == 2:
            (a, b), (c, d2) = gens
            return any(x % dv for x in (d2, b, c, a))
        if k == 3:
            (a, b, c), (d2, e, f), (g, h, i) = gens
            cof = (
                e * i - f * h, c * h - b * i, b * f - c * e,
                f * g - d2 * i, a * i - c * g, c * d2 - a * f,
                d2 * h - e * g, b * g - a * h, a * e - b * d2,
            )
            return any(x % dv for x in cof)
        return True  # |det| >= 2 in dimension > 3: quotient is nontrivial
    return len(lattice_points_half_open(gens)) > 1


def unimodular_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix (integer entries)."""
    n = len(m)
    dv = det(m)
    if dv not in (1, -1):
        raise ValueError(f"not unimodular (det = {dv})")
    aug = [[Fraction(x) for x in row] for row in m]
    inv_cols = []
    for col in range(n):
        e = [Fraction(1 if i == col else 0) for i in range(n)]
        solved = solve_rational(aug, e)
        assert solved is not None
        inv_cols.append([int(x) for x in solved[0]])
    return tuple(tuple(inv_cols[j][i] for j in range(n)) for i in range(n))
