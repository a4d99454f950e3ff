"""Exact halfspace representations of rational convex cells.

A cell is a bounded rational polytope carried as canonical integer
equations (its affine hull), integer inequalities `a.x <= b`, and its exact
vertex set.  The module supplies the geometric plumbing shared by the
simplicial and polyhedron layers: canonical affine-hull equations, facet
inequalities of simplexes, membership tests, clipping a cell by a
hyperplane, vertex enumeration of intersections, and pulling
triangulations with respect to the global lexicographic vertex order.

Pulling triangulations are face-local: the triangulation induced on any
face of a cell depends only on that face, so cells that meet in common
faces triangulate compatibly.  All coordinates are Fractions; nothing here
is approximate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import (
    Point,
    dot,
    homogenize,
    integer_kernel_basis,
    solve_rational,
)

IntForm = tuple[tuple[int, ...], int]  # (a, b): a.x (<=|==) b


def normalize_form(coeffs: Sequence[Fraction], rhs: Fraction) -> IntForm:
    """Scale a rational affine form to primitive integers (gcd 1)."""
    den = 1
    for c in list(coeffs) + [rhs]:
        c = Fraction(c)
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    b = int(Fraction(rhs) * den)
    g = 0
    for x in ints + [b]:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
        b //= g
    return tuple(ints), b


def canonicalize_equation(form: IntForm) -> IntForm:
    """Sign-normalize an equation: first nonzero coefficient positive."""
    a, b = form
    lead = next((x for x in a if x), None)
    if lead is not None and lead < 0 or (lead is None and b < 0):
        return tuple(-x for x in a), -b
    return form


def hull_equations(vertices: Sequence[Point]) -> tuple[IntForm, ...]:
    """Canonical integer equations of the affine hull of the given points.

    The result is the reduced echelon basis of all (a, c) with
    a.v + c = 0 for every v, scaled primitive with positive leading
    coefficient, ordered by pivot column.  Two point sets spanning the
    same flat produce identical output.
    """
    lifted = [homogenize(v) for v in vertices]
    kernel = integer_kernel_basis(lifted)
    if not kernel:
        return ()
    # reduced echelon form of the kernel rows makes the basis canonical
    rows = [[Fraction(x) for x in row] for row in kernel]
    ncols = len(rows[0])
    ri = 0
    pivots = []
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
    out = []
    for row in rows[:ri]:
        a, c = row[:-1], row[-1]
        form = normalize_form(a, -c)  # a.x + c = 0  ->  a.x = -c
        out.append(canonicalize_equation(form))
    return tuple(out)


def barycentric_forms(vertices: Sequence[Point]) -> tuple[IntForm, ...]:
    """Facet inequalities of a simplex, one per vertex, as a.x <= b.

    The i-th form vanishes on the facet opposite vertex i and is
    nonpositive on the simplex (the barycentric coordinate of v_i equals
    (b - a.x) up to positive scale).
    """
    m = len(vertices) - 1
    n = len(vertices[0])
    forms = []
    matrix = [list(v) + [Fraction(1)] for v in vertices]
    for i in range(m + 1):
        target = [Fraction(1 if j == i else 0) for j in range(m + 1)]
        solved = solve_rational(matrix, target)
        assert solved is not None
        coeffs = solved[0]
        a, c = coeffs[:-1], coeffs[-1]
        # beta_i(x) = a.x + c >= 0  ->  (-a).x <= c
        forms.append(normalize_form([-x for x in a], c))
    return tuple(forms)


@dataclass(frozen=True)
class Cell:
    """Bounded rational polytope: hull equations, inequalities, vertices."""

    eqs: tuple[IntForm, ...]
    ineqs: tuple[IntForm, ...]
    vertices: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return affine_rank(self.vertices) - 1


def cell_of_simplex(vertices: Sequence[Point]) -> Cell:
    verts = tuple(sorted(vertices))
    return Cell(hull_equations(verts), barycentric_forms(verts), verts)


def evaluate(form: IntForm, point: Point) -> Fraction:
    a, b = form
    return dot(a, point) - b


def cell_contains(cell: Cell, point: Point) -> bool:
    return all(evaluate(e, point) == 0 for e in cell.eqs) and all(
        evaluate(q, point) <= 0 for q in cell.ineqs
    )


def simplex_contains(vertices: Sequence[Point], point: Point, cell: Cell | None = None) -> bool:
    if cell is None:
        cell = cell_of_simplex(vertices)
    return cell_contains(cell, point)


def affine_rank(points: Sequence[Point]) -> int:
    """Number of affinely independent points among the given ones."""
    if not points:
        return 0
    base = points[0]
    rows = [[p[i] - base[i] for i in range(len(base))] for p in points[1:]]
    rk = 0
    ncols = len(base)
    work = [row[:] for row in rows]
    for col in range(ncols):
        piv = next((i for i in range(rk, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        inv = work[rk][col]
        for i in range(len(work)):
            if i != rk and work[i][col]:
                f = work[i][col] / inv
                work[i] = [x - f * y for x, y in zip(work[i], work[rk])]
        rk += 1
    return rk + 1


def cell_edges(cell: Cell) -> list[tuple[Point, Point]]:
    """Edges (1-faces) of the cell, from tight-set combinatorics."""
    verts = cell.vertices
    tight = {
        v: frozenset(i for i, f in enumerate(cell.ineqs) if evaluate(f, v) == 0)
        for v in verts
    }
    out = []
    for u, w in itertools.combinations(verts, 2):
        t = tight[u] & tight[w]
        face = [x for x in verts if t <= tight[x]]
        if len(face) == 2:
            out.append((u, w))
    return out


def clip(cell: Cell, form: IntForm) -> tuple[Cell | None, Cell | None]:
    """Split a cell by the hyperplane a.x = b into (<=, >=) halves.

    Returns None for a side with no points.  Vertices are maintained
    incrementally: kept vertices plus exact crossings of cut edges.
    """
    a, b = form
    vals = {v: evaluate(form, v) for v in cell.vertices}
    neg = [v for v in cell.vertices if vals[v] < 0]
    zero = [v for v in cell.vertices if vals[v] == 0]
    pos = [v for v in cell.vertices if vals[v] > 0]
    if not pos:
        return cell, None
    if not neg:
        return None, cell
    crossings = []
    for u, w in cell_edges(cell):
        fu, fw = vals[u], vals[w]
        if (fu < 0 < fw) or (fw < 0 < fu):
            t = -fu / (fw - fu)
            crossings.append(tuple(x + t * (y - x) for x, y in zip(u, w)))
    le = Cell(
        cell.eqs,
        cell.ineqs + ((a, b),),
        tuple(sorted(set(neg) | set(zero) | set(crossings))),
    )
    neg_form = (tuple(-x for x in a), -b)
    ge = Cell(
        cell.eqs,
        cell.ineqs + (neg_form,),
        tuple(sorted(set(pos) | set(zero) | set(crossings))),
    )
    return le, ge


def enumerate_vertices(
    eqs: Sequence[IntForm], ineqs: Sequence[IntForm], ambient: int
) -> tuple[Point, ...]:
    """Vertices of the bounded set {eqs hold, ineqs hold} by basis search."""
    if eqs:
        solved = solve_rational(
            [[Fraction(x) for x in a] for a, _ in eqs],
            [Fraction(b) for _, b in eqs],
        )
        if solved is None:
            return ()
        p0, null = solved
    else:
        p0 = tuple(Fraction(0) for _ in range(ambient))
        null = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(ambient))
            for i in range(ambient)
        )
    k = len(null)
    reduced = [
        (
            tuple(dot(a, nv) for nv in null),
            Fraction(b) - dot(a, p0),
        )
        for a, b in ineqs
    ]
    if k == 0:
        return (tuple(p0),) if all(b >= 0 for _, b in reduced) else ()
    found = set()
    for combo in itertools.combinations(range(len(ineqs)), k):
        rows = [reduced[i][0] for i in combo]
        rhs = [reduced[i][1] for i in combo]
        solved = solve_rational(rows, rhs)
        if solved is None or solved[1]:
            continue
        y = solved[0]
        if all(dot(c, y) <= b for c, b in reduced):
            found.add(tuple(p + dot(nvcol, y) for p, nvcol in zip(p0, zip(*null))))
    return tuple(sorted(found))


def intersect_simplexes(
    s_verts: Sequence[Point], t_verts: Sequence[Point]
) -> tuple[Point, ...]:
    """Vertices of the intersection polytope of two simplexes."""
    cs = cell_of_simplex(s_verts)
    ct = cell_of_simplex(t_verts)
    return enumerate_vertices(
        cs.eqs + ct.eqs, cs.ineqs + ct.ineqs, len(s_verts[0])
    )


def pulling_triangulation(cell: Cell) -> list[tuple[Point, ...]]:
    """Triangulate a cell over its own vertices by pulling minimal vertices.

    Recursively cones the lexicographically least vertex of each face over
    the pulled triangulations of the facets avoiding it.  The result only
    depends on the face being triangulated, so adjacent cells agree on
    shared faces.
    """
    forms = cell.ineqs
    tight = {
        v: frozenset(i for i, f in enumerate(forms) if evaluate(f, v) == 0)
        for v in cell.vertices
    }
    memo: dict[frozenset, list[tuple[Point, ...]]] = {}
    rank_memo: dict[frozenset, int] = {}

    def adim(vs: frozenset) -> int:
        if vs not in rank_memo:
            rank_memo[vs] = affine_rank(sorted(vs)) - 1
        return rank_memo[vs]

    def rec(vs: frozenset) -> list[tuple[Point, ...]]:
        if vs in memo:
            return memo[vs]
        d = adim(vs)
        vlist = sorted(vs)
        if len(vlist) == d + 1:
            memo[vs] = [tuple(vlist)]
            return memo[vs]
        v0 = vlist[0]
        out = set()
        seen = set()
        for i in range(len(forms)):
            facet = frozenset(v for v in vs if i in tight[v])
            if not facet or facet == vs or facet in seen:
                continue
            seen.add(facet)
            if adim(facet) != d - 1:
                continue
            if v0 in facet:
                continue
            for simp in rec(facet):
                out.add(tuple(sorted(simp + (v0,))))
        memo[vs] = sorted(out)
        return memo[vs]

    return rec(frozenset(cell.vertices))


def refine_by_hyperplanes(
    cell: Cell, forms: Iterable[IntForm]
) -> list[Cell]:
    """Cut a cell by every hyperplane that properly separates it.

    A form cuts only when the current piece has vertices strictly on both
    sides; everything else leaves the piece alone.  The resulting pieces
    are exactly the maximal cells of the hyperplane-arrangement refinement.
    """
    pieces = [cell]
    for form in forms:
        nxt = []
        for piece in pieces:
            le, ge = clip(piece, form)
            if le is not None and ge is not None:
                nxt.append(le)
                nxt.append(ge)
            else:
                nxt.append(piece)
        pieces = nxt
    return pieces
