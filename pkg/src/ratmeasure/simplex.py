"""Rational simplexes and simplicial complexes.

A simplex stores its vertices canonically sorted, so simplex equality is
vertex-set equality and all derived data (denominator, regularity, the
halfspace cell) can be cached.  A complex is a finite face-closed set of
simplexes in which any two members meet in a common face; the expensive
part of that invariant is verified exactly when `config.VALIDATE` is on.

Regularity of a simplex means the integer lifts of its vertices extend to
a basis of the full integer lattice, decided by the maximal-minor gcd.
The Farey mediant of a regular simplex is the point whose lift is the sum
of the vertex lifts; blowing a complex up at such a mediant preserves
regularity, and the denominators of the replaced simplexes obey an exact
reciprocal law that `farey_blow_up` asserts after every step.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import config
from .hrep import (
    Cell,
    cell_contains,
    cell_of_simplex,
    hull_equations,
    intersect_simplexes,
)
from .lattice import (
    IntVec,
    Point,
    denominator,
    dehomogenize,
    gcd_maximal_minors,
    homogenize,
    solve_rational,
)


@dataclass(frozen=True)
class Simplex:
    """A rational simplex given by its (sorted) affinely independent vertices."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable[Sequence]) -> None:
        verts = tuple(sorted(tuple(Fraction(c) for c in v) for v in vertices))
        if not verts:
            raise ValueError("a simplex needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError("repeated vertex")
        if len({len(v) for v in verts}) != 1:
            raise ValueError("mixed ambient dimensions")
        object.__setattr__(self, "vertices", verts)
        if gcd_maximal_minors(self.lift_matrix) == 0:
            raise ValueError("vertices are not affinely independent")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def lift_matrix(self) -> tuple[IntVec, ...]:
        """Rows are the homogeneous integer lifts of the vertices."""
        return tuple(homogenize(v) for v in self.vertices)

    @cached_property
    def is_regular(self) -> bool:
        return gcd_maximal_minors(self.lift_matrix) == 1

    def denominator(self) -> int:
        """Product of the vertex denominators (regular simplexes only)."""
        if not self.is_regular:
            raise ValueError("denominator defined for regular simplexes")
        return self.denominator_product

    @cached_property
    def denominator_product(self) -> int:
        d = 1
        for v in self.vertices:
            d *= denominator(v)
        return d

    @cached_property
    def cell(self) -> Cell:
        return cell_of_simplex(self.vertices)

    def contains(self, point: Point) -> bool:
        return cell_contains(self.cell, point)

    def faces(self) -> frozenset["Simplex"]:
        """All 2^(m+1) - 1 nonempty faces, this simplex included."""
        out = set()
        for k in range(1, len(self.vertices) + 1):
            for sub in itertools.combinations(self.vertices, k):
                out.add(Simplex(sub))
        return frozenset(out)

    def has_face(self, other: "Simplex") -> bool:
        return set(other.vertices) <= set(self.vertices)

    def barycentric(self, point: Point) -> tuple[Fraction, ...] | None:
        """Affine coordinates of point w.r.t. the vertices, or None."""
        cols = [
            [Fraction(v[i]) for v in self.vertices] for i in range(self.ambient_dim)
        ]
        cols.append([Fraction(1)] * len(self.vertices))
        rhs = [Fraction(c) for c in point] + [Fraction(1)]
        solved = solve_rational(cols, rhs)
        if solved is None:
            return None
        return solved[0]

    def __lt__(self, other: "Simplex") -> bool:
        return self.vertices < other.vertices


def farey_mediant(s: Simplex) -> Point:
    """The point whose integer lift is the sum of the vertex lifts of s."""
    if not s.is_regular:
        raise ValueError("Farey mediant defined for regular simplexes")
    total = [0] * (s.ambient_dim + 1)
    for row in s.lift_matrix:
        total = [a + b for a, b in zip(total, row)]
    g = 0
    for x in total:
        g = math.gcd(g, x)
    assert g == 1, "mediant lift of a regular simplex is primitive"
    return dehomogenize(total)


@dataclass(frozen=True)
class MaximalSelection:
    """The i-simplexes of a complex that are faces of nothing larger."""

    complex: "Complex"
    dim: int
    members: frozenset[Simplex]


@dataclass(frozen=True)
class Complex:
    """Face-closed set of rational simplexes meeting in common faces."""

    simplexes: frozenset[Simplex]
    ambient_dim: int

    def __post_init__(self):
        if config.VALIDATE:
            self.validate()

    @staticmethod
    def from_maximal(simplexes: Iterable[Simplex], ambient_dim: int | None = None) -> "Complex":
        simplexes = list(simplexes)
        if ambient_dim is None:
            if not simplexes:
                raise ValueError("ambient dimension required for empty complex")
            ambient_dim = simplexes[0].ambient_dim
        closed: set[Simplex] = set()
        for s in simplexes:
            if s.ambient_dim != ambient_dim:
                raise ValueError("mixed ambient dimensions")
            closed.update(s.faces())
        return Complex(frozenset(closed), ambient_dim)

    @staticmethod
    def empty(ambient_dim: int) -> "Complex":
        return Complex(frozenset(), ambient_dim)

    @property
    def is_empty(self) -> bool:
        return not self.simplexes

    @cached_property
    def dim(self) -> int:
        return max((s.dim for s in self.simplexes), default=-1)

    @cached_property
    def maximal(self) -> frozenset[Simplex]:
        """Members that are proper faces of no other member."""
        return frozenset(
            s
            for s in self.simplexes
            if not any(t != s and t.has_face(s) for t in self.simplexes)
        )

    def maximal_simplexes(self, i: int) -> MaximalSelection:
        members = frozenset(s for s in self.maximal if s.dim == i)
        return MaximalSelection(self, i, members)

    def dimensional_part(self, i: int) -> "Complex":
        members = self.maximal_simplexes(i).members
        if not members:
            return Complex.empty(self.ambient_dim)
        return Complex.from_maximal(sorted(members), self.ambient_dim)

    def support_contains(self, point: Point) -> bool:
        return any(s.contains(point) for s in self.maximal)

    @cached_property
    def is_regular(self) -> bool:
        return all(s.is_regular for s in self.maximal)

    def carrier(self, point: Point) -> Simplex | None:
        """The unique member whose relative interior holds the point."""
        for s in sorted(self.simplexes, key=lambda s: len(s.vertices)):
            coords = s.barycentric(point)
            if coords is not None and all(c > 0 for c in coords):
                return s
        return None

    def blow_up(self, point: Point) -> "Complex":
        """Subdivide by starring at a point of the support.

        Every simplex containing the point is replaced by the joins of the
        point with its faces avoiding the point; blowing up at an existing
        vertex returns an equal complex.
        """
        point = tuple(Fraction(c) for c in point)
        touched = [s for s in self.simplexes if s.contains(point)]
        if not touched:
            raise ValueError("blow-up center outside support")
        out = {s for s in self.simplexes if not s.contains(point)}
        for s in touched:
            support = None
            coords = s.barycentric(point)
            support = {
                v for v, c in zip(s.vertices, coords) if c != 0
            }
            for k in range(0, len(s.vertices) + 1):
                for sub in itertools.combinations(s.vertices, k):
                    if support <= set(sub):
                        continue  # face contains the point
                    out.add(Simplex(sub + (point,)))
                    if sub:
                        out.add(Simplex(sub))
        return Complex(frozenset(out), self.ambient_dim)

    def validate(self) -> None:
        """Exact structural checks: face closure and common-face intersections."""
        for s in self.simplexes:
            if s.ambient_dim != self.ambient_dim:
                raise AssertionError("member with wrong ambient dimension")
            for f in s.faces():
                if f not in self.simplexes:
                    raise AssertionError(f"face closure violated at {s}")
        members = sorted(self.maximal)
        pairs = list(itertools.combinations(members, 2))
        if len(members) > config.PAIRWISE_FULL_LIMIT:
            stride = max(1, len(pairs) // config.PAIRWISE_SAMPLE)
            pairs = pairs[::stride]
        for s, t in pairs:
            inter = intersect_simplexes(s.vertices, t.vertices)
            common = set(s.vertices) & set(t.vertices)
            for v in inter:
                if v not in common:
                    raise AssertionError(
                        f"members intersect outside a common face: {s} vs {t}"
                    )


def farey_blow_up(delta: Complex, s: Simplex) -> Complex:
    """Blow up a regular complex at the Farey mediant of one of its simplexes.

    Asserts the exact denominator laws of the subdivision: the mediant
    denominator is the sum of the vertex denominators, each replacement of
    a simplex T containing the mediant c satisfies
    den(S_u) = den(T) * den(c) / den(v_u), and the reciprocals of the
    replacement denominators add up to 1/den(T).
    """
    if s not in delta.simplexes:
        raise ValueError("simplex not in complex")
    c = farey_mediant(s)
    den_c = denominator(c)
    assert den_c == sum(denominator(v) for v in s.vertices)
    result = delta.blow_up(c)
    carrier = set(s.vertices)
    for t in delta.simplexes:
        if not carrier <= set(t.vertices):
            continue
        inv_sum = Fraction(0)
        for v_u in sorted(carrier):
            piece = Simplex(tuple(x for x in t.vertices if x != v_u) + (c,))
            expected = t.denominator() * den_c // denominator(v_u)
            assert piece.denominator() == expected
            assert piece in result.simplexes
            inv_sum += Fraction(1, piece.denominator())
        assert inv_sum == Fraction(1, t.denominator())
    return result


def standard_triangulation(basis: Sequence[Sequence[int]]) -> Complex:
    """Triangulation of the parallelepiped spanned by part of a lattice basis.

    The maximal simplexes are the j! chains of partial sums
    conv(0, w_{pi(1)}, w_{pi(1)}+w_{pi(2)}, ...); each is regular with unit
    denominator.
    """
    vecs = [tuple(int(x) for x in w) for w in basis]
    if not vecs:
        raise ValueError("empty basis")
    if gcd_maximal_minors(vecs) != 1:
        raise ValueError("not unimodular")
    n = len(vecs[0])
    tops = []
    for perm in itertools.permutations(vecs):
        pts = [tuple(Fraction(0) for _ in range(n))]
        acc = [0] * n
        for w in perm:
            acc = [a + b for a, b in zip(acc, w)]
            pts.append(tuple(Fraction(x) for x in acc))
        tops.append(Simplex(pts))
    return Complex.from_maximal(tops, n)
