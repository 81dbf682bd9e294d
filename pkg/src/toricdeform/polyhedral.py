"""Exact polyhedral geometry: cones, polyhedra, and normal fans.

Ray/facet conversion runs a Motzkin-Burger double description pass with the
rank-based adjacency test; every object carries both a generator and an
inequality description in canonical form (primitive vectors, lexicographically
sorted, duplicate-free), so equality is plain structural comparison.
All arithmetic is exact (int / Fraction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import (
    ZeroVectorError,
    as_int_vector,
    dot,
    fraction_vector,
    identity_matrix,
    is_integral,
    is_zero,
    matrix_rank,
    primitive,
    project_off_rowspan,
    saturate_rowspan,
    vadd,
    vneg,
    vsub,
)


class UnboundedError(ValueError):
    """Raised when an operation needs a bounded (or bounded-below) input."""


# ---------------------------------------------------------------------------
# Double description


def dual_description(rank: int, normals: Sequence[tuple]):
    """Extreme rays and lineality basis of {x : <a, x> >= 0 for all a}.

    Processes the inequalities incrementally.  State invariant: the current
    cone equals lin(lineality) + cone(rays) with rays extreme modulo the
    lineality space.  Returns (rays, lineality) uncanonicalized.
    """
    lineality = [tuple(r) for r in identity_matrix(rank)]
    rays: list = []
    processed: list = []
    for a in normals:
        vals = [dot(a, l) for l in lineality]
        if any(vals):
            i0 = next(i for i, v in enumerate(vals) if v)
            l0 = lineality[i0] if vals[i0] > 0 else vneg(lineality[i0])
            al0 = abs(vals[i0])
            new_lin = []
            for i, l in enumerate(lineality):
                if i == i0:
                    continue
                if vals[i]:
                    new_lin.append(primitive(tuple(al0 * x - vals[i] * y for x, y in zip(l, l0))))
                else:
                    new_lin.append(l)
            seen = set()
            new_rays = []
            for r in rays:
                ar = dot(a, r)
                rp = primitive(tuple(al0 * x - ar * y for x, y in zip(r, l0))) if ar else r
                if rp not in seen:
                    seen.add(rp)
                    new_rays.append(rp)
            if l0 not in seen:
                new_rays.append(l0)
            lineality, rays = new_lin, new_rays
        else:
            pos, zero, neg = [], [], []
            for r in rays:
                v = dot(a, r)
                (pos if v > 0 else zero if v == 0 else neg).append((r, v))
            if neg:
                combos = []
                seen = set(r for r, _ in pos) | set(r for r, _ in zero)
                lin_dim = len(lineality)
                for rp, vp in pos:
                    for rn, vn in neg:
                        if _adjacent(rp, rn, processed, rank, lin_dim):
                            s = primitive(tuple(vp * x - vn * y for x, y in zip(rn, rp)))
                            if s not in seen:
                                seen.add(s)
                                combos.append(s)
                rays = [r for r, _ in pos] + [r for r, _ in zero] + combos
        processed.append(tuple(a))
    return rays, lineality


def _adjacent(rp, rn, processed, rank, lin_dim):
    tight = [b for b in processed if dot(b, rp) == 0 and dot(b, rn) == 0]
    return matrix_rank(tight) == rank - lin_dim - 2


def _canonical_vrep(rank: int, rays: Sequence[tuple], lineality: Sequence[tuple]):
    """Canonicalize a (rays, lineality) pair.

    The lineality basis becomes the Hermite basis of its saturated lattice;
    each ray class is represented by the primitive integer vector on its
    orthogonal projection away from the lineality span.  This makes both
    parts functions of the cone as a set.
    """
    if lineality:
        lines = saturate_rowspan(lineality)
        pointed = sorted({primitive(project_off_rowspan(r, lines)) for r in rays})
    else:
        lines = ()
        pointed = sorted({primitive(r) for r in rays})
    return tuple(pointed), tuple(lines)


def _fold(pointed: Sequence[tuple], lines: Sequence[tuple]) -> tuple:
    out = set(pointed)
    for l in lines:
        out.add(l)
        out.add(vneg(l))
    return tuple(sorted(out))


def _vh_pipeline(rank: int, gens: Sequence[tuple]):
    """V-data -> (pointed rays, lines, pointed facets, facet lines)."""
    du_r, du_l = dual_description(rank, gens)
    fac_p, fac_l = _canonical_vrep(rank, du_r, du_l)
    pr, pl = dual_description(rank, _fold(fac_p, fac_l))
    pointed, lines = _canonical_vrep(rank, pr, pl)
    return pointed, lines, fac_p, fac_l


def _hv_pipeline(rank: int, normals: Sequence[tuple]):
    """H-data -> (pointed rays, lines, pointed facets, facet lines)."""
    pr, pl = dual_description(rank, normals)
    pointed, lines = _canonical_vrep(rank, pr, pl)
    du_r, du_l = dual_description(rank, _fold(pointed, lines))
    fac_p, fac_l = _canonical_vrep(rank, du_r, du_l)
    return pointed, lines, fac_p, fac_l


# ---------------------------------------------------------------------------
# Cones


class Cone:
    """Rational polyhedral cone with canonical ray and facet descriptions.

    rays folds the extreme rays with +/- a basis of the lineality space, so
    degenerate (non-pointed or lower-dimensional) cones round-trip exactly;
    facets lists inner normals, with equation pairs for lower-dimensional
    cones.  Both lists are primitive, sorted, duplicate-free.
    """

    __slots__ = ("rank", "generators", "pointed_rays", "lines", "pointed_facets", "facet_lines", "_hash")

    def __init__(self, rank, generators, pointed_rays, lines, pointed_facets, facet_lines):
        self.rank = rank
        self.generators = tuple(generators)
        self.pointed_rays = tuple(pointed_rays)
        self.lines = tuple(lines)
        self.pointed_facets = tuple(pointed_facets)
        self.facet_lines = tuple(facet_lines)
        self._hash = None

    @classmethod
    def from_generators(cls, rank: int, generators: Iterable[Sequence]) -> "Cone":
        gens = tuple(tuple(g) for g in generators)
        for g in gens:
            if len(g) != rank:
                raise ValueError("generator %r does not live in rank %d" % (g, rank))
        clean = sorted({primitive(g) for g in gens if not is_zero(g)})
        pointed, lines, fac_p, fac_l = _vh_pipeline(rank, clean)
        return cls(rank, gens, pointed, lines, fac_p, fac_l)

    @classmethod
    def from_inequalities(cls, rank: int, normals: Iterable[Sequence]) -> "Cone":
        raw = tuple(tuple(n) for n in normals)
        clean = sorted({primitive(n) for n in raw if not is_zero(n)})
        pointed, lines, fac_p, fac_l = _hv_pipeline(rank, clean)
        return cls(rank, raw, pointed, lines, fac_p, fac_l)

    @property
    def rays(self) -> tuple:
        return _fold(self.pointed_rays, self.lines)

    @property
    def facets(self) -> tuple:
        return _fold(self.pointed_facets, self.facet_lines)

    def dual(self) -> "Cone":
        return Cone(self.rank, self.facets, self.pointed_facets, self.facet_lines,
                    self.pointed_rays, self.lines)

    def contains(self, v: Sequence) -> bool:
        return all(dot(f, v) >= 0 for f in self.facets)

    def interior_contains(self, v: Sequence) -> bool:
        if self.dimension() != self.rank:
            raise ValueError("interior test needs a full-dimensional cone")
        return all(dot(f, v) > 0 for f in self.pointed_facets)

    def is_strongly_convex(self) -> bool:
        return not self.lines

    def dimension(self) -> int:
        return matrix_rank(self.rays)

    def __eq__(self, other):
        return (isinstance(other, Cone) and self.rank == other.rank
                and self.pointed_rays == other.pointed_rays and self.lines == other.lines
                and self.pointed_facets == other.pointed_facets
                and self.facet_lines == other.facet_lines)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.pointed_rays, self.lines))
        return self._hash

    def __repr__(self):
        return "Cone(rank=%d, rays=%r)" % (self.rank, list(self.rays))

    def to_json(self) -> dict:
        return {"rank": self.rank, "rays": [list(r) for r in self.rays]}

    @classmethod
    def from_json(cls, data: dict) -> "Cone":
        return cls.from_generators(int(data["rank"]), [tuple(r) for r in data["rays"]])


def cone_from_generators(rank: int, generators: Iterable[Sequence]) -> Cone:
    return Cone.from_generators(rank, generators)


def dual_cone(c: Cone) -> Cone:
    """The dual cone; its rays are the facets of c and vice versa."""
    return c.dual()


def is_strongly_convex(c: Cone) -> bool:
    return c.is_strongly_convex()


def cone_dimension(c: Cone) -> int:
    return c.dimension()


# ---------------------------------------------------------------------------
# Polyhedra

_EMPTY_MARK = "empty"


@dataclass(frozen=True)
class MinResult:
    value: Fraction
    floor: int
    argmin: tuple


class Polyhedron:
    """Convex rational polyhedron conv(vertices) + cone(rays) (+ lines).

    Canonical data: vertices are Fraction tuples sorted lexicographically,
    recession rays and lines are primitive integer tuples, inequalities are
    jointly-primitive integer pairs (normal, offset) meaning
    <normal, x> + offset >= 0.  The empty polyhedron carries the single
    inconsistent inequality (0, -1).
    """

    __slots__ = ("rank", "vertices", "rays", "lines", "inequalities", "_hash")

    def __init__(self, rank, vertices, rays, lines, inequalities):
        self.rank = rank
        self.vertices = tuple(tuple(Fraction(x) for x in v) for v in vertices)
        self.rays = tuple(tuple(r) for r in rays)
        self.lines = tuple(tuple(l) for l in lines)
        self.inequalities = tuple((tuple(u), int(c)) for u, c in inequalities)
        self._hash = None

    # -- constructors

    @classmethod
    def empty(cls, rank: int) -> "Polyhedron":
        return cls(rank, (), (), (), (((0,) * rank, -1),))

    @classmethod
    def from_points_and_rays(cls, rank: int, points: Iterable[Sequence],
                             rays: Iterable[Sequence] = ()) -> "Polyhedron":
        pts = [fraction_vector(p) for p in points]
        rs = [tuple(r) for r in rays]
        if not pts:
            raise ValueError("empty input: a hull needs at least one point")
        for p in pts:
            if len(p) != rank:
                raise ValueError("point %r does not live in rank %d" % (p, rank))
        gens = set()
        for p in pts:
            den = math.lcm(*[f.denominator for f in p]) if p else 1
            gens.add(tuple(int(f * den) for f in p) + (den,))
        for r in rs:
            if is_zero(r):
                raise ZeroVectorError("ZeroVector: zero recession direction")
            gens.add(primitive(r) + (0,))
        pointed, lines, fac_p, fac_l = _vh_pipeline(rank + 1, sorted(gens))
        return cls._from_homogeneous(rank, pointed, lines, fac_p, fac_l)

    @classmethod
    def from_inequalities(cls, rank: int, inequalities: Iterable[tuple]) -> "Polyhedron":
        normals = set()
        for u, c in inequalities:
            row = fraction_vector(tuple(u) + (c,))
            if all(f == 0 for f in row):
                continue
            if all(f == 0 for f in row[:-1]):
                if row[-1] < 0:
                    return cls.empty(rank)
                continue
            normals.add(primitive(row))
        normals.add((0,) * rank + (1,))  # homogenizing halfspace
        pointed, lines, fac_p, fac_l = _hv_pipeline(rank + 1, sorted(normals))
        return cls._from_homogeneous(rank, pointed, lines, fac_p, fac_l)

    @classmethod
    def _from_homogeneous(cls, rank, pointed, lines, fac_p, fac_l):
        verts, rec = [], []
        for r in pointed:
            if r[-1] > 0:
                verts.append(tuple(Fraction(x, r[-1]) for x in r[:-1]))
            else:
                rec.append(r[:-1])
        if not verts:
            return cls.empty(rank)
        plines = [l[:-1] for l in lines]  # lineality is orthogonal to the height normal
        height = (0,) * rank + (1,)
        ineqs = []
        for f in _fold(fac_p, fac_l):
            if f == height:
                continue
            ineqs.append((f[:-1], f[-1]))
        return cls(rank, sorted(verts), sorted(rec), plines, sorted(ineqs))

    # -- basic queries

    @property
    def is_empty(self) -> bool:
        return not self.vertices and not self.rays and not self.lines

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lines

    @property
    def is_lattice(self) -> bool:
        """True if every vertex is a lattice point."""
        return all(is_integral(v) for v in self.vertices)

    def contains(self, x: Sequence) -> bool:
        if self.is_empty:
            return False
        return all(dot(u, x) + c >= 0 for u, c in self.inequalities)

    def affine_dimension(self) -> int:
        if self.is_empty:
            return -1
        v0 = self.vertices[0]
        rows = [vsub(v, v0) for v in self.vertices[1:]]
        rows += list(self.rays) + list(self.lines)
        return matrix_rank(rows)

    def translate(self, vec: Sequence) -> "Polyhedron":
        if self.is_empty:
            return self
        return Polyhedron(self.rank, sorted(vadd(v, vec) for v in self.vertices),
                          self.rays, self.lines,
                          sorted((u, c - as_int_or_raise(dot(u, vec))) for u, c in self.inequalities))

    def scale(self, factor) -> "Polyhedron":
        """Dilate a bounded polyhedron by a positive rational factor."""
        f = Fraction(factor)
        if f <= 0:
            raise ValueError("scale factor must be positive")
        if self.is_empty:
            return self
        if not self.is_bounded:
            raise UnboundedError("Unbounded: refusing to scale an unbounded polyhedron")
        return Polyhedron.from_points_and_rays(
            self.rank, [tuple(f * x for x in v) for v in self.vertices])

    def lattice_vertices(self) -> tuple:
        return tuple(as_int_vector(v) for v in self.vertices)

    def to_json(self) -> dict:
        data = {
            "vertices": [[[x.numerator, x.denominator] for x in v] for v in self.vertices],
            "rays": [list(r) for r in self.rays],
        }
        if self.is_empty or self.lines:
            data["rank"] = self.rank
            data["lines"] = [list(l) for l in self.lines]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Polyhedron":
        verts = [tuple(Fraction(int(num), int(den)) for num, den in v) for v in data["vertices"]]
        rays = [tuple(r) for r in data.get("rays", [])]
        if not verts:
            if "rank" not in data:
                raise ValueError("empty polyhedron serialization needs a rank")
            return cls.empty(int(data["rank"]))
        rank = len(verts[0])
        lines = [tuple(l) for l in data.get("lines", [])]
        if lines:
            rays = list(rays) + lines + [vneg(l) for l in lines]
        return cls.from_points_and_rays(rank, verts, rays)

    def __eq__(self, other):
        return (isinstance(other, Polyhedron) and self.rank == other.rank
                and self.vertices == other.vertices and self.rays == other.rays
                and self.lines == other.lines and self.inequalities == other.inequalities)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.vertices, self.rays, self.lines))
        return self._hash

    def __add__(self, other):
        return minkowski_sum(self, other)

    def __repr__(self):
        if self.is_empty:
            return "Polyhedron(empty, rank=%d)" % self.rank
        return "Polyhedron(vertices=%r, rays=%r)" % (
            [tuple(str(x) for x in v) for v in self.vertices], list(self.rays))


def as_int_or_raise(x) -> int:
    f = Fraction(x)
    if f.denominator != 1:
        raise ValueError("expected an integer, got %s" % x)
    return int(f)


def convex_hull(rank: int, points: Iterable[Sequence], rays: Iterable[Sequence] = ()) -> Polyhedron:
    return Polyhedron.from_points_and_rays(rank, points, rays)


def minkowski_sum(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    if a.rank != b.rank:
        raise ValueError("rank mismatch in Minkowski sum")
    if a.is_empty or b.is_empty:
        return Polyhedron.empty(a.rank)
    pts = [vadd(u, v) for u in a.vertices for v in b.vertices]
    rays = list(a.rays) + list(b.rays)
    for l in list(a.lines) + list(b.lines):
        rays += [l, vneg(l)]
    return Polyhedron.from_points_and_rays(a.rank, pts, rays)


def polyhedron_equal(a: Polyhedron, b: Polyhedron) -> bool:
    return a == b


def min_functional(p: Polyhedron, u: Sequence) -> MinResult:
    """Exact minimum of <u, .> over p, its floor, and the lex-least argmin vertex."""
    if p.is_empty:
        raise ValueError("min over the empty polyhedron")
    for r in p.rays:
        if dot(u, r) < 0:
            raise UnboundedError("UnboundedBelow: functional decreases along recession ray %r" % (r,))
    for l in p.lines:
        if dot(u, l) != 0:
            raise UnboundedError("UnboundedBelow: functional varies along a line")
    best = None
    arg = None
    for v in p.vertices:
        val = Fraction(dot(u, v))
        if best is None or val < best or (val == best and v < arg):
            best, arg = val, v
    return MinResult(value=best, floor=math.floor(best), argmin=arg)


def lattice_points(p: Polyhedron) -> tuple:
    """All lattice points of a bounded polyhedron, sorted lexicographically."""
    if p.is_empty:
        return ()
    if not p.is_bounded:
        raise UnboundedError("Unbounded: lattice point enumeration needs a polytope")
    lo = [math.floor(min(v[i] for v in p.vertices)) for i in range(p.rank)]
    hi = [math.ceil(max(v[i] for v in p.vertices)) for i in range(p.rank)]
    out = []
    point = [0] * p.rank

    def scan(i):
        if i == p.rank:
            if p.contains(tuple(point)):
                out.append(tuple(point))
            return
        for x in range(lo[i], hi[i] + 1):
            point[i] = x
            scan(i + 1)

    scan(0)
    return tuple(out)


def membership_scaling(q: Polyhedron, v: Sequence) -> bool:
    """True iff some positive scaling v / lam lies in q (i.e. v is in R+ . q).

    With 0 not in q, v = 0 is never scalable.
    """
    if is_zero(v):
        return False
    lower = []
    upper = []
    for u, c in q.inequalities:
        s = Fraction(dot(u, v))
        if c == 0:
            if s < 0:
                return False
        elif c > 0:
            lower.append(-s / c)
        else:
            upper.append(s / -c)
    if not upper:
        return True
    hi = min(upper)
    lo = max(lower) if lower else Fraction(0)
    if lo > 0:
        return lo <= hi
    return hi > 0


# ---------------------------------------------------------------------------
# Fans


@dataclass(frozen=True)
class Fan:
    """A fan given by its rays and maximal cones (index tuples into rays)."""

    rank: int
    rays: tuple
    maximal_cones: tuple

    def to_json(self) -> dict:
        return {"rank": self.rank, "rays": [list(r) for r in self.rays],
                "maximal_cones": [list(c) for c in self.maximal_cones]}


def normal_fan(p: Polyhedron) -> Fan:
    """Inner-normal fan of a full-dimensional polytope.

    The rays are the primitive facet normals; the maximal cone at a vertex
    is spanned by the normals of the facets through it.
    """
    if p.is_empty or not p.is_bounded:
        raise UnboundedError("Unbounded: normal fan needs a polytope")
    if p.affine_dimension() != p.rank:
        raise ValueError("normal fan needs a full-dimensional polytope")
    rays = sorted(primitive(u) for u, _ in p.inequalities)
    index = {r: i for i, r in enumerate(rays)}
    cones = set()
    for v in p.vertices:
        tight = tuple(sorted(index[primitive(u)] for u, c in p.inequalities
                             if dot(u, v) + c == 0))
        cones.add(tight)
    return Fan(rank=p.rank, rays=tuple(rays), maximal_cones=tuple(sorted(cones)))
