"""Mutations of Fano polytopes and the induced one-parameter pencil.

A mutation datum on a Fano polytope P is a primitive direction w plus a
lattice polytope F orthogonal to w.  At every negative height h the
slice of P must factor as G_h + (-h)F up to lattice hulls; the mutation
rebuilds the polytope from the factors below level zero and from the
shifted slices above.  The pencil glues the original and mutated
polytopes into one polytope Q~ one dimension up; its normal fan carries
a trinomial a,b,c family whose distinguished fibers recover both toric
pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .cox import (
    CoxPolynomial,
    CoxSystem,
    Term,
    cox_system,
    disjoint_support_regular_sequence,
    is_homogeneous,
    monomial,
)
from .datum import DeformationDatum, build_datum
from .lattice import dot, primitive
from .polyhedral import (
    Cone,
    Fan,
    Polyhedron,
    convex_hull,
    lattice_points,
    minkowski_sum,
    normal_fan,
)
from .projective import (
    PolarizedToricVariety,
    ProjectiveTilde,
    check_fano_polytope,
    projective_tilde,
)


class MutationDatumError(ValueError):
    def __init__(self, height, detail):
        self.height = height
        super().__init__("NoFactorAtHeight %d: %s" % (height, detail))


class MutationFamilyError(ValueError):
    pass


class OutsideVError(ValueError):
    def __init__(self, point):
        self.point = point
        super().__init__(
            "OutsideV: parameter point [%s] is deleted from the base"
            % ":".join(str(x) for x in point))


@dataclass(frozen=True)
class FanoPolytope:
    polytope: Polyhedron
    n: int

    def vertices(self) -> tuple:
        return tuple(tuple(int(x) for x in v) for v in self.polytope.vertices)


def validate_fano(p: Polyhedron) -> FanoPolytope:
    check_fano_polytope(p)
    return FanoPolytope(polytope=p, n=p.rank)


@dataclass(frozen=True)
class WitnessLayer:
    height: int
    factor_part: Optional[Polyhedron]  # G_h; None for an empty layer
    difference_region: Optional[Polyhedron]  # D_h
    slice_hull: Optional[Polyhedron]  # conv of lattice points at this height
    polytope_vertices: tuple  # vertices of P at this height


@dataclass(frozen=True)
class MutationDatum:
    w: tuple
    factor: Polyhedron
    witnesses: tuple  # WitnessLayer per height hmin..-1
    hmin: int
    hmax: int


def _slice_polyhedron(p: Polyhedron, w, h: int) -> Polyhedron:
    ineqs = list(p.inequalities)
    ineqs.append((tuple(w), -h))
    ineqs.append((tuple(-x for x in w), h))
    return Polyhedron.from_inequalities(p.rank, ineqs)


def validate_mutation_datum(fano: FanoPolytope, w: Sequence[int],
                            factor: Polyhedron) -> MutationDatum:
    """Factor every negative-height slice, or fail naming the height.

    The factor candidate at height h is conv(D_h with N) where D_h is
    the region of translations x with x + (-h)F inside the lattice hull
    of the slice; both defining inclusions are then re-checked.
    """
    n = fano.n
    w = tuple(int(x) for x in w)
    if not any(w):
        raise ValueError("direction must be nonzero")
    if primitive(w) != w:
        raise ValueError("direction %s is not primitive" % (w,))
    if factor.rank != n or factor.is_empty:
        raise ValueError("factor must be a nonempty polytope of full rank")
    if not factor.is_bounded or not factor.is_lattice:
        raise ValueError("factor must be a bounded lattice polytope")
    for v in factor.vertices:
        if dot(w, v) != 0:
            raise ValueError(
                "factor vertex %s does not pair to zero with the direction"
                % (tuple(v),))

    p = fano.polytope
    heights = [dot(w, v) for v in fano.vertices()]
    hmin, hmax = min(heights), max(heights)
    layers = []
    fverts = [tuple(int(x) for x in v) for v in factor.vertices]
    for h in range(hmin, 0):
        at_h = tuple(v for v in fano.vertices() if dot(w, v) == h)
        spts = lattice_points(_slice_polyhedron(p, w, h))
        if not spts:
            layers.append(WitnessLayer(h, None, None, None, at_h))
            continue
        shull = convex_hull(n, spts)
        dineqs = []
        for u, c in shull.inequalities:
            for f in fverts:
                dineqs.append((u, c + (-h) * dot(u, f)))
        dregion = Polyhedron.from_inequalities(n, dineqs)
        gpts = () if dregion.is_empty else lattice_points(dregion)
        g = convex_hull(n, gpts) if gpts else None
        if at_h and g is None:
            raise MutationDatumError(h, "uncovered vertex %s" % (at_h[0],))
        if g is not None:
            scaled = convex_hull(
                n, [tuple(-h * x for x in f) for f in fverts])
            summed = minkowski_sum(g, scaled)
            for v in at_h:
                if not summed.contains(v):
                    raise MutationDatumError(h, "uncovered vertex %s" % (v,))
            for mv in summed.vertices:
                if not shull.contains(mv):
                    raise MutationDatumError(
                        h, "witness escapes the slice hull at %s"
                        % (tuple(mv),))
        layers.append(WitnessLayer(h, g, dregion, shull, at_h))
    return MutationDatum(w=w, factor=factor, witnesses=tuple(layers),
                         hmin=hmin, hmax=hmax)


def _mutant_points(fano: FanoPolytope, d: MutationDatum,
                   negative_parts: dict) -> list:
    n = fano.n
    fverts = [tuple(int(x) for x in v) for v in d.factor.vertices]
    pts = []
    for layer in d.witnesses:
        g = negative_parts.get(layer.height)
        if g is not None:
            pts.extend(tuple(int(x) for x in v) for v in g.vertices)
    for h in range(0, d.hmax + 1):
        spts = lattice_points(_slice_polyhedron(fano.polytope, d.w, h))
        for s in spts:
            for f in fverts:
                pts.append(tuple(s[i] + h * f[i] for i in range(n)))
    return pts


def mutate(fano: FanoPolytope, d: MutationDatum) -> FanoPolytope:
    """Hull of the negative-height factors and the shifted upper slices.

    The result must again be Fano, and must not depend on the witness
    choice: it is recomputed with the smallest admissible factors (hulls
    of the vertex-covering translates) and compared.
    """
    n = fano.n
    canonical = {
        layer.height: layer.factor_part for layer in d.witnesses}
    mut = convex_hull(n, _mutant_points(fano, d, canonical))

    # alternative minimal witnesses: only translates that actually cover
    # a vertex of P at that height
    fverts = [tuple(int(x) for x in v) for v in d.factor.vertices]
    minimal = {}
    for layer in d.witnesses:
        if layer.factor_part is None:
            minimal[layer.height] = None
            continue
        cover = []
        for v in layer.polytope_vertices:
            for f in fverts:
                cand = tuple(v[i] - (-layer.height) * f[i] for i in range(n))
                if layer.difference_region.contains(cand):
                    cover.append(cand)
        minimal[layer.height] = convex_hull(n, cover) if cover else None
    alt = convex_hull(n, _mutant_points(fano, d, minimal))
    if alt != mut:
        raise MutationFamilyError(
            "mutation depends on the witness choice; factors are not sound")
    return validate_fano(mut)


@dataclass(frozen=True)
class MutationFamily:
    fano: FanoPolytope
    datum: MutationDatum
    mutated: FanoPolytope
    q_tilde: Polyhedron
    fan: Fan
    cox: CoxSystem
    trinomial: CoxPolynomial
    monomial: CoxPolynomial
    induced: ProjectiveTilde
    induced_datum: DeformationDatum
    upper_vertices: tuple  # vertices of P at height >= 0
    lower_vertices: tuple  # vertices of the mutation at height < 0

    def weights(self) -> tuple:
        return self.cox.weights()


def induced_boundary_datum(fano: FanoPolytope,
                           d: MutationDatum) -> DeformationDatum:
    """Lift the witness factors to height one and package them as a
    two-summand boundary datum over the cone of the polytope."""
    n = fano.n
    tau = Cone.from_generators(
        n + 1, [v + (1,) for v in fano.vertices()])
    gpts = []
    for layer in d.witnesses:
        if layer.factor_part is None:
            continue
        s = Fraction(1, -layer.height)
        for v in layer.factor_part.vertices:
            gpts.append(tuple(x * s for x in v) + (s,))
    if not gpts:
        raise MutationFamilyError("no negative-height factors to lift")
    g = convex_hull(n + 1, gpts)
    f_hat = convex_hull(
        n + 1, [tuple(int(x) for x in v) + (0,) for v in d.factor.vertices])
    w_bar = tuple(d.w) + (0,)
    return build_datum(tau, [g, f_hat], w_bar, boundary=True)


def mutation_family(fano: FanoPolytope, d: MutationDatum) -> MutationFamily:
    n = fano.n
    mutated = mutate(fano, d)
    upper = tuple(sorted(
        v for v in fano.vertices() if dot(d.w, v) >= 0))
    lower = tuple(sorted(
        v for v in mutated.vertices() if dot(d.w, v) < 0))
    fverts = tuple(sorted(
        tuple(int(x) for x in v) for v in d.factor.vertices))

    ineqs = [(v + (0,), 1) for v in upper]
    ineqs += [(v + (dot(d.w, v),), 1) for v in lower]
    ineqs += [(f + (1,), 0) for f in fverts]
    q_tilde = Polyhedron.from_inequalities(n + 1, ineqs)
    if q_tilde.is_empty or not q_tilde.is_bounded:
        raise MutationFamilyError("glued polytope is not bounded")
    if q_tilde.affine_dimension() != n + 1:
        raise MutationFamilyError("glued polytope is not full-dimensional")

    fan = normal_fan(q_tilde)
    predicted = tuple(sorted(
        set(v + (0,) for v in upper)
        | set(v + (dot(d.w, v),) for v in lower)
        | set(f + (1,) for f in fverts)))
    if fan.rays != predicted:
        raise MutationFamilyError(
            "normal fan rays %s differ from the predicted list %s"
            % (fan.rays, predicted))

    sys = cox_system(fan.rays, n + 1, parameters=("a", "b", "c"))
    index = {r: j for j, r in enumerate(fan.rays)}
    m = len(fan.rays)

    def exps(assign) -> tuple:
        out = [0] * m
        for ray, e in assign:
            out[index[ray]] = e
        return tuple(out)

    a_term = Term(Fraction(1), "a",
                  exps((v + (0,), dot(d.w, v)) for v in upper))
    b_term = Term(Fraction(1), "b",
                  exps((v + (dot(d.w, v),), -dot(d.w, v)) for v in lower))
    c_term = Term(Fraction(1), "c", exps((f + (1,), 1) for f in fverts))
    trinomial = CoxPolynomial(terms=(a_term, b_term, c_term))
    mono = monomial(exps(
        [(v + (0,), 1) for v in upper]
        + [(v + (dot(d.w, v),), 1) for v in lower]))

    ok, _ = is_homogeneous(sys, trinomial)
    if not ok:
        raise MutationFamilyError("trinomial is not grading-homogeneous")
    if not disjoint_support_regular_sequence([trinomial], mono):
        raise MutationFamilyError("trinomial and monomial share a variable "
                                  "in every term")

    datum = induced_boundary_datum(fano, d)
    v_pol = PolarizedToricVariety.from_fano_polytope(fano.polytope)
    induced = projective_tilde(v_pol, datum)
    if set(induced.fan.rays) != set(fan.rays):
        raise MutationFamilyError(
            "induced construction produced different ambient rays")
    _cross_check_equations(induced, trinomial, mono)

    return MutationFamily(fano=fano, datum=d, mutated=mutated,
                          q_tilde=q_tilde, fan=fan, cox=sys,
                          trinomial=trinomial, monomial=mono,
                          induced=induced, induced_datum=datum,
                          upper_vertices=upper, lower_vertices=lower)


def _cross_check_equations(induced: ProjectiveTilde,
                           trinomial: CoxPolynomial,
                           mono: CoxPolynomial) -> None:
    """The pencil trinomial must be the induced trinomial under the
    parameter dictionary a = -t1, b = -1, c = +1, exponent for exponent;
    likewise the monomials must agree."""
    tri = induced.trinomials[0]
    y_term, z_term, t_term = tri.terms
    a_term, b_term, c_term = trinomial.terms
    if y_term.exps != c_term.exps or z_term.exps != b_term.exps \
            or t_term.exps != a_term.exps:
        raise MutationFamilyError(
            "pencil equations disagree with the induced construction")
    if induced.boundary is None \
            or induced.boundary.terms[0].exps != mono.terms[0].exps:
        raise MutationFamilyError(
            "pencil monomial disagrees with the induced boundary monomial")


# ---------------------------------------------------------------------------
# Fibers


@dataclass(frozen=True)
class FiberReport:
    point: tuple
    polynomial: CoxPolynomial
    monomial: CoxPolynomial
    kind: str  # "original", "mutated", or "generic"
    matched: Optional[bool]
    detail: str

    def to_json(self) -> dict:
        return {"point": [str(x) for x in self.point],
                "polynomial": self.polynomial.to_json(),
                "monomial": self.monomial.to_json(),
                "kind": self.kind,
                "matched": self.matched,
                "detail": self.detail}


def normalize_parameter_point(point) -> tuple:
    vals = [Fraction(x) for x in point]
    if len(vals) != 3 or all(x == 0 for x in vals):
        raise ValueError("need a homogeneous triple, not all zero")
    den = lcm(*(x.denominator for x in vals))
    ints = [int(x * den) for x in vals]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def specialize_fiber(fam: MutationFamily, point) -> FiberReport:
    """Substitute [a:b:c]; the two distinguished points are compared
    against the binomials of the corresponding toric pairs."""
    norm = normalize_parameter_point(point)
    if norm in ((1, 0, 0), (0, 1, 0)):
        raise OutsideVError(norm)
    a, b, c = norm
    poly = fam.trinomial.substitute({"a": a, "b": b, "c": c})
    if norm == (0, 1, -1):
        target = fam.induced.binomials[0]
        matched = poly.proportional(target)
        return FiberReport(point=norm, polynomial=poly, monomial=fam.monomial,
                           kind="original", matched=matched,
                           detail="compared against the binomial of the "
                                  "height-one construction")
    if norm == (1, 0, -1):
        matched, detail = _compare_with_inverse(fam, poly)
        return FiberReport(point=norm, polynomial=poly, monomial=fam.monomial,
                           kind="mutated", matched=matched, detail=detail)
    return FiberReport(point=norm, polynomial=poly, monomial=fam.monomial,
                       kind="generic", matched=None,
                       detail="fiber of the pencil at a generic point")


def _compare_with_inverse(fam: MutationFamily, poly: CoxPolynomial):
    """Transport along (nu, m) -> (nu, m - <w, nu>) into the family of the
    inverse mutation and compare with its induced binomial."""
    n = fam.fano.n
    w = fam.datum.w
    inv_datum = validate_mutation_datum(
        fam.mutated, tuple(-x for x in w), fam.datum.factor)
    inv_fam = mutation_family(fam.mutated, inv_datum)
    if inv_fam.mutated.polytope != fam.fano.polytope:
        return False, "inverse mutation failed to recover the polytope"
    mapped = {}
    for j, ray in enumerate(fam.fan.rays):
        img = ray[:n] + (ray[n] - dot(w, ray[:n]),)
        mapped[j] = img
    index = {r: j for j, r in enumerate(inv_fam.fan.rays)}
    terms = []
    for t in poly.terms:
        out = [0] * len(inv_fam.fan.rays)
        for j, e in enumerate(t.exps):
            if not e:
                continue
            img = mapped[j]
            if img not in index:
                return False, ("support ray %s has no image in the inverse "
                               "family" % (img,))
            out[index[img]] = e
        terms.append(Term(t.coeff, t.param, tuple(out)))
    transported = CoxPolynomial(terms=tuple(terms))
    target = inv_fam.induced.binomials[0]
    return transported.proportional(target), (
        "transported into the inverse family and compared against its "
        "height-one binomial")
