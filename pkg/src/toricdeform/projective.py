"""Polarized projective toric pairs via cones over polytopes.

The ambient lattice is N0 = N + Z e0 with e0 the LAST coordinate.  A
polarized pair is a strongly convex full-dimensional cone tau in N0 with
e0 in its strict interior; each ray xi of tau is b*rho - a*e0 with rho a
primitive vector of N and the support function value on rho equal to
a/b.  Slicing the dual cone at e0-height 1 recovers the moment polytope.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cox import (
    CoxSystem,
    PairingData,
    binomials,
    boundary_monomial,
    cox_system,
    trinomials,
)
from .datum import DeformationDatum, TildeData, build_tilde, require_valid
from .lattice import content, dot, primitive
from .polyhedral import Cone, Fan, Polyhedron


class OriginNotInteriorError(ValueError):
    def __init__(self, detail=""):
        msg = "OriginNotInterior"
        if detail:
            msg += ": " + detail
        super().__init__(msg)


class NonPrimitiveVertexError(ValueError):
    def __init__(self, vertex):
        self.vertex = tuple(vertex)
        super().__init__("NonPrimitiveVertex: %s" % (self.vertex,))


class DivisorClass(enum.IntEnum):
    """Ordered so that stronger conditions compare larger."""

    QCARTIER_Q_DIVISOR = 0
    QCARTIER_Z_DIVISOR = 1
    CARTIER = 2

    def __str__(self):
        return {
            DivisorClass.CARTIER: "Cartier",
            DivisorClass.QCARTIER_Z_DIVISOR: "QCartierZDivisor",
            DivisorClass.QCARTIER_Q_DIVISOR: "QCartierQDivisor",
        }[self]


@dataclass(frozen=True)
class RayData:
    xi: tuple  # primitive generator of the tau-ray
    rho: tuple  # primitive N-part
    b: int  # positive: xi = b*rho - a*e0
    a: int

    @property
    def phi(self) -> Fraction:
        return Fraction(self.a, self.b)


@dataclass(frozen=True)
class PolarizedToricVariety:
    n: int
    tau: Cone
    fan: Fan
    ray_data: tuple  # aligned with fan.rays

    @property
    def phi_values(self) -> tuple:
        return tuple(rd.phi for rd in self.ray_data)

    @classmethod
    def from_cone(cls, tau: Cone) -> "PolarizedToricVariety":
        n = tau.rank - 1
        if n < 1:
            raise ValueError("ambient rank must be at least 2")
        if not tau.is_strongly_convex():
            raise ValueError("cone is not strongly convex")
        if tau.dimension() != tau.rank:
            raise ValueError("cone is not full-dimensional")
        e0 = (0,) * n + (1,)
        if not tau.interior_contains(e0):
            raise OriginNotInteriorError("distinguished vector not interior")
        data = {}
        for xi in tau.rays:
            nu = xi[:n]
            if not any(nu):
                raise ValueError("ray %s has zero N-part" % (xi,))
            rho = primitive(nu)
            j = next(i for i, x in enumerate(rho) if x)
            b = nu[j] // rho[j]
            a = -xi[n]
            if rho in data:
                raise ValueError(
                    "two rays project to the same direction %s" % (rho,))
            data[rho] = RayData(xi=xi, rho=rho, b=b, a=a)
        rays = tuple(sorted(data))
        aligned = tuple(data[r] for r in rays)
        cones = set()
        for g in tau.pointed_facets:
            if g[n] <= 0:
                raise ValueError("facet normal %s not positive on e0" % (g,))
            tight = tuple(sorted(
                i for i, rd in enumerate(aligned) if dot(g, rd.xi) == 0))
            cones.add(tight)
        fan = Fan(rank=n, rays=rays, maximal_cones=tuple(sorted(cones)))
        return cls(n=n, tau=tau, fan=fan, ray_data=aligned)

    @classmethod
    def from_fano_polytope(cls, p: Polyhedron) -> "PolarizedToricVariety":
        check_fano_polytope(p)
        n = p.rank
        tau = Cone.from_generators(
            n + 1, [tuple(int(x) for x in v) + (1,) for v in p.vertices])
        v = cls.from_cone(tau)
        expected = tuple(sorted(tuple(int(x) for x in vv) + (1,)
                                for vv in p.vertices))
        if v.tau.rays != expected:
            raise AssertionError("cone over the polytope lost a vertex ray")
        return v

    @classmethod
    def from_support_function(cls, fan: Fan,
                              phi: Sequence) -> "PolarizedToricVariety":
        """Build from per-ray rational values; verifies strict convexity
        by re-deriving the fan from the resulting cone."""
        if len(phi) != len(fan.rays):
            raise ValueError("need one value per fan ray")
        gens = []
        for rho, val in zip(fan.rays, phi):
            f = Fraction(val)
            a, b = f.numerator, f.denominator
            gens.append(tuple(b * x for x in rho) + (-a,))
        tau = Cone.from_generators(fan.rank + 1, gens)
        v = cls.from_cone(tau)
        if v.fan.rays != tuple(sorted(fan.rays)) or set(
                v.fan.maximal_cones) != _reindexed_cones(fan):
            raise ValueError("support function is not strictly convex "
                             "on the given fan")
        return v

    def facet_data(self) -> tuple:
        """Per pointed facet of tau: (normal g, rational slice point u)
        with the facet inside the hyperplane <u + e0*, .> = 0."""
        out = []
        for g in self.tau.pointed_facets:
            u = tuple(Fraction(x, g[self.n]) for x in g[:self.n])
            out.append((g, u))
        return tuple(out)

    def to_json(self) -> dict:
        return {"tau": self.tau.to_json()}


def _reindexed_cones(fan: Fan) -> set:
    order = tuple(sorted(fan.rays))
    lookup = {r: i for i, r in enumerate(order)}
    return {
        tuple(sorted(lookup[fan.rays[i]] for i in cone))
        for cone in fan.maximal_cones
    }


def check_fano_polytope(p: Polyhedron) -> Polyhedron:
    """Bounded, full-dimensional, lattice, 0 strictly interior, all
    vertices primitive."""
    if p.is_empty or not p.is_bounded:
        raise ValueError("polytope must be bounded and nonempty")
    if p.affine_dimension() != p.rank:
        raise OriginNotInteriorError("polytope is not full-dimensional")
    if not p.is_lattice:
        raise NonPrimitiveVertexError(p.vertices[0])
    for _, c in p.inequalities:
        if c <= 0:
            raise OriginNotInteriorError("0 lies on or outside a facet")
    for v in p.vertices:
        iv = tuple(int(x) for x in v)
        if content(iv) != 1:
            raise NonPrimitiveVertexError(iv)
    return p


def polytope_in_M(v: PolarizedToricVariety) -> Polyhedron:
    """Slice of the dual cone at e0-height one: one inequality per ray."""
    ineqs = [(xi[:v.n], xi[v.n]) for xi in v.tau.rays]
    return Polyhedron.from_inequalities(v.n, ineqs)


def classify_divisor(v: PolarizedToricVariety) -> DivisorClass:
    if all(g[v.n] == 1 for g in v.tau.pointed_facets):
        return DivisorClass.CARTIER
    if all(rd.b == 1 for rd in v.ray_data):
        return DivisorClass.QCARTIER_Z_DIVISOR
    return DivisorClass.QCARTIER_Q_DIVISOR


def cox_comparison(v: PolarizedToricVariety) -> tuple:
    """Exponents of the comparison map x_rho -> x_xi^b, per fan ray."""
    return tuple(rd.b for rd in v.ray_data)


# ---------------------------------------------------------------------------
# Projective deformation


@dataclass(frozen=True)
class ProjectiveTilde:
    variety: PolarizedToricVariety  # the enlarged polarized pair
    tilde: TildeData  # affine layer data in rank n+1+k
    pairings: PairingData  # over the fan rays of the enlarged pair
    cox: CoxSystem
    binomials: tuple
    trinomials: tuple
    boundary: Optional[object]
    q_tilde: Polyhedron

    @property
    def fan(self) -> Fan:
        return self.variety.fan


def projective_tilde(v: PolarizedToricVariety,
                     d: DeformationDatum) -> ProjectiveTilde:
    """Run the enlargement inside N0 + Z^k and re-polarize with e0 last.

    The datum must live over v's cone with a functional that kills e0;
    the boundary monomial is only emitted when the polarization is at
    least an integral divisor.
    """
    n = v.n
    if d.sigma != v.tau:
        raise ValueError("datum cone differs from the polarizing cone")
    if d.w[n] != 0:
        raise ValueError("functional must have zero e0-component")
    require_valid(d)
    t = build_tilde(d)
    k = d.k
    e0_tilde = (0,) * n + (1,) + (0,) * k
    if not t.cone.interior_contains(e0_tilde):
        raise OriginNotInteriorError("enlarged cone lost interiority")
    perm = list(range(n)) + list(range(n + 1, n + 1 + k)) + [n]
    permuted = [tuple(r[i] for i in perm) for r in t.cone.rays]
    tau_tilde = Cone.from_generators(n + 1 + k, permuted)
    vt = PolarizedToricVariety.from_cone(tau_tilde)
    w_cox = tuple(t.w_tilde[:n]) + tuple(t.w_tilde[n + 1:])
    pd = PairingData(n=n, k=k,
                     rays=tuple(vt.fan.rays), w_tilde=w_cox)
    sys = cox_system(pd.rays, n + k,
                     parameters=tuple("t%d" % (i + 1) for i in range(k)))
    bs = binomials(pd)
    ts = trinomials(pd)
    mono = None
    if d.boundary:
        if classify_divisor(v) < DivisorClass.QCARTIER_Z_DIVISOR:
            raise ValueError(
                "boundary requested on a polarization that is only a "
                "Q-divisor")
        mono = boundary_monomial(pd)
    return ProjectiveTilde(variety=vt, tilde=t, pairings=pd, cox=sys,
                           binomials=bs, trinomials=ts, boundary=mono,
                           q_tilde=polytope_in_M(vt))
