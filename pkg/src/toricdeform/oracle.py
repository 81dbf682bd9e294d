"""Bounded brute-force checks for the semigroup side of the pipeline.

Everything here enumerates lattice points up to an explicit degree bound
and decides ideal membership only through the constructive certificates
(cofactor monomials and index multisets), never by general reduction.
The reports are approximations by design: they certify no failure below
the bound, not a full proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .lattice import dot
from .polyhedral import (
    Cone,
    Polyhedron,
    cone_dimension,
    dual_cone,
    is_strongly_convex,
    lattice_points,
)


@dataclass(frozen=True)
class HilbertBasis:
    cone: Cone
    generators: tuple
    functional: tuple
    bound: int
    certificate_bound: int
    complete: bool  # bound >= certificate_bound, so nothing was truncated

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.generators],
                "functional": list(self.functional),
                "bound": self.bound,
                "certificate_bound": self.certificate_bound,
                "complete": self.complete}


def _require_pointed_full(c: Cone) -> None:
    if not is_strongly_convex(c):
        raise ValueError("cone is not strongly convex")
    if cone_dimension(c) != c.rank:
        raise ValueError("cone is not full-dimensional")


def _graded_points(c: Cone, functional, bound: int) -> tuple:
    ineqs = [(u, 0) for u in dual_cone(c).rays]
    ineqs.append((tuple(-x for x in functional), bound))
    return lattice_points(Polyhedron.from_inequalities(c.rank, ineqs))


def hilbert_basis(c: Cone, functional: Optional[Sequence] = None,
                  bound: int = 12) -> HilbertBasis:
    """Irreducible semigroup generators of the cone's lattice points.

    Enumerates all points with functional value up to the bound and
    strips every point that splits as a sum of two nonzero ones.  The
    certificate bound is the functional's total on the primitive ray
    generators; any basis element lies under it, so reaching it proves
    the list complete.
    """
    _require_pointed_full(c)
    if functional is None:
        facets = dual_cone(c).rays
        functional = tuple(sum(u[i] for u in facets)
                           for i in range(c.rank))
    else:
        functional = tuple(int(x) for x in functional)
    for ray in c.rays:
        if dot(functional, ray) <= 0:
            raise ValueError(
                "functional %s is not strictly positive on the cone"
                % (functional,))
    pts = [p for p in _graded_points(c, functional, bound) if any(p)]
    pts.sort(key=lambda p: (dot(functional, p), p))
    ptset = set(pts)
    gens = []
    for p in pts:
        gp = dot(functional, p)
        reducible = False
        for a in pts:
            # a scan over half the grade finds any split p = a + b
            if dot(functional, a) * 2 > gp:
                break
            b = tuple(p[i] - a[i] for i in range(c.rank))
            if any(b) and b in ptset:
                reducible = True
                break
        if not reducible:
            gens.append(p)
    cert = sum(dot(functional, r) for r in c.rays)
    return HilbertBasis(cone=c, generators=tuple(sorted(gens)),
                        functional=functional, bound=bound,
                        certificate_bound=cert, complete=bound >= cert)


def interior_points(c: Cone, bound: int = 12) -> tuple:
    """Lattice points with every facet pairing between 1 and the bound."""
    _require_pointed_full(c)
    ineqs = []
    for u in dual_cone(c).rays:
        ineqs.append((u, -1))
        ineqs.append((tuple(-x for x in u), bound))
    return lattice_points(Polyhedron.from_inequalities(c.rank, ineqs))


# ---------------------------------------------------------------------------
# Ideal-equality checks on the extended cone


@dataclass(frozen=True)
class KernelWitness:
    r: tuple
    s: tuple
    shifts: tuple  # a_i = r[n+i] - s[n+i]
    q: tuple
    cofactor_r: tuple  # p with exps(r) = p + sum a_i^+ * yexps_i
    cofactor_s: tuple

    def to_json(self) -> dict:
        return {"r": list(self.r), "s": list(self.s),
                "shifts": list(self.shifts), "q": list(self.q),
                "cofactor_r": list(self.cofactor_r),
                "cofactor_s": list(self.cofactor_s)}


@dataclass(frozen=True)
class OracleReport:
    checked: int
    failures: tuple
    witnesses: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"checked": self.checked,
                "failures": [f if isinstance(f, dict) else f.to_json()
                             for f in self.failures]}


def _tilde_exp_tables(t):
    n, k, rays = t.n, t.k, t.rays
    yexps = []
    zexps = []
    for i in range(k):
        yexps.append(tuple(max(r[n + i], 0) for r in rays))
        zexps.append(tuple(max(-r[n + i], 0) for r in rays))
    return yexps, zexps


def _character_points(t, bound: int) -> tuple:
    nk = t.n + t.k
    ineqs = [(xi, 0) for xi in t.rays]
    total = tuple(-sum(xi[i] for xi in t.rays) for i in range(nk))
    ineqs.append((total, bound))
    return lattice_points(Polyhedron.from_inequalities(nk, ineqs))


def degree_zero_equality_check(t, bound: int = 12) -> OracleReport:
    """Characters with equal N-projection must differ by the binomials.

    For each pair r, s the recipe drops the positive shifts onto q,
    checks q stays in the dual cone, and factors both Cox monomials with
    explicit cofactors; a failure of any of these is reported.
    """
    n, k = t.n, t.k
    rays = t.rays
    yexps, zexps = _tilde_exp_tables(t)
    pts = _character_points(t, bound)
    buckets = {}
    for p in pts:
        buckets.setdefault(p[:n], []).append(p)

    def exps(v):
        return tuple(dot(v, xi) for xi in rays)

    checked = 0
    failures = []
    witnesses = []
    for group in buckets.values():
        for a in range(len(group)):
            for b in range(a, len(group)):
                r, s = group[a], group[b]
                checked += 1
                shifts = tuple(r[n + i] - s[n + i] for i in range(k))
                q = list(r)
                for i in range(k):
                    if shifts[i] > 0:
                        q[n + i] -= shifts[i]
                q = tuple(q)
                eq = exps(q)
                if any(e < 0 for e in eq):
                    failures.append({"r": list(r), "s": list(s),
                                     "reason": "q outside the dual cone",
                                     "q": list(q)})
                    continue
                er, es = exps(r), exps(s)
                pr = list(er)
                ps = list(es)
                for i in range(k):
                    if shifts[i] > 0:
                        for j in range(len(rays)):
                            pr[j] -= shifts[i] * yexps[i][j]
                    elif shifts[i] < 0:
                        for j in range(len(rays)):
                            ps[j] -= (-shifts[i]) * yexps[i][j]
                if any(e < 0 for e in pr) or any(e < 0 for e in ps):
                    failures.append({"r": list(r), "s": list(s),
                                     "reason": "cofactor not a monomial"})
                    continue
                # both cofactor-times-z products must land on exps(q)
                okr = all(
                    pr[j] + sum(max(shifts[i], 0) * zexps[i][j]
                                for i in range(k)) == eq[j]
                    for j in range(len(rays)))
                oks = all(
                    ps[j] + sum(max(-shifts[i], 0) * zexps[i][j]
                                for i in range(k)) == eq[j]
                    for j in range(len(rays)))
                if not (okr and oks):
                    failures.append({"r": list(r), "s": list(s),
                                     "reason": "factorization mismatch"})
                    continue
                witnesses.append(KernelWitness(
                    r=r, s=s, shifts=shifts, q=q,
                    cofactor_r=tuple(pr), cofactor_s=tuple(ps)))
    return OracleReport(checked=checked, failures=tuple(failures),
                        witnesses=tuple(witnesses))


def revalidate_witness(t, w: KernelWitness) -> bool:
    """Re-check a witness by plain exponent arithmetic."""
    n, k = t.n, t.k
    rays = t.rays
    yexps, zexps = _tilde_exp_tables(t)

    def exps(v):
        return tuple(dot(v, xi) for xi in rays)

    er, es, eq = exps(w.r), exps(w.s), exps(w.q)
    if any(e < 0 for e in er + es + eq):
        return False
    if any(e < 0 for e in w.cofactor_r + w.cofactor_s):
        return False
    for j in range(len(rays)):
        up = sum(max(w.shifts[i], 0) * yexps[i][j] for i in range(k))
        dn = sum(max(-w.shifts[i], 0) * yexps[i][j] for i in range(k))
        upz = sum(max(w.shifts[i], 0) * zexps[i][j] for i in range(k))
        dnz = sum(max(-w.shifts[i], 0) * zexps[i][j] for i in range(k))
        if w.cofactor_r[j] + up != er[j]:
            return False
        if w.cofactor_s[j] + dn != es[j]:
            return False
        if w.cofactor_r[j] + upz != eq[j]:
            return False
        if w.cofactor_s[j] + dnz != eq[j]:
            return False
    return True


def boundary_equality_check(t, bound: int = 12) -> OracleReport:
    """Interior characters are exactly the ones the boundary ideal sees.

    A character passes through the ideal either because the full
    boundary monomial divides it, or because some y_i divides it along
    with the variables sitting over the rays of the base cone.
    """
    if not t.datum.boundary:
        raise ValueError("boundary comparison needs a boundary datum")
    n, k = t.n, t.k
    rays = t.rays
    yexps, _ = _tilde_exp_tables(t)
    z_mask = tuple(
        1 if all(r[n + i] <= 0 for i in range(k)) else 0 for r in rays)
    zs_mask = tuple(
        1 if all(r[n + i] == 0 for i in range(k)) else 0 for r in rays)
    sigma_rays = t.datum.sigma.rays
    pts = _character_points(t, bound)
    failures = []
    for u_t in pts:
        u = u_t[:n]
        interior = all(dot(u, rho) >= 1 for rho in sigma_rays)
        e = tuple(dot(u_t, xi) for xi in rays)
        in_ideal = all(e[j] >= z_mask[j] for j in range(len(rays)))
        if not in_ideal:
            for i in range(k):
                if all(e[j] >= yexps[i][j] for j in range(len(rays))) \
                        and all(e[j] >= zs_mask[j]
                                for j in range(len(rays))):
                    in_ideal = True
                    break
        if interior != in_ideal:
            failures.append({"u_tilde": list(u_t),
                             "interior": interior,
                             "in_ideal": in_ideal})
    return OracleReport(checked=len(pts), failures=tuple(failures))
