"""Deformation data over a strongly convex cone and the enlarged cone.

A datum consists of a full-dimensional strongly convex cone sigma in N,
a Minkowski decomposition Q = Q_0 + ... + Q_k of a polyhedron inside
sigma, and a lattice functional w.  The enlarged lattice is
N~ = N + Z^k; the enlarged cone sigma~ is generated by sigma's rays,
the vertices of Q_0 shifted by -e_1-...-e_k, and the vertices of each
Q_i shifted by e_i.  The shifted functional is
w~ = w - sum_i floor(min over Q_i of w) e_i*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lattice import dot, is_integral, primitive, vsub
from .polyhedral import (
    Cone,
    Polyhedron,
    UnboundedError,
    membership_scaling,
    min_functional,
    minkowski_sum,
)


class DatumStructureError(ValueError):
    """Malformed datum: wrong ranks, k = 0, empty summand, degenerate cone."""


@dataclass(frozen=True)
class DeformationDatum:
    sigma: Cone
    summands: tuple  # (Q_0, ..., Q_k), k >= 1
    q: Polyhedron  # the Minkowski sum, cached
    w: tuple
    boundary: bool

    @property
    def rank(self) -> int:
        return self.sigma.rank

    @property
    def k(self) -> int:
        return len(self.summands) - 1

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.to_json(),
            "summands": [s.to_json() for s in self.summands],
            "w": list(self.w),
            "boundary": self.boundary,
        }


def build_datum(sigma: Cone, summands: Sequence[Polyhedron], w: Sequence[int],
                boundary: bool = False,
                total: Optional[Polyhedron] = None) -> DeformationDatum:
    """Assemble a datum, rejecting structurally broken input outright.

    Geometric conditions are NOT checked here; that is validate_datum's
    job.  Rejected here: rank disagreements, fewer than two summands,
    empty summands, sigma not strongly convex or not full-dimensional.
    """
    n = sigma.rank
    summands = tuple(summands)
    if len(summands) < 2:
        raise DatumStructureError(
            "need at least two summands (k >= 1), got %d" % len(summands))
    for i, s in enumerate(summands):
        if s.rank != n:
            raise DatumStructureError(
                "summand %d has rank %d, cone has rank %d" % (i, s.rank, n))
        if s.is_empty:
            raise DatumStructureError("summand %d is empty" % i)
    if len(w) != n:
        raise DatumStructureError("w has length %d, expected %d" % (len(w), n))
    if any(int(x) != x for x in w):
        raise DatumStructureError("w must be a lattice vector")
    if not sigma.is_strongly_convex():
        raise DatumStructureError("cone is not strongly convex")
    if sigma.dimension() != n:
        raise DatumStructureError("cone is not full-dimensional")
    q = summands[0]
    for s in summands[1:]:
        q = minkowski_sum(q, s)
    if total is not None and total != q:
        raise DatumStructureError("supplied total polyhedron != sum of summands")
    return DeformationDatum(sigma=sigma, summands=summands, q=q,
                            w=tuple(int(x) for x in w), boundary=bool(boundary))


def datum_from_json(data: dict) -> DeformationDatum:
    sigma = Cone.from_json(data["sigma"])
    summands = [Polyhedron.from_json(s) for s in data["summands"]]
    w = tuple(int(x) for x in data["w"])
    boundary = bool(data.get("boundary", False))
    total = None
    if "Q" in data:
        total = Polyhedron.from_json(data["Q"])
    return build_datum(sigma, summands, w, boundary=boundary, total=total)


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class ConditionResult:
    label: str
    description: str
    passed: bool
    witness: Optional[str] = None

    def to_json(self) -> dict:
        out = {"label": self.label, "description": self.description,
               "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class ValidationReport:
    conditions: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failed(self) -> tuple:
        return tuple(c for c in self.conditions if not c.passed)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "conditions": [c.to_json() for c in self.conditions]}

    def __str__(self):
        lines = []
        for c in self.conditions:
            mark = "pass" if c.passed else "FAIL"
            line = "%s %s: %s" % (mark, c.label, c.description)
            if c.witness and not c.passed:
                line += " [witness: %s]" % c.witness
            lines.append(line)
        return "\n".join(lines)


def _fmt_point(v) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"


def decompose_vertex(v, summands) -> Optional[tuple]:
    """Write v as a sum of summand vertices, at most one of them non-lattice.

    Depth-first over vertex tuples with componentwise interval pruning.
    Returns the tuple of chosen vertices, or None.
    """
    rank = len(v)
    verts = [s.vertices for s in summands]
    # suffix min/max per coordinate for pruning
    lo = [[Fraction(0)] * rank for _ in range(len(summands) + 1)]
    hi = [[Fraction(0)] * rank for _ in range(len(summands) + 1)]
    for i in range(len(summands) - 1, -1, -1):
        for c in range(rank):
            values = [vv[c] for vv in verts[i]]
            lo[i][c] = min(values) + lo[i + 1][c]
            hi[i][c] = max(values) + hi[i + 1][c]
    target = tuple(Fraction(x) for x in v)

    def walk(i, acc, nonlattice):
        if i == len(summands):
            return () if all(a == t for a, t in zip(acc, target)) else None
        for cand in verts[i]:
            nl = nonlattice + (0 if is_integral(cand) else 1)
            if nl > 1:
                continue
            nxt = tuple(a + c for a, c in zip(acc, cand))
            if any(nxt[c] + lo[i + 1][c] > target[c] or
                   nxt[c] + hi[i + 1][c] < target[c] for c in range(rank)):
                continue
            rest = walk(i + 1, nxt, nl)
            if rest is not None:
                return (cand,) + rest
        return None

    return walk(0, tuple(Fraction(0) for _ in range(rank)), 0)


def validate_datum(d: DeformationDatum) -> ValidationReport:
    """Check the six defining conditions, plus the lattice condition when
    the datum claims boundary compatibility.  Failures carry witnesses."""
    results = []
    sigma, q, w = d.sigma, d.q, d.w

    # (i) Q inside sigma
    bad = None
    for v in q.vertices:
        if not sigma.contains(v):
            bad = "vertex " + _fmt_point(v)
            break
    if bad is None:
        for r in q.rays:
            if not sigma.contains(r):
                bad = "recession ray " + _fmt_point(r)
                break
        for r in q.lines:
            if bad:
                break
            if not (sigma.contains(r) and sigma.contains(vsub((0,) * d.rank, r))):
                bad = "line " + _fmt_point(r)
    results.append(ConditionResult("(i)", "Q is contained in the cone",
                                   bad is None, bad))

    # (ii) 0 not in Q
    zero = (0,) * d.rank
    hit = q.contains(zero)
    results.append(ConditionResult("(ii)", "0 does not lie in Q",
                                   not hit, _fmt_point(zero) if hit else None))

    # (iii) Q equals the Minkowski sum of the summands
    total = d.summands[0]
    for s in d.summands[1:]:
        total = minkowski_sum(total, s)
    same = total == q
    results.append(ConditionResult(
        "(iii)", "Q equals the sum of the summands", same,
        None if same else "recomputed sum differs"))

    # (iv') vertex decomposition with at most one non-lattice part
    bad = None
    for v in q.vertices:
        if decompose_vertex(v, d.summands) is None:
            bad = "vertex " + _fmt_point(v)
            break
    results.append(ConditionResult(
        "(iv')", "each vertex of Q splits into summand vertices, "
        "at most one of them non-lattice", bad is None, bad))

    # (iv) boundary flavor: Q_1..Q_k must be lattice polyhedra
    if d.boundary:
        bad = None
        for i, s in enumerate(d.summands[1:], start=1):
            if not s.is_lattice:
                bad = "summand %d has non-lattice vertex" % i
                break
        results.append(ConditionResult(
            "(iv)", "summands 1..k are lattice polyhedra", bad is None, bad))

    # (v) min over Q of w exists and is >= -1
    try:
        mr = min_functional(q, w)
        ok = mr.value >= -1
        results.append(ConditionResult(
            "(v)", "min of w over Q exists and is >= -1", ok,
            None if ok else "min is %s at %s" % (mr.value, _fmt_point(mr.argmin))))
    except UnboundedError:
        results.append(ConditionResult(
            "(v)", "min of w over Q exists and is >= -1", False,
            "w unbounded below on Q"))

    # (vi) vertices of the level -1 slice of sigma lie on rays through Q
    ineqs = [(f, 0) for f in sigma.facets]
    ineqs.append((tuple(w), 1))
    ineqs.append((tuple(-x for x in w), -1))
    level = Polyhedron.from_inequalities(d.rank, ineqs)
    bad = None
    if not level.is_empty:
        for v in level.vertices:
            if not membership_scaling(q, v):
                bad = "slice vertex " + _fmt_point(v)
                break
    results.append(ConditionResult(
        "(vi)", "every vertex of the level -1 slice of the cone "
        "lies in R+ Q", bad is None, bad))

    return ValidationReport(conditions=tuple(results))


class DatumValidationError(ValueError):
    """Raised when an operation requires a datum that fails validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        labels = ", ".join(c.label for c in report.failed())
        super().__init__("datum fails condition(s) %s" % labels)


def require_valid(d: DeformationDatum) -> ValidationReport:
    report = validate_datum(d)
    if not report.ok:
        raise DatumValidationError(report)
    return report


# ---------------------------------------------------------------------------
# The enlarged cone


@dataclass(frozen=True)
class TildeData:
    datum: DeformationDatum
    cone: Cone  # in rank n + k
    n: int
    k: int
    w_tilde: tuple
    rays: tuple  # canonical ray order of the cone
    e_pairings: tuple  # per ray, the k-tuple of e_i* pairings
    w_pairings: tuple  # per ray, <w~, ray>
    provenance: tuple  # per ray, tuple of human-readable origin tags
    floors: tuple  # floor(min over Q_i of w) for i = 1..k

    def pairing_matrix(self) -> tuple:
        """Rows e_1*..e_k*, columns the rays."""
        return tuple(
            tuple(self.e_pairings[j][i] for j in range(len(self.rays)))
            for i in range(self.k)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "rays": [list(r) for r in self.rays],
            "w_tilde": list(self.w_tilde),
            "e_pairings": [list(p) for p in self.e_pairings],
            "w_pairings": list(self.w_pairings),
            "provenance": [list(p) for p in self.provenance],
        }


def build_tilde(d: DeformationDatum) -> TildeData:
    """Generators: sigma rays with zero tail, Q_0 vertices tailed by
    (-1,...,-1), Q_i vertices tailed by e_i.  Non-extreme generators are
    dropped by cone canonicalization; provenance still records every
    originating generator per surviving ray."""
    n, k = d.rank, d.k
    tagged = []
    for r in d.sigma.rays:
        tagged.append((tuple(r) + (0,) * k, "sigma ray " + _fmt_point(r)))
    tail0 = (-1,) * k
    for v in d.summands[0].vertices:
        tagged.append((tuple(v) + tail0, "Q0 vertex " + _fmt_point(v)))
    for i, s in enumerate(d.summands[1:], start=1):
        tail = tuple(1 if j == i - 1 else 0 for j in range(k))
        for v in s.vertices:
            tagged.append((tuple(v) + tail, "Q%d vertex %s" % (i, _fmt_point(v))))
    # recession directions of the summands are absorbed by sigma, but the
    # cone over a shifted unbounded summand still needs them as generators
    for i, s in enumerate(d.summands):
        for r in s.rays:
            tagged.append((tuple(r) + (0,) * k,
                           "Q%d recession ray %s" % (i, _fmt_point(r))))

    cone = Cone.from_generators(n + k, [g for g, _ in tagged])

    floors = []
    for s in d.summands[1:]:
        mr = min_functional(s, d.w)
        floors.append(mr.floor)
    w_tilde = tuple(d.w) + tuple(-f for f in floors)

    rays = cone.rays
    e_pairings = tuple(tuple(r[n:]) for r in rays)
    w_pairings = tuple(dot(w_tilde, r) for r in rays)
    prov = []
    for r in rays:
        tags = []
        for g, tag in tagged:
            if any(g) and primitive(g) == r:
                tags.append(tag)
        prov.append(tuple(tags))
    return TildeData(datum=d, cone=cone, n=n, k=k, w_tilde=w_tilde,
                     rays=rays, e_pairings=e_pairings, w_pairings=w_pairings,
                     provenance=tuple(prov), floors=tuple(floors))


@dataclass(frozen=True)
class TildeStructureReport:
    strongly_convex: bool
    dimension_ok: bool
    slice_ok: bool
    detail: str

    @property
    def ok(self) -> bool:
        return self.strongly_convex and self.dimension_ok and self.slice_ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "strongly_convex": self.strongly_convex,
                "dimension_ok": self.dimension_ok, "slice_ok": self.slice_ok,
                "detail": self.detail}


def check_tilde_structure(t: TildeData) -> TildeStructureReport:
    """Strong convexity, full dimension n+k, and the slice property: the
    enlarged cone meets N_R x 0 exactly in the original cone."""
    n, k = t.n, t.k
    sc = t.cone.is_strongly_convex()
    dim_ok = t.cone.dimension() == n + k
    # intersect with the coordinate subspace by forcing the tail to zero
    ineqs = list(t.cone.facets)
    for i in range(k):
        e = tuple(1 if j == n + i else 0 for j in range(n + k))
        ineqs.append(e)
        ineqs.append(tuple(-x for x in e))
    meet = Cone.from_inequalities(n + k, ineqs)
    detail = ""
    slice_ok = True
    for r in meet.rays:
        if any(r[n:]):
            slice_ok = False
            detail = "slice ray with nonzero tail " + _fmt_point(r)
            break
    if slice_ok:
        projected = tuple(sorted(r[:n] for r in meet.rays))
        expected = tuple(sorted(t.datum.sigma.rays))
        slice_ok = projected == expected
        if not slice_ok:
            detail = "slice rays %s != cone rays %s" % (projected, expected)
    return TildeStructureReport(strongly_convex=sc, dimension_ok=dim_ok,
                                slice_ok=slice_ok, detail=detail)


def floor_min_identity(d: DeformationDatum, u: Sequence[int]) -> bool:
    """Sum over summands of floor(min of u) against floor(min over Q).

    u must pair non-negatively with the cone; unbounded minima cannot
    occur then, since all recession directions of Q lie in the cone.
    """
    if any(int(x) != x for x in u):
        raise ValueError("u must be a lattice vector")
    u = tuple(int(x) for x in u)
    if any(dot(u, r) < 0 for r in d.sigma.rays):
        raise ValueError("u lies outside the dual cone")
    left = sum(min_functional(s, u).floor for s in d.summands)
    right = min_functional(d.q, u).floor
    return left == right
