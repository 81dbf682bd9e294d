"""Total-coordinate equations: one variable per ray, graded by the
cokernel of the dual ray map.

The emitters consume any object with attributes n, k, rays, w_tilde
(see datum.TildeData); rays live in rank n+k, with the last k
coordinates giving the e_i* pairings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lattice import cokernel_map, dot, matrix_rank


class NegativeExponentError(ValueError):
    def __init__(self, ray, exponent, where):
        self.ray = ray
        self.exponent = exponent
        super().__init__(
            "NegativeExponent: exponent %s of variable at ray %s in %s"
            % (exponent, tuple(ray), where))


@dataclass(frozen=True)
class PairingData:
    """Rays with their e_i* tails plus the shifted functional."""

    n: int
    k: int
    rays: tuple
    w_tilde: tuple

    @classmethod
    def of(cls, t) -> "PairingData":
        if isinstance(t, cls):
            return t
        return cls(n=t.n, k=t.k, rays=tuple(tuple(r) for r in t.rays),
                   w_tilde=tuple(t.w_tilde))

    def e_pairing(self, i: int, j: int) -> int:
        # i-th of k slots, j-th ray
        return self.rays[j][self.n + i]

    def w_pairing(self, j: int) -> int:
        return dot(self.w_tilde, self.rays[j])

    def matrix(self) -> tuple:
        """Rows e_1*..e_k*, columns the rays."""
        return tuple(
            tuple(self.e_pairing(i, j) for j in range(len(self.rays)))
            for i in range(self.k))


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    param: Optional[str]  # formal degree-0 symbol, or None
    exps: tuple

    def support(self) -> frozenset:
        return frozenset(j for j, e in enumerate(self.exps) if e)


@dataclass(frozen=True)
class CoxPolynomial:
    terms: tuple

    def __post_init__(self):
        for t in self.terms:
            if any(e < 0 for e in t.exps):
                raise ValueError("negative exponent in term")

    @property
    def nvars(self) -> int:
        return len(self.terms[0].exps) if self.terms else 0

    def support(self) -> frozenset:
        out = frozenset()
        for t in self.terms:
            out |= t.support()
        return out

    def substitute(self, values: dict) -> "CoxPolynomial":
        """Specialize parameters to exact rationals; drops vanished terms."""
        merged = []
        for t in self.terms:
            if t.param is not None and t.param in values:
                c = t.coeff * Fraction(values[t.param])
                t = Term(coeff=c, param=None, exps=t.exps)
            if t.coeff == 0:
                continue
            for i, prev in enumerate(merged):
                if prev.param == t.param and prev.exps == t.exps:
                    c = prev.coeff + t.coeff
                    if c == 0:
                        merged.pop(i)
                    else:
                        merged[i] = Term(coeff=c, param=t.param, exps=t.exps)
                    break
            else:
                merged.append(t)
        return CoxPolynomial(terms=tuple(merged))

    def proportional(self, other: "CoxPolynomial") -> bool:
        """Equal up to a nonzero rational scalar, ignoring term order."""
        if len(self.terms) != len(other.terms):
            return False
        mine = {(t.param, t.exps): t.coeff for t in self.terms}
        theirs = {(t.param, t.exps): t.coeff for t in other.terms}
        if set(mine) != set(theirs):
            return False
        ratio = None
        for key, c in mine.items():
            d = theirs[key]
            if (c == 0) != (d == 0):
                return False
            r = c / d
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
        return True

    def to_json(self) -> dict:
        return {"terms": [
            {"coeff": _coeff_string(t), "exps": list(t.exps)}
            for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "CoxPolynomial":
        terms = []
        for item in data["terms"]:
            coeff, param = _parse_coeff(item["coeff"])
            terms.append(Term(coeff=coeff, param=param,
                              exps=tuple(int(e) for e in item["exps"])))
        return cls(terms=tuple(terms))


def _coeff_string(t: Term) -> str:
    sign = "-" if t.coeff < 0 else "+"
    mag = abs(t.coeff)
    if t.param is None:
        return sign + str(mag)
    if mag == 1:
        return sign + t.param
    return "%s%s*%s" % (sign, mag, t.param)


_COEFF_RE = re.compile(
    r"^([+-])(?:(\d+(?:/\d+)?)\*)?([A-Za-z]\w*)?(\d+(?:/\d+)?)?$")


def _parse_coeff(s: str):
    m = _COEFF_RE.match(s.strip())
    if not m:
        raise ValueError("bad coefficient %r" % s)
    sign, mag, param, bare = m.groups()
    if param is not None:
        q = Fraction(mag) if mag else Fraction(1)
    elif bare is not None:
        q = Fraction(bare)
    else:
        raise ValueError("bad coefficient %r" % s)
    if sign == "-":
        q = -q
    return q, param


def monomial(exps, coeff=1, param=None) -> CoxPolynomial:
    return CoxPolynomial(terms=(
        Term(coeff=Fraction(coeff), param=param, exps=tuple(exps)),))


# ---------------------------------------------------------------------------
# Equation emitters


def binomials(t) -> tuple:
    """For each slot i: the product over positive pairings minus the
    product over negative pairings."""
    p = PairingData.of(t)
    out = []
    m = len(p.rays)
    for i in range(p.k):
        ypos = tuple(max(p.e_pairing(i, j), 0) for j in range(m))
        zneg = tuple(max(-p.e_pairing(i, j), 0) for j in range(m))
        out.append(CoxPolynomial(terms=(
            Term(Fraction(1), None, ypos),
            Term(Fraction(-1), None, zneg),
        )))
    return tuple(out)


def trinomials(t, params: Optional[Sequence[str]] = None) -> tuple:
    """Binomial plus the parameter term; the third monomial's exponent at
    ray j is <w~, ray_j> + (negative part of the e_i* pairing).  Negative
    values mean the input was not a valid datum."""
    p = PairingData.of(t)
    if params is None:
        params = tuple("t%d" % (i + 1) for i in range(p.k))
    out = []
    m = len(p.rays)
    for i in range(p.k):
        ypos = tuple(max(p.e_pairing(i, j), 0) for j in range(m))
        zneg = tuple(max(-p.e_pairing(i, j), 0) for j in range(m))
        third = []
        for j in range(m):
            e = p.w_pairing(j) + zneg[j]
            if e < 0:
                raise NegativeExponentError(p.rays[j], e, "trinomial %d" % (i + 1))
            third.append(e)
        out.append(CoxPolynomial(terms=(
            Term(Fraction(1), None, ypos),
            Term(Fraction(-1), None, zneg),
            Term(Fraction(-1), params[i], tuple(third)),
        )))
    return tuple(out)


def boundary_monomial(t) -> CoxPolynomial:
    """Product, exponent one each, of the variables whose rays pair
    non-positively with every e_i*.  An empty product signals a
    degenerate configuration; the caller can test is_degenerate_monomial."""
    p = PairingData.of(t)
    m = len(p.rays)
    exps = tuple(
        1 if all(p.e_pairing(i, j) <= 0 for i in range(p.k)) else 0
        for j in range(m))
    return monomial(exps)


def is_degenerate_monomial(f: CoxPolynomial) -> bool:
    return all(e == 0 for t in f.terms for e in t.exps)


# ---------------------------------------------------------------------------
# Regular-sequence criteria


def fischer_shapiro_check(mat) -> bool:
    """Full row rank and at most one positive entry per column.

    Accepts a pairing matrix (rows e_i*, columns rays) or anything with a
    pairing_matrix()/matrix() method.
    """
    if hasattr(mat, "pairing_matrix"):
        mat = mat.pairing_matrix()
    elif hasattr(mat, "matrix"):
        mat = mat.matrix()
    rows = [tuple(r) for r in mat]
    if not rows:
        return False
    k = len(rows)
    if matrix_rank(rows) != k:
        return False
    for j in range(len(rows[0])):
        positives = sum(1 for i in range(k) if rows[i][j] > 0)
        if positives > 1:
            return False
    return True


def disjoint_support_regular_sequence(polys: Sequence[CoxPolynomial],
                                      mono: CoxPolynomial) -> bool:
    """Combinatorial regular-sequence certificate.

    Two shapes are recognized.  A list of two-term polynomials with a
    common second monomial (the affine pair case): the supports of the
    first monomials, the shared second monomial, and the remaining
    monomial variables must be pairwise disjoint.  A single three-term
    polynomial (the pencil case): no variable of the monomial may divide
    every term, i.e. the two are coprime.
    """
    polys = tuple(polys)
    if not polys:
        return False
    mono_support = mono.support()
    if len(polys) == 1 and len(polys[0].terms) == 3:
        tri = polys[0]
        for v in mono_support:
            if all(t.exps[v] > 0 for t in tri.terms):
                return False
        return True
    if all(len(f.terms) == 2 for f in polys):
        groups = [f.terms[0].support() for f in polys]
        seconds = {f.terms[1].exps for f in polys}
        if len(seconds) == 1:
            shared = polys[0].terms[1].support()
            groups.append(shared)
            groups.append(mono_support - shared)
        else:
            for f in polys:
                groups.append(f.terms[1].support())
            used = frozenset().union(*groups) if groups else frozenset()
            groups.append(mono_support - used)
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                if groups[a] & groups[b]:
                    return False
        return True
    raise ValueError("unrecognized input shape for the regularity check")


# ---------------------------------------------------------------------------
# Grading


@dataclass(frozen=True)
class CoxSystem:
    rank: int
    rays: tuple
    grading: object  # CokernelMap
    parameters: tuple = ()

    @property
    def group(self):
        return self.grading.group

    def degree_of_variable(self, j: int):
        return self.grading.degree(j)

    def weights(self) -> tuple:
        """Free-part first coordinates; the usual weight vector when the
        group is Z."""
        return tuple(d[0][0] if d[0] else 0 for d in self.grading.degrees)


def cox_system(rays: Sequence, rank: int, parameters=()) -> CoxSystem:
    rays = tuple(tuple(r) for r in rays)
    for r in rays:
        if len(r) != rank:
            raise ValueError("ray length %d != rank %d" % (len(r), rank))
    if matrix_rank(rays) != rank:
        raise ValueError(
            "rays do not span; the quotient would pick up a torus factor")
    return CoxSystem(rank=rank, rays=rays,
                     grading=cokernel_map([list(r) for r in rays]),
                     parameters=tuple(parameters))


def term_degree(sys: CoxSystem, t: Term):
    fr = sys.group.free_rank
    tor = sys.group.torsion
    free = [0] * fr
    tors = [0] * len(tor)
    for j, e in enumerate(t.exps):
        f, tt = sys.grading.degree(j)
        for i in range(fr):
            free[i] += e * f[i]
        for i in range(len(tor)):
            tors[i] = (tors[i] + e * tt[i]) % tor[i]
    return tuple(free), tuple(tors)


def is_homogeneous(sys: CoxSystem, f: CoxPolynomial):
    """(flag, degree); parameters carry degree zero."""
    if not f.terms:
        return True, ((), ())
    degs = [term_degree(sys, t) for t in f.terms]
    if all(d == degs[0] for d in degs):
        return True, degs[0]
    return False, None


# ---------------------------------------------------------------------------
# Pretty printing


@dataclass(frozen=True)
class AliasTable:
    """Ordered variable names; order doubles as print priority."""

    rays: tuple
    names: tuple

    @classmethod
    def default(cls, rays) -> "AliasTable":
        rays = tuple(tuple(r) for r in rays)
        return cls(rays=rays, names=tuple("x%d" % j for j in range(len(rays))))

    @classmethod
    def from_pairs(cls, pairs, all_rays) -> "AliasTable":
        """pairs: ordered (ray, name); rays absent from pairs keep default
        names and print after the aliased ones in canonical order."""
        listed = [tuple(r) for r, _ in pairs]
        names = {tuple(r): str(nm) for r, nm in pairs}
        all_rays = [tuple(r) for r in all_rays]
        for r in listed:
            if r not in all_rays:
                raise ValueError("alias for unknown ray %s" % (r,))
        order = listed + [r for r in all_rays if r not in listed]
        return cls(rays=tuple(order),
                   names=tuple(names.get(r, "x%d" % all_rays.index(r))
                               for r in order))

    @classmethod
    def from_json(cls, data, all_rays) -> "AliasTable":
        pairs = [(tuple(item["ray"]), item["name"]) for item in data["aliases"]]
        return cls.from_pairs(pairs, all_rays)

    def position(self, ray) -> int:
        return self.rays.index(tuple(ray))

    def name(self, ray) -> str:
        return self.names[self.position(ray)]


def pretty(f: CoxPolynomial, rays, aliases: Optional[AliasTable] = None) -> str:
    """Strings like "x*y - u^2 - t1*z^3"; factor order follows the alias
    table, term order follows construction."""
    rays = [tuple(r) for r in rays]
    table = aliases if aliases is not None else AliasTable.default(rays)
    if not f.terms:
        return "0"
    chunks = []
    for idx, t in enumerate(f.terms):
        body = _term_body(t, rays, table)
        if idx == 0:
            chunks.append(body if t.coeff >= 0 else "-" + body)
        else:
            chunks.append((" + " if t.coeff >= 0 else " - ") + body)
    return "".join(chunks)


def _term_body(t: Term, rays, table: AliasTable) -> str:
    factors = []
    mag = abs(t.coeff)
    if t.param is not None:
        if mag != 1:
            factors.append(str(mag))
        factors.append(t.param)
    pieces = []
    for j, e in enumerate(t.exps):
        if e:
            pieces.append((table.position(rays[j]), table.name(rays[j]), e))
    pieces.sort()
    for _, name, e in pieces:
        factors.append(name if e == 1 else "%s^%d" % (name, e))
    if not pieces and t.param is None:
        factors.append(str(mag))
    elif pieces and t.param is None and mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)
