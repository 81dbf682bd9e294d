"""Exact integer and rational linear algebra over lattices.

Everything here works on tuples of Python ints or fractions.Fraction;
no floating point is ever introduced.  Vectors are immutable tuples,
matrices are tuples of row tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

IntVector = tuple  # tuple[int, ...]
RationalVector = tuple  # tuple[Fraction, ...]
IntMatrix = tuple  # tuple[IntVector, ...]


class ZeroVectorError(ValueError):
    """Raised when a direction is requested for the zero vector."""


def dot(u: Sequence, v: Sequence):
    """Pairing <u, v>.  Lengths must agree."""
    if len(u) != len(v):
        raise ValueError("length mismatch in dot: %d vs %d" % (len(u), len(v)))
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Sequence) -> tuple:
    return tuple(-a for a in u)


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def is_integral(u: Sequence) -> bool:
    """True if every coordinate is an integer (int or integral Fraction)."""
    return all(Fraction(a).denominator == 1 for a in u)


def as_int_vector(u: Sequence) -> IntVector:
    """Cast an integral vector to plain ints; error if any coordinate is not integral."""
    out = []
    for a in u:
        f = Fraction(a)
        if f.denominator != 1:
            raise ValueError("non-integral coordinate %s" % (a,))
        out.append(int(f))
    return tuple(out)


def content(u: Sequence[int]) -> int:
    """gcd of the coordinates (non-negative)."""
    return math.gcd(*[int(a) for a in u]) if u else 0


def primitive(u: Sequence) -> IntVector:
    """Primitive integer vector spanning the same ray (positive multiple of u).

    Accepts int or Fraction coordinates.  The zero vector has no direction.
    """
    fracs = [Fraction(a) for a in u]
    if all(f == 0 for f in fracs):
        raise ZeroVectorError("ZeroVector: the zero vector spans no ray")
    den = math.lcm(*[f.denominator for f in fracs])
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints)
    return tuple(a // g for a in ints)


def fraction_vector(u: Sequence) -> RationalVector:
    return tuple(Fraction(a) for a in u)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a))


def matrix_rank(rows: Iterable[Sequence]) -> int:
    """Rank over Q, by fraction-free Gaussian elimination on integer input.

    Rows may contain Fractions; each row is scaled to integers first
    (scaling does not change the rank).
    """
    work = []
    for r in rows:
        if not is_zero(r):
            work.append(list(primitive(r)))
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(work):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        for i in range(rank + 1, len(work)):
            if work[i][col] != 0:
                q = work[i][col]
                work[i] = [p * a - q * b for a, b in zip(work[i], work[rank])]
                g = math.gcd(*work[i])
                if g > 1:
                    work[i] = [a // g for a in work[i]]
        rank += 1
        col += 1
    return rank


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_rational(rows: Sequence[Sequence], rhs: Sequence):
    """Solve A x = b exactly over Q for square A; None when A is singular."""
    n = len(rows)
    m = [[Fraction(a) for a in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [a / p for a in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                q = m[i][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[col])]
    return tuple(m[i][n] for i in range(n))


def project_off_rowspan(v: Sequence, basis: Sequence[Sequence]) -> RationalVector:
    """Orthogonal projection of v onto the complement of span(basis rows).

    The basis rows must be linearly independent.  Used to pick canonical
    representatives of rays modulo a lineality space.
    """
    if not basis:
        return fraction_vector(v)
    gram = [[Fraction(dot(bi, bj)) for bj in basis] for bi in basis]
    rhs = [Fraction(dot(bi, v)) for bi in basis]
    coeffs = solve_rational(gram, rhs)
    out = fraction_vector(v)
    for c, b in zip(coeffs, basis):
        out = vsub(out, vscale(c, fraction_vector(b)))
    return out


# ---------------------------------------------------------------------------
# Smith normal form and friends


def _swap_rows(m, u, i, j):
    m[i], m[j] = m[j], m[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(m, v, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]
    for row in v:
        row[i], row[j] = row[j], row[i]


def _addmul_row(m, u, dst, src, q):
    # row_dst += q * row_src
    m[dst] = [a + q * b for a, b in zip(m[dst], m[src])]
    u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]


def _addmul_col(m, v, dst, src, q):
    for row in m:
        row[dst] += q * row[src]
    for row in v:
        row[dst] += q * row[src]


def smith_normal_form(a: Sequence[Sequence[int]]):
    """Smith normal form: returns (U, D, V) with U a V = D, U and V unimodular.

    D is diagonal with non-negative entries d_1 | d_2 | ... .  The pivot at
    each step is the smallest-absolute-value nonzero entry of the remaining
    block (ties broken by row then column index), which makes the reduction
    deterministic.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    m = [[int(x) for x in row] for row in a]
    if any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    u = [list(r) for r in identity_matrix(nrows)]
    v = [list(r) for r in identity_matrix(ncols)]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        # locate the smallest nonzero entry of the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < abs(best[0])):
                    best = (x, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            _swap_rows(m, u, t, bi)
        if bj != t:
            _swap_cols(m, v, t, bj)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    if q:
                        _addmul_row(m, u, i, t, -q)
                    if m[i][t] != 0:
                        # remainder became the new smallest pivot
                        _swap_rows(m, u, t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    if q:
                        _addmul_col(m, v, j, t, -q)
                    if m[t][j] != 0:
                        _swap_cols(m, v, t, j)
                        dirty = True
            if not dirty:
                break
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(limit - 1):
            a_, b_ = m[i][i], m[i + 1][i + 1]
            if a_ and b_ and b_ % a_ != 0:
                g = math.gcd(a_, b_)
                lc = a_ * b_ // g
                # x*a + y*b = g
                x, y = _bezout(a_, b_)
                # P * diag(a,b) * Q = diag(g, lcm); apply P to rows, Q to cols
                p00, p01, p10, p11 = x, y, -b_ // g, a_ // g
                q00, q01, q10, q11 = 1, -y * b_ // g, 1, x * a_ // g
                r0 = [p00 * mi + p01 * mj for mi, mj in zip(m[i], m[i + 1])]
                r1 = [p10 * mi + p11 * mj for mi, mj in zip(m[i], m[i + 1])]
                m[i], m[i + 1] = r0, r1
                r0 = [p00 * mi + p01 * mj for mi, mj in zip(u[i], u[i + 1])]
                r1 = [p10 * mi + p11 * mj for mi, mj in zip(u[i], u[i + 1])]
                u[i], u[i + 1] = r0, r1
                for row in m:
                    ci, cj = row[i], row[i + 1]
                    row[i], row[i + 1] = q00 * ci + q10 * cj, q01 * ci + q11 * cj
                for row in v:
                    ci, cj = row[i], row[i + 1]
                    row[i], row[i + 1] = q00 * ci + q10 * cj, q01 * ci + q11 * cj
                assert m[i][i] == g and m[i + 1][i + 1] == lc
                changed = True
    return (
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in m),
        tuple(tuple(r) for r in v),
    )


def _bezout(a: int, b: int):
    """x, y with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def elementary_divisors(a: Sequence[Sequence[int]]) -> tuple:
    _, d, _ = smith_normal_form(a)
    lim = min(len(d), len(d[0]) if d else 0)
    return tuple(d[i][i] for i in range(lim))


def integer_kernel(a: Sequence[Sequence[int]]) -> tuple:
    """Basis of {x in Z^n : A x = 0}; the basis spans a saturated sublattice."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if nrows == 0:
        return tuple(identity_matrix(ncols))
    _, d, v = smith_normal_form(a)
    lim = min(nrows, ncols)
    basis = []
    for j in range(ncols):
        if j >= lim or d[j][j] == 0:
            basis.append(tuple(v[i][j] for i in range(ncols)))
    return tuple(basis)


def saturate_rowspan(rows: Sequence[Sequence[int]]) -> tuple:
    """Basis of span_Q(rows) ∩ Z^n, in Hermite normal form."""
    rows = [tuple(r) for r in rows if not is_zero(r)]
    if not rows:
        return ()
    ann = integer_kernel(rows)
    if not ann:
        return hermite_normal_form(identity_matrix(len(rows[0])))
    return hermite_normal_form(integer_kernel(ann))


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple:
    """Row-style Hermite normal form of a full-row-rank integer matrix.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    The result is the canonical basis of the row lattice.
    """
    work = [list(map(int, r)) for r in rows]
    nrows = len(work)
    if nrows == 0:
        return ()
    ncols = len(work[0])
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, nrows):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        # gcd-out the column below the pivot
        for i in range(row + 1, nrows):
            while work[i][col] != 0:
                q = work[row][col] // work[i][col]
                work[row] = [a - q * b for a, b in zip(work[row], work[i])]
                work[row], work[i] = work[i], work[row]
        if work[row][col] < 0:
            work[row] = [-x for x in work[row]]
        for i in range(row):
            q = work[i][col] // work[row][col]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[row])]
        row += 1
        if row == nrows:
            break
    return tuple(tuple(r) for r in work[:row])


# ---------------------------------------------------------------------------
# Cokernel presentations (divisor class groups, gradings)


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Finitely generated abelian group: Z^free_rank + sum Z/d, d in torsion.

    torsion is the divisibility chain d_1 | d_2 | ..., every d_i >= 2.
    """

    free_rank: int
    torsion: tuple

    def __str__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % d for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CokernelMap:
    """Cokernel of an integer matrix A (m rows): Z^m -> Z^m / im(A).

    degrees[i] is the image of the i-th standard basis vector, split as
    (free part, torsion residues).  Free coordinates are sign-normalized so
    that the first nonzero degree entry in each free coordinate is positive;
    torsion residues are reduced into [0, d).
    """

    group: AbelianGroupPresentation
    degrees: tuple  # per basis vector: (tuple free, tuple torsion)

    def degree(self, i: int):
        return self.degrees[i]


def cokernel(a: Sequence[Sequence[int]]) -> AbelianGroupPresentation:
    """Presentation of Z^rows / image(A), A acting on column vectors."""
    return cokernel_map(a).group


def cokernel_map(a: Sequence[Sequence[int]]) -> CokernelMap:
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u, d, _ = smith_normal_form(a) if nrows else (identity_matrix(0), (), ())
    lim = min(nrows, ncols)
    diag = [d[i][i] for i in range(lim)]
    free_idx = [i for i in range(nrows) if i >= lim or diag[i] == 0]
    tors_idx = [i for i in range(lim) if diag[i] >= 2]
    tors = tuple(diag[i] for i in tors_idx)
    group = AbelianGroupPresentation(free_rank=len(free_idx), torsion=tors)

    # degree of e_j = column j of U, projected to free/torsion coordinates
    free_rows = [list(u[i]) for i in free_idx]
    # sign-normalize each free coordinate: first nonzero entry positive
    for r in free_rows:
        lead = next((x for x in r if x != 0), 0)
        if lead < 0:
            r[:] = [-x for x in r]
    degrees = []
    for j in range(nrows):
        free = tuple(r[j] for r in free_rows)
        t = tuple(u[i][j] % diag[i] for i in tors_idx)
        degrees.append((free, t))
    return CokernelMap(group=group, degrees=tuple(degrees))
