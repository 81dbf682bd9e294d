"""Polyhedral layer: cones, polyhedra, conversions, enumeration."""

import json
from fractions import Fraction

import pytest

from toricdeform.lattice import ZeroVectorError
from toricdeform.polyhedral import (
    Cone,
    Polyhedron,
    UnboundedError,
    convex_hull,
    dual_cone,
    lattice_points,
    membership_scaling,
    min_functional,
    minkowski_sum,
    normal_fan,
    polyhedron_equal,
)

import corpus
from oracles import (
    brute_facets_from_rays,
    brute_lattice_points,
    brute_rays_from_normals,
    dot,
    fm_minimize,
)


# ---------------------------------------------------------------- cones


def test_cone_canonical_rays():
    c = Cone.from_generators(2, [(2, 0), (1, 1), (0, 3), (1, 2)])
    assert c.rays == ((0, 1), (1, 0))
    assert c.facets == ((0, 1), (1, 0))


def test_cone_dual_frozen():
    # expected rays computed with the subset-kernel enumeration oracle
    expected = brute_rays_from_normals(2, [(1, 0), (1, 2)])
    assert expected == ((0, 1), (2, -1))
    d = dual_cone(Cone.from_generators(2, [(1, 0), (1, 2)]))
    assert d.rays == expected


def test_cone_with_line_spans():
    c = Cone.from_generators(2, [(1, 0), (-1, 0), (0, 1)])
    assert not c.is_strongly_convex()
    assert c.dimension() == 2
    assert c.lines == ((1, 0),)
    assert c.facets == ((0, 1),)


def test_zero_cone():
    c = Cone.from_generators(3, [])
    assert c.rays == ()
    assert c.dimension() == 0
    assert c.contains((0, 0, 0))
    assert not c.contains((1, 0, 0))


def test_halfspace_roundtrip():
    c = Cone.from_inequalities(2, [(0, 1)])
    assert c.lines == ((1, 0),)
    assert c.pointed_rays == ((0, 1),)
    back = Cone.from_generators(2, c.rays)
    assert back == c


def test_cone_contains_and_interior():
    c = Cone.from_generators(3, [(1, 1, 0), (-1, 1, 0), (0, 0, 1)])
    assert c.contains((0, 2, 5))
    assert not c.contains((2, 1, 0))
    assert c.interior_contains((0, 1, 1))
    assert not c.interior_contains((1, 1, 0))
    assert not c.interior_contains((0, 0, 0))


def test_cone_facets_against_oracle():
    r = corpus.rng(101)
    for _ in range(120):
        rank = r.choice([2, 3])
        c = corpus.random_pointed_cone(r, rank)
        assert c.facets == brute_facets_from_rays(rank, c.rays)


def test_cone_rays_against_oracle():
    r = corpus.rng(102)
    for _ in range(120):
        rank = r.choice([2, 3])
        c = corpus.random_pointed_cone(r, rank)
        rebuilt = Cone.from_inequalities(rank, c.facets)
        assert rebuilt.rays == brute_rays_from_normals(rank, c.facets)
        assert rebuilt == c


def test_cone_double_dual_identity():
    r = corpus.rng(103)
    for _ in range(150):
        rank = r.choice([2, 3])
        gens = [corpus.random_vector(r, rank, -3, 3) for _ in range(r.randint(1, 5))]
        c = Cone.from_generators(rank, gens)
        d = Cone.from_generators(rank, dual_cone(c).rays)
        dd = Cone.from_generators(rank, dual_cone(d).rays)
        assert dd == c


def test_cone_generator_order_irrelevant():
    gens = [(1, 1, 0), (-1, 1, 0), (0, 0, 1), (0, 2, 1)]
    a = Cone.from_generators(3, gens)
    b = Cone.from_generators(3, [(0, 4, 2), (0, 0, 2)] + gens[::-1])
    assert a == b
    assert hash(a) == hash(b)


def test_cone_json_roundtrip():
    c = Cone.from_generators(2, [(1, 0), (1, 2)])
    blob = json.dumps(c.to_json(), sort_keys=True)
    again = Cone.from_json(json.loads(blob))
    assert again == c
    assert json.dumps(again.to_json(), sort_keys=True) == blob


def test_cone_rejects_bad_rank():
    with pytest.raises(ValueError):
        Cone.from_generators(2, [(1, 0, 0)])


# ----------------------------------------------------------- polyhedra


def test_hull_drops_interior_points():
    p = convex_hull(2, [(-1, -1), (0, 1), (4, 3), (2, 2), (0, 0)])
    assert p.vertices == (
        (Fraction(-1), Fraction(-1)),
        (Fraction(0), Fraction(1)),
        (Fraction(4), Fraction(3)),
    )
    assert p.rays == ()
    assert p.is_bounded


def test_hull_idempotent_random():
    r = corpus.rng(104)
    for _ in range(150):
        rank = r.choice([2, 3])
        p = corpus.random_polytope(r, rank)
        again = convex_hull(rank, p.vertices)
        assert again == p
        assert polyhedron_equal(again, p)


def test_hull_rational_points():
    p = convex_hull(2, [(Fraction(1, 2), 0), (Fraction(3, 2), 0), (1, 1)])
    assert (Fraction(1, 2), Fraction(0)) in p.vertices
    assert p.contains((1, Fraction(1, 2)))
    assert not p.contains((0, 0))


def test_empty_polyhedron():
    e = Polyhedron.empty(3)
    assert e.is_empty
    assert e.affine_dimension() == -1
    assert not e.contains((0, 0, 0))
    assert lattice_points(e) == ()
    f = Polyhedron.from_inequalities(2, [((1, 0), 0), ((-1, 0), -1)])
    assert f.is_empty
    assert f == Polyhedron.empty(2)


def test_from_points_and_rays_requires_points():
    with pytest.raises(ValueError):
        Polyhedron.from_points_and_rays(2, [])
    with pytest.raises(ZeroVectorError):
        Polyhedron.from_points_and_rays(2, [(0, 0)], [(0, 0)])


def test_unbounded_slice_shape():
    ineqs = [
        ((1, 1, 0), 0),
        ((-1, 1, 0), 0),
        ((0, 0, 1), 0),
        ((0, -1, 0), 1),
        ((0, 1, 0), -1),
    ]
    s = Polyhedron.from_inequalities(3, ineqs)
    assert s.vertices == (
        (Fraction(-1), Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(1), Fraction(0)),
    )
    assert s.rays == ((0, 0, 1),)
    assert not s.is_bounded


def test_minkowski_segment_sum_hexagon():
    segs = [
        convex_hull(2, [(0, 0), (1, 0)]),
        convex_hull(2, [(0, 0), (0, 1)]),
        convex_hull(2, [(0, 0), (1, 1)]),
    ]
    total = segs[0]
    for s in segs[1:]:
        total = minkowski_sum(total, s)
    got = {tuple(int(x) for x in v) for v in total.vertices}
    assert got == {(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (2, 2)}


def test_minkowski_commutes_and_associates():
    r = corpus.rng(105)
    for _ in range(100):
        rank = r.choice([2, 3])
        a = corpus.random_polytope(r, rank, max_pts=4)
        b = corpus.random_polytope(r, rank, max_pts=4)
        c = corpus.random_polytope(r, rank, max_pts=4)
        assert minkowski_sum(a, b) == minkowski_sum(b, a)
        assert minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(
            a, minkowski_sum(b, c)
        )


def test_minkowski_with_empty_absorbs():
    p = convex_hull(2, [(0, 0), (1, 0)])
    assert minkowski_sum(p, Polyhedron.empty(2)).is_empty


def test_translate_and_scale():
    p = convex_hull(2, [(0, 0), (2, 0), (0, 2)])
    q = p.translate((1, 1))
    assert q.contains((1, 1))
    assert not q.contains((0, 0))
    h = p.scale(Fraction(1, 2))
    assert h.vertices == (
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(0)),
    )


def test_min_functional_frozen():
    q = convex_hull(
        3, [(Fraction(-1, 2), Fraction(1, 2), 0), (Fraction(1, 2), Fraction(1, 2), 0)]
    )
    res = min_functional(q, (0, -2, 3))
    assert res.value == Fraction(-1)
    assert res.floor == -1
    assert res.argmin == (Fraction(-1, 2), Fraction(1, 2), Fraction(0))


def test_min_functional_against_fm():
    r = corpus.rng(106)
    for _ in range(120):
        rank = r.choice([2, 3])
        p = corpus.random_polytope(r, rank)
        w = corpus.random_vector(r, rank, -4, 4)
        res = min_functional(p, w)
        status, val = fm_minimize(rank, p.inequalities, w)
        assert status == "ok"
        assert val == res.value
        assert dot(w, res.argmin) == res.value


def test_min_functional_unbounded():
    p = Polyhedron.from_points_and_rays(2, [(0, 0)], [(1, 0)])
    with pytest.raises(UnboundedError, match="UnboundedBelow"):
        min_functional(p, (-1, 0))
    res = min_functional(p, (1, 1))
    assert res.value == 0


def test_lattice_points_segment():
    seg = convex_hull(2, [(0, 1), (4, 3)])
    assert lattice_points(seg) == ((0, 1), (2, 2), (4, 3))


def test_lattice_points_against_oracle():
    r = corpus.rng(107)
    for _ in range(100):
        rank = r.choice([2, 3])
        p = corpus.random_polytope(r, rank, lo=-3, hi=3)
        assert lattice_points(p) == brute_lattice_points(rank, p.inequalities)


def test_lattice_points_unbounded_raises():
    p = Polyhedron.from_points_and_rays(2, [(0, 0)], [(1, 1)])
    with pytest.raises(UnboundedError, match="Unbounded"):
        lattice_points(p)


def test_membership_scaling_cases():
    q = convex_hull(
        3, [(Fraction(-1, 2), Fraction(1, 2), 0), (Fraction(1, 2), Fraction(1, 2), 0)]
    )
    assert membership_scaling(q, (0, 1, 0))
    assert not membership_scaling(q, (0, 0, 1))
    assert not membership_scaling(q, (0, 0, 0))
    assert not membership_scaling(Polyhedron.empty(3), (1, 0, 0))
    ray = Polyhedron.from_points_and_rays(1, [(1,)], [(1,)])
    assert membership_scaling(ray, (1,))
    assert not membership_scaling(ray, (-1,))


def test_membership_scaling_against_sampling():
    r = corpus.rng(108)
    for _ in range(120):
        rank = 2
        p = corpus.random_polytope(r, rank, lo=-3, hi=3)
        v = corpus.random_vector(r, rank, -3, 3)
        got = membership_scaling(p, v)
        # candidate scalings where some inequality switches sign
        cands = set()
        for u, c in p.inequalities:
            a = dot(u, v)
            if a != 0 and c != 0:
                lam = Fraction(-c, a)
                if lam > 0:
                    cands.add(lam)
        cands.add(Fraction(1))
        pts = sorted(cands)
        probes = list(pts)
        for x, y in zip(pts, pts[1:]):
            probes.append((x + y) / 2)
        probes.append(pts[-1] + 1)
        probes.append(pts[0] / 2)
        expected = any(
            p.contains(tuple(lam * x for x in v)) for lam in probes if lam > 0
        )
        assert got == expected


def test_normal_fan_triangle():
    tri = convex_hull(2, [(0, 0), (1, 0), (0, 1)])
    fan = normal_fan(tri)
    assert fan.rays == ((-1, -1), (0, 1), (1, 0))
    assert len(fan.maximal_cones) == 3
    for cone_idx in fan.maximal_cones:
        assert len(cone_idx) == 2


def test_normal_fan_hexagon():
    segs = [
        convex_hull(2, [(0, 0), (1, 0)]),
        convex_hull(2, [(0, 0), (0, 1)]),
        convex_hull(2, [(0, 0), (1, 1)]),
    ]
    total = segs[0]
    for s in segs[1:]:
        total = minkowski_sum(total, s)
    fan = normal_fan(total)
    assert set(fan.rays) == {
        (1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1),
    }
    assert len(fan.maximal_cones) == 6


def test_normal_fan_requires_bounded_full_dim():
    with pytest.raises(ValueError):
        normal_fan(Polyhedron.from_points_and_rays(2, [(0, 0)], [(1, 0)]))
    with pytest.raises(ValueError):
        normal_fan(convex_hull(2, [(0, 0), (1, 0)]))


def test_polyhedron_json_roundtrip():
    p = convex_hull(2, [(Fraction(1, 2), 0), (1, 1), (0, 0)])
    blob = json.dumps(p.to_json(), sort_keys=True)
    again = Polyhedron.from_json(json.loads(blob))
    assert again == p
    assert json.dumps(again.to_json(), sort_keys=True) == blob


def test_polyhedron_json_with_rays_and_empty():
    p = Polyhedron.from_points_and_rays(2, [(0, 0), (1, 0)], [(0, 1)])
    assert Polyhedron.from_json(p.to_json()) == p
    e = Polyhedron.empty(2)
    assert Polyhedron.from_json(e.to_json()) == e


def test_is_lattice():
    assert convex_hull(2, [(0, 0), (3, 1)]).is_lattice
    assert not convex_hull(2, [(Fraction(1, 2), 0), (1, 1)]).is_lattice
