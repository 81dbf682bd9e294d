"""Polytope mutations: datum validation, the mutation map, the pencil
over P^1, induced boundary data and fiber specialization."""

from fractions import Fraction

import pytest

from toricdeform.cox import (
    disjoint_support_regular_sequence,
    is_homogeneous,
    pretty,
)
from toricdeform.mutation import (
    MutationDatumError,
    OutsideVError,
    induced_boundary_datum,
    mutate,
    mutation_family,
    normalize_parameter_point,
    specialize_fiber,
    validate_fano,
    validate_mutation_datum,
)
from toricdeform.polyhedral import Cone, convex_hull
from toricdeform.presets import p2_p114_alias, p2_p114_inputs, p2_polytope

import corpus


def p114_setup():
    p, w, f = p2_p114_inputs()
    fano = validate_fano(p)
    return fano, validate_mutation_datum(fano, w, f), f


# ------------------------------------------------------------ validation


def test_fano_validation_rejects():
    with pytest.raises(ValueError):
        validate_fano(convex_hull(2, [(1, 0), (0, 1), (1, 1)]))
    with pytest.raises(ValueError):
        validate_fano(convex_hull(2, [(2, 0), (0, 2), (-2, -2)]))


def test_datum_rejects_nonprimitive_direction():
    fano = validate_fano(p2_polytope())
    with pytest.raises(ValueError, match="primitive"):
        validate_mutation_datum(fano, (0, 2), convex_hull(2, [(0, 0)]))


def test_datum_rejects_factor_off_the_wall():
    fano = validate_fano(p2_polytope())
    with pytest.raises(ValueError, match="pair to zero"):
        validate_mutation_datum(fano, (0, 1), convex_hull(2, [(1, 1)]))
    _, _, f = p114_setup()
    with pytest.raises(ValueError, match="pair to zero"):
        validate_mutation_datum(fano, (2, -1), f)


def test_datum_rejects_uncovered_vertex():
    fano = validate_fano(p2_polytope())
    long_factor = convex_hull(2, [(0, 0), (4, 2)])
    with pytest.raises(MutationDatumError,
                       match=r"NoFactorAtHeight -1: uncovered vertex"):
        validate_mutation_datum(fano, (-1, 2), long_factor)


def test_p114_datum_layers_frozen():
    fano, d, _ = p114_setup()
    assert (d.hmin, d.hmax) == (-1, 2)
    assert len(d.witnesses) == 1
    layer = d.witnesses[0]
    assert layer.height == -1
    assert set(map(tuple, layer.factor_part.vertices)) == {(-1, -1)}


# ------------------------------------------------------------ the map


def test_p114_mutation_frozen():
    fano, d, _ = p114_setup()
    mut = mutate(fano, d)
    assert set(mut.vertices()) == {(-1, -1), (0, 1), (4, 3)}


def test_p114_inverse_recovers_triangle():
    fano, d, f = p114_setup()
    mut = mutate(fano, d)
    dinv = validate_mutation_datum(mut, (1, -2), f)
    assert dinv.hmin == -2
    by_h = {layer.height: layer for layer in dinv.witnesses}
    assert set(map(tuple, by_h[-2].factor_part.vertices)) == {(0, 1)}
    assert by_h[-1].factor_part is None
    assert mutate(mut, dinv).polytope == fano.polytope


def test_point_factor_is_identity():
    fano = validate_fano(p2_polytope())
    d = validate_mutation_datum(fano, (0, 1), convex_hull(2, [(0, 0)]))
    assert mutate(fano, d).polytope == fano.polytope


def test_random_mutations_invert():
    cases = corpus.random_mutation_cases(10)
    assert len(cases) == 10
    for fano, d in cases:
        mut = mutate(fano, d)
        factor = d.factor
        minus_w = tuple(-x for x in d.w)
        dinv = validate_mutation_datum(mut, minus_w, factor)
        back = mutate(mut, dinv)
        assert back.polytope == fano.polytope, (
            fano.vertices(), d.w, factor.vertices)


# ------------------------------------------------------------ the pencil


def test_p114_family_frozen():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    assert set(fam.fan.rays) == {(0, 1, 0), (-1, -1, -1), (0, 0, 1),
                                 (2, 1, 1)}
    assert set(map(tuple, fam.q_tilde.vertices)) == {
        (Fraction(1, 2), -1, 0), (2, -1, 0), (-1, -1, 3), (-1, 2, 0)}
    wt = fam.weights()
    assert sorted(wt) == [1, 1, 1, 2]
    assert wt[fam.fan.rays.index((-1, -1, -1))] == 2


def test_p114_family_strings():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    alias = p2_p114_alias(fam.fan.rays)
    assert pretty(fam.trinomial, fam.fan.rays, alias) == \
        "a*x^2 + b*y + c*z0*z1"
    assert pretty(fam.monomial, fam.fan.rays, alias) == "x*y"


def test_p3_family_from_point_factor():
    fano = validate_fano(p2_polytope())
    d = validate_mutation_datum(fano, (0, 1), convex_hull(2, [(0, 0)]))
    fam = mutation_family(fano, d)
    assert set(fam.fan.rays) == {(1, 0, 0), (0, 1, 0), (-1, -1, -1),
                                 (0, 0, 1)}
    assert sorted(fam.weights()) == [1, 1, 1, 1]
    assert all(sum(t.exps) == 1 for t in fam.trinomial.terms)
    mono = fam.monomial.terms[0].exps
    assert sum(mono) == 3
    assert mono[fam.fan.rays.index((0, 0, 1))] == 0


def test_family_polynomials_regular_and_homogeneous():
    cases = corpus.random_mutation_cases(10)
    for fano, d in cases:
        fam = mutation_family(fano, d)
        flag, _ = is_homogeneous(fam.cox, fam.trinomial)
        assert flag
        flag, _ = is_homogeneous(fam.cox, fam.monomial)
        assert flag
        assert disjoint_support_regular_sequence(
            (fam.trinomial,), fam.monomial)


def test_family_vertex_split():
    # (1, 0) sits at height -1, so only (0, 1) survives on the upper side
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    assert set(fam.upper_vertices) == {(0, 1)}
    assert set(fam.lower_vertices) == {(-1, -1)}


# ------------------------------------------------------------ induced


def test_induced_boundary_datum_frozen():
    fano, d, _ = p114_setup()
    ind = induced_boundary_datum(fano, d)
    assert ind.sigma == Cone.from_generators(
        3, [(1, 0, 1), (0, 1, 1), (-1, -1, 1)])
    assert ind.w == (-1, 2, 0)
    assert ind.boundary
    g0, f0 = ind.summands
    assert set(map(tuple, g0.vertices)) == {(-1, -1, 1)}
    assert set(map(tuple, f0.vertices)) == {(0, 0, 0), (2, 1, 0)}


def test_family_carries_induced_enlargement():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    assert fam.induced_datum == induced_boundary_datum(fano, d)
    assert set(fam.induced.tilde.rays) == {
        (0, 1, 1, 0), (-1, -1, 1, -1), (0, 0, 0, 1), (2, 1, 0, 1)}


# ------------------------------------------------------------ fibers


def test_parameter_point_normalization():
    assert normalize_parameter_point(("1/2", "-1/3", 0)) == (3, -2, 0)
    assert normalize_parameter_point((-2, 4, 0)) == (1, -2, 0)
    assert normalize_parameter_point((0, 0, 5)) == (0, 0, 1)
    with pytest.raises(ValueError):
        normalize_parameter_point((0, 0, 0))


def test_fiber_kinds_on_p114():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    fib0 = specialize_fiber(fam, (0, 1, -1))
    assert fib0.kind == "original" and fib0.matched is True
    fib1 = specialize_fiber(fam, (1, 0, -1))
    assert fib1.kind == "mutated" and fib1.matched is True
    gen = specialize_fiber(fam, (1, 1, 1))
    assert gen.kind == "generic" and gen.matched is None
    assert len(gen.polynomial.terms) == 3


def test_fiber_scaling_invariance():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    a = specialize_fiber(fam, (0, 1, -1))
    b = specialize_fiber(fam, ("0", "-1/2", "1/2"))
    assert a.point == b.point
    assert a.polynomial.proportional(b.polynomial)


def test_deleted_base_points():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    for bad in ((1, 0, 0), (0, 1, 0), ("2", "0", "0")):
        with pytest.raises(OutsideVError, match="OutsideV"):
            specialize_fiber(fam, bad)


def test_special_fibers_match_on_random_cases():
    for fano, d in corpus.random_mutation_cases(6):
        fam = mutation_family(fano, d)
        assert specialize_fiber(fam, (0, 1, -1)).matched is True
        assert specialize_fiber(fam, (1, 0, -1)).matched is True


def test_fiber_report_json():
    fano, d, _ = p114_setup()
    fam = mutation_family(fano, d)
    data = specialize_fiber(fam, (0, 1, -1)).to_json()
    assert data["kind"] == "original"
    assert data["point"] == ["0", "1", "-1"]
    assert data["matched"] is True
    assert "terms" in data["polynomial"]
