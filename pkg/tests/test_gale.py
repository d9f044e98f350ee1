import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chromadepth.colorful import (ColorfulConfiguration, extremal_config, hitting_simplices,
                                  is_relative_general_position)
from chromadepth.gale import (GaleTransform, PointConfiguration, cayley_embedding, circuit_signature,
                              colorful_gale, face_test, gale_orthogonal, gale_transform,
                              inverse_colorful_gale, positively_equivalent, positively_spanning,
                              spanning_predicates, summand_gale)

import oracles

SQUARE = PointConfiguration(2, ((1, 1), (1, -1), (-1, 1), (-1, -1)))


def as_gale(c: ColorfulConfiguration) -> GaleTransform:
    vectors = [p for cls in c.classes for p in cls]
    part, k = [], 0
    for cls in c.classes:
        part.append(tuple(range(k, k + len(cls))))
        k += len(cls)
    return GaleTransform(len(vectors), c.dim, tuple(vectors), tuple(part))


def proportional(u, v):
    return all(a * v[0] == b * u[0] for a, b in zip(u, v)) and u[0] * v[0] > 0


def test_gale_transform_examples():
    tri = gale_transform(PointConfiguration(2, ((0, 0), (1, 0), (0, 1))))
    assert tri.dim == 0 and tri.vectors == ((),) * 3
    g = gale_transform(SQUARE)
    assert g.dim == 1
    assert proportional([v[0] for v in g.vectors], [1, -1, -1, 1])
    line = gale_transform(PointConfiguration(1, ((0,), (1,), (2,), (3,))))
    assert line.dim == 2
    faces = [u for k in range(1, 5) for u in combinations(range(4), k) if face_test(line, u)]
    assert faces == [(0,), (3,), (0, 1, 2, 3)]
    with pytest.raises(ValueError, match="affine span deficient"):
        gale_transform(PointConfiguration(2, ((0, 0), (1, 1), (2, 2))))


def test_face_test_examples():
    g = gale_transform(SQUARE)
    assert face_test(g, {0, 1})
    assert not face_test(g, {0, 3})
    tri = gale_transform(PointConfiguration(2, ((0, 0), (1, 0), (0, 1))))
    assert all(face_test(tri, {v}) for v in range(3))


def test_cayley_embedding_examples():
    a = PointConfiguration.from_classes(1, [[(5,)], [(7,)]])
    assert cayley_embedding(a).points == ((0, 5), (1, 7))
    a = PointConfiguration.from_classes(1, [[(0,), (1,)], [(0,), (2,)]])
    assert cayley_embedding(a).points == ((0, 0), (0, 1), (1, 0), (1, 2))
    a = PointConfiguration.from_classes(2, [[(0, 0)], [(1, 0)], [(0, 1)]])
    assert [p[:2] for p in cayley_embedding(a).points] == [(0, 0), (1, 0), (0, 1)]
    with pytest.raises(ValueError):
        cayley_embedding(SQUARE)


def test_colorful_gale_examples():
    two_segments = PointConfiguration.from_classes(1, [[(0,), (1,)], [(0,), (2,)]])
    g = colorful_gale(two_segments)
    assert g.dim == 1
    for i in range(2):
        a, b = (v[0] for v in g.class_vectors(i))
        assert a * b < 0
    assert gale_orthogonal(cayley_embedding(two_segments), g)
    tri = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
    for tri2 in ([(0, 0, 1), (2, 1, 3), (1, 3, -1)], [(1, 1, 1), (3, 2, 2), (2, -1, 4)]):
        g = colorful_gale(PointConfiguration.from_classes(3, [tri, tri2]))
        assert g.dim == 1
        c = ColorfulConfiguration(1, (tuple(g.class_vectors(0)), tuple(g.class_vectors(1))))
        assert is_relative_general_position(c)
        assert hitting_simplices(c).csd <= 5


@pytest.mark.parametrize("shape", [(2, 2), (2, 2, 2), (3, 3), (3, 3, 3)])
def test_inverse_round_trip_on_extremal(shape):
    g = as_gale(extremal_config(shape))
    a = inverse_colorful_gale(g)
    n, d = sum(shape), len(shape) - 1
    assert a.dim == n - 2 * d - 1
    assert positively_equivalent(colorful_gale(a).vectors, g.vectors)


def test_inverse_rejects_uncentered():
    g = GaleTransform(4, 1, ((1,), (2,), (1,), (-1,)), ((0, 1), (2, 3)))
    with pytest.raises(ValueError, match="not centered"):
        inverse_colorful_gale(g)


def test_circuit_examples():
    assert circuit_signature([(1,), (-1,)]) == {(frozenset({0, 1}), frozenset())}
    assert circuit_signature([(1,), (2,)]) == {(frozenset({0}), frozenset({1}))}
    vs = [(1, 0), (0, 1), (-1, -1), (1, 1)]
    sig = circuit_signature(vs)
    assert (frozenset({2, 3}), frozenset()) in sig
    assert (frozenset({0, 1, 2}), frozenset()) in sig
    assert (frozenset({0, 1}), frozenset({3})) in sig
    assert sig == oracles.circuits(vs)


def test_positive_equivalence_examples():
    vs = [(1, 0), (0, 1), (-1, -1), (1, 2)]
    assert positively_equivalent(vs, [(3 * x, 3 * y) for x, y in vs])
    assert not positively_equivalent(vs, [(-1, 0)] + vs[1:])
    m = [[2, 1], [1, 1]]
    assert positively_equivalent(vs, [tuple(sum(m[i][j] * v[j] for j in range(2)) for i in range(2))
                                      for v in vs])


def test_summand_gale_examples():
    two_segments = PointConfiguration.from_classes(1, [[(0,), (1,)], [(0,), (2,)]])
    g = colorful_gale(two_segments)
    assert all(v == () for v in summand_gale(g, 0))
    square_cls = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    a = PointConfiguration.from_classes(2, [[(0, 0), (F(1, 3), F(1, 7))], square_cls])
    g = colorful_gale(a)
    q = summand_gale(g, 1)
    assert len(q[0]) == 1
    assert positively_equivalent(q, gale_transform(PointConfiguration(2, tuple(square_cls))).vectors)


def test_spanning_examples():
    assert spanning_predicates([(1,), (-1,)]) == (True, False)
    assert spanning_predicates([(1,), (-1,), (2,), (-2,)]) == (True, True)
    # a pentagon is in convex position, so its Gale vectors are positively 2-spanning
    pentagon = PointConfiguration(2, ((2, 0), (1, 2), (-1, 2), (-2, 0), (0, -2)))
    assert spanning_predicates(gale_transform(pentagon).vectors).positively_2_spanning
    # an interior point breaks it
    inner = PointConfiguration(2, ((2, 0), (0, 2), (-2, -2), (0, 0), (1, -1)))
    assert not spanning_predicates(gale_transform(inner).vectors).positively_2_spanning
    assert not positively_spanning([])


def random_points(rnd, n, d, bound=3):
    while True:
        pts = tuple(tuple(rnd.randint(-bound, bound) for _ in range(d)) for _ in range(n))
        if len(set(pts)) == n:
            try:
                return gale_transform(PointConfiguration(d, pts)), pts
            except ValueError:
                continue


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10 ** 6))
def test_face_test_matches_separation_oracle(d, seed):
    rnd = random.Random(seed)
    n = rnd.randint(d + 1, 7)
    g, pts = random_points(rnd, n, d)
    for k in range(1, n + 1):
        for u in combinations(range(n), k):
            assert face_test(g, u) == oracles.separable_face(pts, u), (pts, u)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10 ** 6))
def test_gale_orthogonal_and_circuits(d, seed):
    rnd = random.Random(seed)
    g, pts = random_points(rnd, rnd.randint(d + 1, 7), d)
    assert gale_orthogonal(PointConfiguration(d, pts), g)
    if g.dim:
        assert circuit_signature(g.vectors) == oracles.circuits(g.vectors)


def random_centered_gale(rnd, shape, dim):
    """Colorful Gale data from random point classes in dimension ``dim``."""
    while True:
        classes = [[tuple(rnd.randint(-3, 3) for _ in range(dim)) for _ in range(k)] for k in shape]
        try:
            return colorful_gale(PointConfiguration.from_classes(dim, classes))
        except (ValueError, AssertionError):
            continue


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_round_trip_on_random_transforms(seed):
    rnd = random.Random(seed)
    shape = rnd.choice([(2, 3), (3, 3), (2, 2, 3), (3, 4)])
    g = random_centered_gale(rnd, shape, 2)
    a = inverse_colorful_gale(g)
    assert positively_equivalent(colorful_gale(a).vectors, g.vectors)
