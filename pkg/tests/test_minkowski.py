from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from chromadepth.minkowski import (Cone, MinkowskiFace, SimplexV, cone_dimension, extremal_minkowski,
                                   facet_oracle, fan_from_triangle, intersect_fans, mink_face_test,
                                   minkowski_points, random_simplices, tmf_bound, totally_mixed_facets)

import oracles


def seg(a, b):
    return SimplexV(((a,), (b,)))


def oracle_tmf(simplices):
    """Totally mixed facets read off the brute-force facet list of all vertex sums."""
    pts, labels = minkowski_points(simplices)
    out = set()
    for support in facet_oracle(pts):
        sel = tuple(tuple(sorted({labels[i][k] for i in support})) for k in range(len(simplices)))
        if all(len(u) == s.dim for u, s in zip(sel, simplices)) and \
                {labels[i] for i in support} == set(product(*sel)):
            out.add(sel)
    return out


def test_simplex_validation():
    with pytest.raises(ValueError, match="affinely dependent"):
        SimplexV(((0, 0), (1, 1), (2, 2)))
    assert SimplexV(((0, 0), (1, 0), (0, 1))).dim == 2


def test_mink_face_examples():
    pair = [seg(0, 1), seg(0, 2)]
    assert mink_face_test(pair, MinkowskiFace(((1,), (1,))))
    assert not mink_face_test(pair, MinkowskiFace(((0,), (1,))))
    assert mink_face_test(pair, MinkowskiFace(((0, 1), (0, 1))))
    with pytest.raises(ValueError):
        mink_face_test(pair, MinkowskiFace(((1,),)))
    with pytest.raises(ValueError, match="not full-dimensional"):
        mink_face_test([SimplexV(((0, 0), (1, 0))), SimplexV(((0, 0), (2, 0)))],
                       MinkowskiFace(((0,), (0,))))


def test_mink_face_test_on_triangles_matches_oracle():
    tris = random_simplices((2, 2), 3)
    for sel in product(*(
            [u for k in (1, 2) for u in combinations(range(3), k)] for _ in tris)):
        face = MinkowskiFace(sel)
        assert mink_face_test(tris, face) == oracles.minkowski_face([t.vertices for t in tris], sel)


def test_tmf_examples():
    facets = totally_mixed_facets([seg(0, 1), seg(0, 2)])
    assert len(facets) == 2 == tmf_bound((1, 1))
    tris = random_simplices((2, 2), 0)
    assert len(totally_mixed_facets(tris)) <= 5
    with pytest.raises(ValueError, match="no totally mixed facets"):
        totally_mixed_facets(random_simplices((2, 2), 0, ambient=2))


@pytest.mark.parametrize("dims,count", [((1, 1), 2), ((2, 2), 5), ((2, 2, 2), 9)])
def test_extremal_minkowski_counts(dims, count):
    simplices = extremal_minkowski(dims)
    facets = totally_mixed_facets(simplices)
    assert len(facets) == count == tmf_bound(dims)
    assert {f.selection for f in facets} == oracle_tmf(simplices)


def test_extremal_minkowski_errors():
    with pytest.raises(ValueError):
        extremal_minkowski((2,))


def test_facet_oracle_examples():
    assert facet_oracle([(1, 1), (1, -1), (-1, 1), (-1, -1)]) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert len(facet_oracle([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 4
    with pytest.raises(ValueError, match="capped"):
        facet_oracle([(i,) for i in range(61)])


def test_fan_examples():
    f = fan_from_triangle(SimplexV(((0, 0), (1, 0), (0, 1))))
    assert f.axis == () and len(f.leaves) == 3
    for leaf in f.leaves:
        assert cone_dimension(Cone((leaf.equal,), (leaf.positive,)), 2) == 1
    t = SimplexV(((0, 0, 0), (2, 1, 0), (1, 3, 1)))
    f = fan_from_triangle(t)
    assert len(f.axis) == 1
    for leaf in f.leaves:
        assert cone_dimension(Cone((leaf.equal,), (leaf.positive,)), 3) == 2
    with pytest.raises(ValueError):
        fan_from_triangle(SimplexV(((0, 0), (1, 0))))


def test_fans_balanced():
    # the three leaves split space: every generic functional lies in exactly one region
    t = SimplexV(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    verts = t.vertices
    for l in product(range(-2, 3), repeat=3):
        vals = [sum(a * b for a, b in zip(l, v)) for v in verts]
        top = max(vals)
        if vals.count(top) == 1:
            continue
        f = fan_from_triangle(t)
        on = [sum(a * b for a, b in zip(leaf.equal, l)) == 0 and
              sum(a * b for a, b in zip(leaf.positive, l)) >= 0 for leaf in f.leaves]
        assert any(on)


def test_intersect_fans_examples():
    single = intersect_fans([fan_from_triangle(SimplexV(((0, 0), (1, 0), (0, 1))))])
    assert single.maximal_cones == 3
    fans = [fan_from_triangle(t) for t in extremal_minkowski((2, 2))]
    res = intersect_fans(fans)
    assert res.maximal_cones == 5 == res.tmf_count and res.bound_ok
    res = intersect_fans([fan_from_triangle(t) for t in extremal_minkowski((2, 2, 2))])
    assert res.maximal_cones == 9 == res.tmf_count


sizes = st.lists(st.integers(1, 3), min_size=2, max_size=3).filter(lambda ds: sum(ds) <= 6)


@settings(max_examples=30, deadline=None)
@given(sizes, st.integers(0, 10 ** 6))
def test_tmf_matches_facet_oracle(dims, seed):
    simplices = random_simplices(dims, seed)
    if len(minkowski_points(simplices)[0]) > 60:
        return
    facets = totally_mixed_facets(simplices)
    assert len(facets) <= tmf_bound(dims)
    assert {f.selection for f in facets} == oracle_tmf(simplices)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_two_random_fans_bounded(seed):
    tris = random_simplices((2, 2), seed)
    try:
        res = intersect_fans([fan_from_triangle(t) for t in tris])
    except ValueError:
        return  # not in relative general position
    assert res.maximal_cones <= 5 and res.bound_ok
    assert res.maximal_cones == len(totally_mixed_facets(tris))
