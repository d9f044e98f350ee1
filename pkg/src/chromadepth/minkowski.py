"""Minkowski sums of simplices: faces through colorful Gale duality, totally mixed facets, fans.

A collection of simplices is handled as one partitioned point configuration
whose classes are the vertex sets.  Faces of the Minkowski sum are selections
``U_i`` of vertices, one non-empty subset per summand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import prod
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .colorful import extremal_config, hits, origin_containment
from .gale import GaleTransform, PointConfiguration, colorful_gale, inverse_colorful_gale
from .kernel import LPStatus, det_int, linprog, null_basis, rank
from .kernel.rational import Vec, integral_direction, lcm, sub, vec


@dataclass(frozen=True)
class SimplexV:
    vertices: Tuple[Vec, ...]

    def __post_init__(self):
        verts = tuple(vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("a simplex needs at least one vertex")
        if any(len(v) != len(verts[0]) for v in verts):
            raise ValueError("vertices of mixed dimension")
        if rank([list(v) + [1] for v in verts]) != len(verts):
            raise ValueError("simplex vertices are affinely dependent")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient(self) -> int:
        return len(self.vertices[0])


@dataclass(frozen=True)
class MinkowskiFace:
    selection: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "selection", tuple(tuple(sorted(u)) for u in self.selection))


def collection_config(simplices: Sequence[SimplexV]) -> PointConfiguration:
    amb = {s.ambient for s in simplices}
    if len(amb) != 1:
        raise ValueError("simplices must share their ambient space")
    return PointConfiguration.from_classes(amb.pop(), [s.vertices for s in simplices])


def _require_full_sum(simplices: Sequence[SimplexV]) -> None:
    edges = [list(sub(v, s.vertices[0])) for s in simplices for v in s.vertices[1:]]
    if not edges or rank(edges) != simplices[0].ambient:
        raise ValueError("Minkowski sum is not full-dimensional")


def mink_face_test(simplices: Sequence[SimplexV], u: MinkowskiFace) -> bool:
    """Is the sum of the selected vertex subsets a face of the Minkowski sum?"""
    _require_full_sum(simplices)
    if len(u.selection) != len(simplices) or any(not sel for sel in u.selection):
        raise ValueError("one non-empty selection per summand is required")
    g = colorful_gale(collection_config(simplices))
    chosen = {g.partition[i][j] for i, sel in enumerate(u.selection) for j in sel}
    rest = [g.vectors[v] for v in range(g.source_size) if v not in chosen]
    if not rest:
        return True
    return origin_containment(rest).in_relint


def totally_mixed_facets(simplices: Sequence[SimplexV]) -> List[MinkowskiFace]:
    """Facets of the sum made of one facet from every summand.

    They correspond to colorful simplices of the colorful Gale transform that
    contain the origin in their interior; the facet drops the chosen vertex
    from each summand.  This needs the ambient dimension to be one more than
    the sum of ``dim - 1`` over the summands.
    """
    dims = [s.dim for s in simplices]
    ambient = simplices[0].ambient
    if ambient != sum(dims) - len(dims) + 1:
        raise ValueError("no totally mixed facets possible at this dimension")
    _require_full_sum(simplices)
    g = colorful_gale(collection_config(simplices))
    dirs = [integral_direction(v) for v in g.vectors]
    out = []
    for choice in product(*g.partition):
        if hits([dirs[v] for v in choice], strict=True):
            sel = []
            for cls, v in zip(g.partition, choice):
                sel.append(tuple(j for j, w in enumerate(cls) if w != v))
            out.append(MinkowskiFace(tuple(sel)))
    return out


def tmf_bound(dims: Sequence[int]) -> int:
    return 1 + prod(dims)


def extremal_minkowski(dims: Sequence[int]) -> List[SimplexV]:
    """Simplices of the given dimensions with the largest possible number of totally mixed facets.

    The extremal colorful configuration with class sizes ``dims[i] + 1`` is
    read as a colorful Gale transform and inverted.
    """
    dims = list(dims)
    if len(dims) < 2 or any(k < 1 for k in dims):
        raise ValueError("need at least two summands of positive dimension")
    c = extremal_config([k + 1 for k in dims])
    vectors = tuple(p for cls in c.classes for p in cls)
    part, start = [], 0
    for cls in c.classes:
        part.append(tuple(range(start, start + len(cls))))
        start += len(cls)
    g = GaleTransform(len(vectors), c.dim, vectors, tuple(part))
    a = inverse_colorful_gale(g)
    return [SimplexV(tuple(a.points[v] for v in cls)) for cls in a.partition]


def random_simplices(dims: Sequence[int], seed: int, coord_bound: int = 4,
                     ambient: Optional[int] = None) -> List[SimplexV]:
    """Seeded integer simplices of the given dimensions whose sum is full-dimensional.

    The ambient dimension defaults to the one where totally mixed facets can occur.
    """
    dims = list(dims)
    if ambient is None:
        ambient = sum(dims) - len(dims) + 1
    if any(k > ambient for k in dims):
        raise ValueError("a simplex does not fit in the ambient space")
    rng = random.Random(seed)
    while True:
        out = []
        for k in dims:
            while True:
                verts = [tuple(rng.randint(-coord_bound, coord_bound) for _ in range(ambient))
                         for _ in range(k + 1)]
                if rank([list(v) + [1] for v in verts]) == k + 1:
                    out.append(SimplexV(tuple(verts)))
                    break
        try:
            _require_full_sum(out)
        except ValueError:
            continue
        return out


def minkowski_points(simplices: Sequence[SimplexV]) -> Tuple[List[Vec], List[Tuple[int, ...]]]:
    """All sums of one vertex per summand, with the vertex choice behind each."""
    pts, labels = [], []
    for choice in product(*(range(len(s.vertices)) for s in simplices)):
        p = [sum(col) for col in zip(*(s.vertices[j] for s, j in zip(simplices, choice)))]
        pts.append(tuple(p))
        labels.append(choice)
    return pts, labels


def facet_oracle(points: Sequence[Sequence], cap: int = 60) -> List[Tuple[int, ...]]:
    """Facets of the convex hull by brute force over hyperplanes through d points.

    Every facet is reported as the sorted set of point indices lying on it.
    """
    pts = [vec(p) for p in points]
    if len(pts) > cap:
        raise ValueError(f"facet oracle is capped at {cap} points")
    if not pts:
        return []
    d = len(pts[0])
    if rank([list(p) + [1] for p in pts]) != d + 1:
        raise ValueError("points are not full-dimensional")
    den = 1
    for p in pts:
        for x in p:
            den = lcm(den, x.denominator)
    ints = [[int(x * den) for x in p] for p in pts]
    found: List[int] = []
    facets = []
    for subset in combinations(range(len(pts)), d):
        mask = sum(1 << i for i in subset)
        if any(f & mask == mask for f in found):
            continue
        base = ints[subset[0]]
        diffs = [[a - b for a, b in zip(ints[j], base)] for j in subset[1:]]
        normal = []
        for k in range(d):
            minor = det_int([row[:k] + row[k + 1:] for row in diffs])
            normal.append(minor if k % 2 == 0 else -minor)
        if not any(normal):
            continue
        level = sum(a * b for a, b in zip(normal, base))
        vals = [sum(a * b for a, b in zip(normal, p)) - level for p in ints]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            support = tuple(i for i, v in enumerate(vals) if v == 0)
            found.append(sum(1 << i for i in support))
            facets.append(support)
    return sorted(facets)


# --- fans of triangles --------------------------------------------------------------------

class Leaf(NamedTuple):
    """Linear functionals with ``equal . l = 0`` and ``positive . l >= 0``."""
    equal: Vec
    positive: Vec


@dataclass(frozen=True)
class Fan3:
    leaves: Tuple[Leaf, Leaf, Leaf]
    axis: Tuple[Vec, ...]
    source: SimplexV


def fan_from_triangle(t: SimplexV) -> Fan3:
    """Normal fan of a triangle: leaf (i, j) is where vertices i and j tie for the maximum."""
    if t.dim != 2:
        raise ValueError("a fan comes from a triangle")
    if t.ambient < 2:
        raise ValueError("fans live in dimension at least 2")
    u = t.vertices
    leaves = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        (k,) = {0, 1, 2} - {i, j}
        leaves.append(Leaf(sub(u[i], u[j]), sub(u[i], u[k])))
    axis = tuple(null_basis([list(sub(u[0], u[1])), list(sub(u[0], u[2]))], t.ambient))
    if len(axis) != t.ambient - 2:
        raise ValueError("degenerate triangle")
    for a, b in combinations(leaves, 2):
        if rank([list(a.equal), list(b.equal)]) != 2:
            raise AssertionError("coplanar leaves")
    return Fan3(tuple(leaves), axis, t)


class Cone(NamedTuple):
    equalities: Tuple[Vec, ...]
    inequalities: Tuple[Vec, ...]  # each g with g . l >= 0


def _cone_lp_max(cone: Cone, objective: Sequence, dim: int):
    a_ub = [[-x for x in g] for g in cone.inequalities]
    return linprog(list(objective), a_ub=a_ub, b_ub=[0] * len(a_ub),
                   a_eq=[list(e) for e in cone.equalities], b_eq=[0] * len(cone.equalities))


def _cone_shape(cone: Cone, dim: int) -> Tuple[int, int]:
    """Dimension of the linear span and the number of inequalities holding with equality throughout.

    Implicit equalities are detected with LPs, or read off directly when the
    equalities leave at most a line.
    """
    line = null_basis([list(e) for e in cone.equalities], dim) if cone.equalities else None
    if line is not None and len(line) <= 1:
        if not line:
            return 0, len(cone.inequalities)
        vals = [sum(a * b for a, b in zip(g, line[0])) for g in cone.inequalities]
        tight = sum(v == 0 for v in vals)
        if tight == len(vals):
            return 1, tight
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            return 1, tight
        return 0, len(vals)
    implicit = []
    for g in cone.inequalities:
        a_ub = [[-x for x in h] for h in cone.inequalities] + [list(g)]
        res = linprog(list(g), a_ub=a_ub, b_ub=[0] * len(cone.inequalities) + [1],
                      a_eq=[list(e) for e in cone.equalities], b_eq=[0] * len(cone.equalities))
        if res.optimum == 0:
            implicit.append(list(g))
    rows = [list(e) for e in cone.equalities] + implicit
    return dim - (rank(rows) if rows else 0), len(implicit)


def cone_dimension(cone: Cone, dim: int) -> int:
    """Dimension of the linear span of the cone."""
    return _cone_shape(cone, dim)[0]


def cone_contains(big: Cone, small: Cone, dim: int) -> bool:
    """Every functional of ``small`` satisfies the constraints of ``big``."""
    tests = [tuple(-x for x in g) for g in big.inequalities]
    for e in big.equalities:
        tests += [e, tuple(-x for x in e)]
    for t in tests:
        if _cone_lp_max(small, t, dim).status is LPStatus.UNBOUNDED:
            return False
    return True


def _ray(cone: Cone, dim: int) -> Tuple[int, ...]:
    (r,) = null_basis([list(e) for e in cone.equalities], dim)
    r = integral_direction(r)
    if any(sum(a * b for a, b in zip(g, r)) < 0 for g in cone.inequalities):
        r = tuple(-x for x in r)
    return r


class FanIntersection(NamedTuple):
    maximal_cones: int
    bound_ok: bool
    cones: Tuple[Tuple[int, ...], ...]
    tmf_count: int  # -1 when the triangle collection has the wrong dimension


def intersect_fans(fans: Sequence[Fan3]) -> FanIntersection:
    """Count inclusion-maximal cones among the intersections of one leaf per fan.

    The zero cone is not counted.  Every intersection must have the generic
    dimension (0 or ``d - k`` for ``k`` fans) and, unless it is zero, must
    meet the relative interior of each of its leaves; the count is cross-checked
    against the totally mixed facets of the triangles when their dimension
    allows it.
    """
    dim = fans[0].source.ambient
    k = len(fans)
    generic = max(dim - k, 0)
    cones = {}
    for choice in product(range(3), repeat=k):
        leaves = [f.leaves[i] for f, i in zip(fans, choice)]
        cone = Cone(tuple(l.equal for l in leaves), tuple(l.positive for l in leaves))
        if rank([list(e) for e in cone.equalities]) != min(k, dim):
            raise ValueError("fans not in relative general position")
        cdim, tight = _cone_shape(cone, dim)
        # a non-zero cone must reach the interior of every leaf it comes from
        if cdim not in (0, generic) or (cdim > 0 and tight):
            raise ValueError("fans not in relative general position")
        if cdim > 0:
            cones[choice] = cone
    maximal = []
    keys = sorted(cones)
    if generic == 1:
        # every non-zero cone is a ray: compare primitive directions
        seen = set()
        for a in keys:
            r = _ray(cones[a], dim)
            if r not in seen:
                seen.add(r)
                maximal.append(a)
        keys = []
    for a in keys:
        dominated = False
        for b in keys:
            if a == b or not cone_contains(cones[b], cones[a], dim):
                continue
            # equal cones: keep the first index choice only
            if not cone_contains(cones[a], cones[b], dim) or b < a:
                dominated = True
                break
        if not dominated:
            maximal.append(a)
    tmf = -1
    triangles = [f.source for f in fans]
    if dim == sum(t.dim for t in triangles) - len(triangles) + 1:
        tmf = len(totally_mixed_facets(triangles))
        if tmf != len(maximal):
            raise AssertionError(f"{len(maximal)} maximal cones but {tmf} totally mixed facets")
    bound = 1 + 2 ** (dim - 1) if k == dim - 1 else None
    ok = bound is None or len(maximal) <= bound
    return FanIntersection(len(maximal), ok, tuple(maximal), tmf)
