"""P-transforms of linear projections and Minkowski transforms of polytope collections.

A polytope with the origin in its interior is ``{x : l_i(x) <= 1}``.  For a
projection with row space ``L`` in the dual, the transform sends each facet
form to its class in the dual quotient by ``L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .colorful import origin_containment
from .gale import Partition, PointConfiguration, colorful_gale, positively_equivalent
from .kernel import linprog, quotient_map, rank, solve, transpose
from .kernel.linalg import row_space_basis
from .kernel.rational import Vec, barycenter, sub, vec
from .minkowski import SimplexV


@dataclass(frozen=True)
class HPolytope:
    dim: int
    forms: Tuple[Vec, ...]

    def __post_init__(self):
        forms = tuple(vec(f) for f in self.forms)
        object.__setattr__(self, "forms", forms)
        if any(len(f) != self.dim for f in forms):
            raise ValueError(f"forms must have length {self.dim}")
        for i in range(len(forms)):
            if _redundant(forms, i):
                raise ValueError(f"form {i} does not define a facet")


def _redundant(forms: Sequence[Vec], i: int) -> bool:
    # the form is redundant if the other inequalities already force l_i <= 1
    others = [list(f) for j, f in enumerate(forms) if j != i]
    cap = [list(forms[i])]
    res = linprog(list(forms[i]), a_ub=others + cap, b_ub=[1] * len(others) + [2])
    return res.optimal and res.optimum <= 1


@dataclass(frozen=True)
class LinearProjection:
    matrix: Tuple[Vec, ...]

    def __post_init__(self):
        m = tuple(vec(r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        if m and rank([list(r) for r in m]) != len(m):
            raise ValueError("projection is not surjective")

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @classmethod
    def identity(cls, d: int) -> "LinearProjection":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


@dataclass(frozen=True)
class PTransform:
    dim: int
    vectors: Tuple[Vec, ...]
    partition: Optional[Partition] = None

    def class_vectors(self, i: int) -> List[Vec]:
        return [self.vectors[v] for v in self.partition[i]]


@dataclass(frozen=True)
class Chart:
    """Affine coordinates on the hull of a simplex: ``x = origin + sum c_k basis[k]``."""
    origin: Vec
    basis: Tuple[Vec, ...]
    coords: Tuple[Vec, ...]


def simplex_chart(s: SimplexV) -> Chart:
    """Recenter at the barycenter and pass to coordinates on the affine hull.

    Full-dimensional simplices keep the ambient coordinates.
    """
    b = barycenter(s.vertices)
    shifted = [sub(v, b) for v in s.vertices]
    if s.dim == s.ambient:
        basis = tuple(tuple(int(i == j) for j in range(s.ambient)) for i in range(s.ambient))
        return Chart(b, basis, tuple(shifted))
    basis = tuple(vec(row) for row in row_space_basis([list(w) for w in shifted], s.ambient))
    cols = transpose([list(r) for r in basis], s.ambient)
    coords = []
    for w in shifted:
        c = solve(cols, list(w))
        if c is None:
            raise AssertionError("vertex outside its own affine hull")
        coords.append(c)
    return Chart(b, basis, tuple(coords))


def h_rep_from_simplex(s: SimplexV) -> HPolytope:
    """Facet forms of a simplex in its recentered affine chart; form i is opposite vertex i."""
    if s.dim < 1:
        raise ValueError("degenerate simplex")
    chart = simplex_chart(s)
    forms = []
    for i in range(len(chart.coords)):
        rows = [list(chart.coords[j]) for j in range(len(chart.coords)) if j != i]
        f = solve(rows, [1] * len(rows))
        if f is None:
            raise ValueError("degenerate simplex")
        forms.append(f)
    return HPolytope(s.dim, tuple(forms))


def p_transform(p: HPolytope, proj: LinearProjection) -> PTransform:
    """Facet forms modulo the pullback of the target dual."""
    if proj.matrix and proj.source_dim != p.dim:
        raise ValueError("projection does not act on the polytope's space")
    rows = [list(r) for r in proj.matrix]
    if rows and rank(rows) != len(rows):
        raise ValueError("projection is rank deficient")
    project, qdim = quotient_map(rows, p.dim)
    return PTransform(qdim, tuple(project(f) for f in p.forms))


def is_face_index_set(p: HPolytope, index_set) -> bool:
    """Is ``index_set`` exactly the set of facets containing some non-empty face?"""
    idx = set(index_set)
    if not idx <= set(range(len(p.forms))):
        return False
    eq = [list(p.forms[i]) for i in sorted(idx)]
    rest = [list(p.forms[j]) for j in range(len(p.forms)) if j not in idx]
    if not rest:
        res = linprog([0] * p.dim, a_eq=eq, b_eq=[1] * len(eq))
        return res.optimal
    # maximize the slack t of the remaining forms on the face
    a_ub = [r + [1] for r in rest] + [[0] * p.dim + [1]]
    res = linprog([0] * p.dim + [1], a_ub=a_ub, b_ub=[1] * len(rest) + [1],
                  a_eq=[r + [0] for r in eq], b_eq=[1] * len(eq))
    return res.optimal and res.optimum > 0


def projection_face_test(p: HPolytope, proj: LinearProjection, face_index_set) -> bool:
    """Does the face survive the projection as a proper face with the same preimage?"""
    if not is_face_index_set(p, face_index_set):
        raise ValueError("index set is not a face")
    g = p_transform(p, proj)
    vecs = [g.vectors[i] for i in sorted(set(face_index_set))]
    if not vecs:
        return False
    if g.dim == 0:
        return True
    return origin_containment(vecs).in_relint


def _block_form(form: Vec, offset: int, total: int) -> Vec:
    out = [0] * total
    out[offset:offset + len(form)] = form
    return vec(out)


def minkowski_transform(polys: Sequence[HPolytope],
                        embeddings: Optional[Sequence[Sequence[Sequence]]] = None) -> PTransform:
    """Transform of the product polytope under the sum map, partitioned by summand.

    ``embeddings[i]`` lists the images of the coordinate vectors of summand i
    in the common space (identity when omitted); the sum map then sends
    ``(x_0, .., x_s)`` to ``sum_i E_i x_i``.
    """
    if not polys:
        raise ValueError("no polytopes")
    if embeddings is None:
        d = polys[0].dim
        if any(p.dim != d for p in polys):
            raise ValueError("polytopes of mixed dimension need embeddings")
        embeddings = [[tuple(int(i == j) for j in range(d)) for i in range(d)] for _ in polys]
    d = len(embeddings[0][0]) if embeddings[0] else 0
    total = sum(p.dim for p in polys)
    cols: List[Vec] = []
    for p, emb in zip(polys, embeddings):
        if len(emb) != p.dim:
            raise ValueError("embedding does not match the polytope dimension")
        cols.extend(vec(e) for e in emb)
    matrix = transpose([list(c) for c in cols], d)
    proj = LinearProjection(tuple(tuple(r) for r in matrix))
    forms, part, offset = [], [], 0
    for p in polys:
        part.append(tuple(range(len(forms), len(forms) + len(p.forms))))
        forms.extend(_block_form(f, offset, total) for f in p.forms)
        offset += p.dim
    g = p_transform(HPolytope(total, tuple(forms)), proj)
    out = PTransform(g.dim, g.vectors, tuple(part))
    for i in range(len(polys)):
        if out.dim and not origin_containment(out.class_vectors(i)).in_relint:
            raise AssertionError("Minkowski transform is not centered")
    return out


def simplex_minkowski_transform(simplices: Sequence[SimplexV]) -> PTransform:
    """Minkowski transform of simplices in their affine charts; facet i of a summand is opposite vertex i."""
    polys, embs = [], []
    for s in simplices:
        chart = simplex_chart(s)
        polys.append(h_rep_from_simplex(s))
        embs.append(chart.basis)
    return minkowski_transform(polys, embs)


def verify_coincidence(simplices: Sequence[SimplexV]) -> bool:
    """Minkowski transform and colorful Gale transform agree up to positive equivalence."""
    m = simplex_minkowski_transform(simplices)
    amb = simplices[0].ambient
    g = colorful_gale(PointConfiguration.from_classes(amb, [s.vertices for s in simplices]))
    if m.dim != g.dim:
        return False
    return positively_equivalent(m.vectors, g.vectors)


def delta_transform(points: Sequence[Sequence]) -> PTransform:
    """Transform of the simplex projecting onto ``conv(points)``, vertex j onto point j.

    Facet i of the simplex is the one missing vertex i, so the result is
    indexed like the points.
    """
    pts = [vec(p) for p in points]
    n = len(pts)
    if n < 2:
        raise ValueError("need at least two points")
    e = len(pts[0])
    simplex = SimplexV(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    chart = simplex_chart(simplex)
    q = barycenter(pts)
    centered = [sub(p, q) for p in pts]
    # a chart direction b (coordinates summing to 0) maps to sum_j b_j (p_j - q)
    images = [tuple(sum(b[j] * centered[j][k] for j in range(n)) for k in range(e)) for b in chart.basis]
    matrix = transpose([list(c) for c in images], e)
    if rank(matrix) != e:
        raise ValueError("points are not full-dimensional")
    return p_transform(h_rep_from_simplex(simplex), LinearProjection(tuple(tuple(r) for r in matrix)))


__all__ = [
    "Chart", "HPolytope", "LinearProjection", "PTransform", "delta_transform", "h_rep_from_simplex",
    "is_face_index_set", "minkowski_transform", "p_transform", "projection_face_test",
    "simplex_chart", "simplex_minkowski_transform", "verify_coincidence",
]
