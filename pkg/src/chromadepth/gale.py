"""Gale transforms, Cayley embeddings and colorful Gale transforms.

Vector configurations are compared up to positive rescaling of single
vectors and linear isomorphism; the invariant used for that is the set of
signed circuits (minimal linear dependences with their sign patterns).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .colorful import circuit_vector, origin_containment
from .kernel import lp_min_coeff, matmul, null_basis, quotient_map, rank
from .kernel.rational import Vec, integral_direction, vec

Partition = Tuple[Tuple[int, ...], ...]

CIRCUIT_CAP = 12


@dataclass(frozen=True)
class PointConfiguration:
    dim: int
    points: Tuple[Vec, ...]
    partition: Optional[Partition] = None

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not live in dimension {self.dim}")
        if self.partition is not None:
            part = tuple(tuple(int(i) for i in cls) for cls in self.partition)
            flat = sorted(i for cls in part for i in cls)
            if flat != list(range(len(pts))):
                raise ValueError("partition must cover every index exactly once")
            if any(not cls for cls in part):
                raise ValueError("empty class in partition")
            object.__setattr__(self, "partition", part)

    @classmethod
    def from_classes(cls, dim: int, classes: Sequence[Sequence]) -> "PointConfiguration":
        points, part = [], []
        for c in classes:
            part.append(tuple(range(len(points), len(points) + len(c))))
            points.extend(c)
        return cls(dim, tuple(points), tuple(part))

    def class_points(self, i: int) -> List[Vec]:
        return [self.points[v] for v in self.partition[i]]


@dataclass(frozen=True)
class GaleTransform:
    source_size: int
    dim: int
    vectors: Tuple[Vec, ...]
    partition: Optional[Partition] = None

    def class_vectors(self, i: int) -> List[Vec]:
        return [self.vectors[v] for v in self.partition[i]]


def lift_matrix(a: PointConfiguration) -> List[list]:
    """Rows are the coordinates of the points, followed by a row of ones."""
    rows = [[p[k] for p in a.points] for k in range(a.dim)]
    rows.append([1] * len(a.points))
    return rows


def gale_transform(a: PointConfiguration) -> GaleTransform:
    """Gale vectors are the rows of a kernel basis of the lift matrix.

    The kernel basis is the canonical one read off the reduced row echelon
    form, so the output is deterministic.
    """
    lift = lift_matrix(a)
    n = len(a.points)
    if rank(lift) != a.dim + 1:
        raise ValueError("affine span deficient")
    basis = null_basis(lift, n)
    m = len(basis)
    vectors = tuple(tuple(b[v] for b in basis) for v in range(n))
    return GaleTransform(n, m, vectors, a.partition)


def face_test(g: GaleTransform, u) -> bool:
    """Is the index set ``u`` a face of the source configuration?

    The full index set counts as a face (the whole polytope).
    """
    u = set(u)
    rest = [g.vectors[v] for v in range(g.source_size) if v not in u]
    if not rest:
        return True
    return origin_containment(rest).in_relint


def cayley_embedding(a: PointConfiguration) -> PointConfiguration:
    """Put class i on the slab with prefix ``e_i`` (``e_0 = 0``)."""
    if a.partition is None:
        raise ValueError("Cayley embedding needs a partition")
    s = len(a.partition) - 1
    points: List[Optional[Vec]] = [None] * len(a.points)
    for i, cls in enumerate(a.partition):
        prefix = tuple(int(i == k + 1) for k in range(s))
        for v in cls:
            points[v] = vec(prefix) + a.points[v]
    return PointConfiguration(s + a.dim, tuple(points), a.partition)


def is_centered_transform(g: GaleTransform) -> bool:
    return all(origin_containment(g.class_vectors(i)).in_relint for i in range(len(g.partition)))


def colorful_gale(a: PointConfiguration) -> GaleTransform:
    g = gale_transform(cayley_embedding(a))
    if not is_centered_transform(g):
        raise AssertionError("colorful Gale transform is not centered")
    return g


def inverse_colorful_gale(g: GaleTransform, check: bool = True) -> PointConfiguration:
    """A configuration whose colorful Gale transform is positively equivalent to ``g``.

    Each class is rescaled by strictly positive weights that balance it at
    the origin.  The balanced vectors cut out a space ``W`` of linear
    relations; the class indicators lie in ``W``, and the remaining vectors of
    a basis of ``W`` extending them are the coordinates of the points.
    """
    if g.partition is None:
        raise ValueError("inverse colorful Gale transform needs a partition")
    n = g.source_size
    weights = [None] * n
    for cls in g.partition:
        res = lp_min_coeff([g.vectors[v] for v in cls])
        if not res.optimal or res.optimum <= 0:
            raise ValueError("transform is not centered")
        for v, lam in zip(cls, res.witness):
            weights[v] = lam
    scaled = [tuple(weights[v] * x for x in g.vectors[v]) for v in range(n)]
    mat = [[scaled[v][k] for v in range(n)] for k in range(g.dim)]
    if g.dim and rank(mat) != g.dim:
        raise ValueError("deficient transform")
    relations = null_basis(mat, n) if g.dim else [
        tuple(int(i == j) for j in range(n)) for i in range(n)]
    basis = [tuple(int(v in cls) for v in range(n)) for cls in g.partition]
    r = rank(basis)
    for w in relations:
        if rank(basis + [list(w)]) > r:
            basis.append(list(w))
            r += 1
    extra = basis[len(g.partition):]
    points = tuple(tuple(y[v] for y in extra) for v in range(n))
    a = PointConfiguration(len(extra), points, g.partition)
    if check and n <= CIRCUIT_CAP:
        if not positively_equivalent(colorful_gale(a).vectors, g.vectors):
            raise AssertionError("round trip through the Cayley embedding failed")
    return a


# --- circuits -----------------------------------------------------------------------------

Circuit = Tuple[FrozenSet[int], FrozenSet[int]]


def circuit_signature(vectors: Sequence[Sequence]) -> FrozenSet[Circuit]:
    """Signed circuits of a vector family, each oriented so its smallest index is positive."""
    n = len(vectors)
    if n > CIRCUIT_CAP:
        raise ValueError(f"circuit enumeration is capped at {CIRCUIT_CAP} vectors")
    dirs = [integral_direction(vec(v)) for v in vectors]
    top = rank([list(d) for d in dirs]) if dirs and dirs[0] else 0
    out = set()
    for size in range(1, min(n, top + 1) + 1):
        for sub in combinations(range(n), size):
            if size == 1:
                if not any(dirs[sub[0]]):
                    out.add((frozenset(sub), frozenset()))
                continue
            lam = circuit_vector([dirs[i] for i in sub])
            if lam is None or not all(lam):
                continue
            if lam[0] < 0:
                lam = [-x for x in lam]
            pos = frozenset(i for i, x in zip(sub, lam) if x > 0)
            neg = frozenset(i for i, x in zip(sub, lam) if x < 0)
            out.add((pos, neg))
    return frozenset(out)


def positively_equivalent(v1: Sequence[Sequence], v2: Sequence[Sequence]) -> bool:
    """Same signed circuits: what survives positive rescaling and linear isomorphism."""
    if len(v1) != len(v2):
        return False
    return circuit_signature(v1) == circuit_signature(v2)


def summand_gale(g: GaleTransform, i: int) -> List[Vec]:
    """Class-i vectors modulo the span of all other vectors: a Gale transform of summand i."""
    others = [list(g.vectors[v]) for k, cls in enumerate(g.partition) if k != i for v in cls]
    project, _ = quotient_map(others, g.dim)
    return [project(g.vectors[v]) for v in g.partition[i]]


class Spanning(NamedTuple):
    positively_spanning: bool
    positively_2_spanning: bool


def positively_spanning(vectors: Sequence[Sequence]) -> bool:
    if not vectors:
        return False
    return origin_containment(vectors).in_interior


def spanning_predicates(vectors: Sequence[Sequence]) -> Spanning:
    vectors = list(vectors)
    span = positively_spanning(vectors)
    two = span and all(positively_spanning(vectors[:j] + vectors[j + 1:])
                       for j in range(len(vectors)))
    return Spanning(span, two)


def gale_orthogonal(a: PointConfiguration, g: GaleTransform) -> bool:
    """Lift matrix times the Gale vector matrix vanishes."""
    if g.dim == 0:
        return True
    prod = matmul(lift_matrix(a), [list(v) for v in g.vectors])
    return all(x == 0 for row in prod for x in row)
