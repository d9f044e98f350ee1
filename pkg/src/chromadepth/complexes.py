"""Simplicial complexes over GF(2): the Rain complex, avoiding complexes, Betti numbers, collapses.

Vertices of a complex built from a colorful configuration are numbered class
by class: point ``j`` of class ``i`` gets ``offset_i + j``.  Faces are sorted
vertex tuples; the empty face is stored in dimension -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .colorful import (ColorfulConfiguration, extremal_config, hitting_simplices, is_centered,
                       is_relative_general_position, minimal_hitting_set)

Face = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplexGF2:
    vertex_count: int
    faces_by_dim: Tuple[Tuple[Face, ...], ...]  # entry k holds the faces of dimension k - 1

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplexGF2":
        """Complex with exactly the given faces (no closure is taken)."""
        by_dim: Dict[int, Set[Face]] = {}
        for f in faces:
            f = tuple(sorted(f))
            by_dim.setdefault(len(f), set()).add(f)
        top = max(by_dim) if by_dim else 0
        return cls(vertex_count, tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1)))

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplexGF2":
        faces: Set[Face] = {()}
        for f in facets:
            f = tuple(sorted(set(f)))
            for k in range(len(f) + 1):
                faces.update(combinations(f, k))
        return cls.from_faces(vertex_count, faces)

    @property
    def top_dim(self) -> int:
        return len(self.faces_by_dim) - 2

    def faces(self, k: int) -> Tuple[Face, ...]:
        if -1 <= k <= self.top_dim:
            return self.faces_by_dim[k + 1]
        return ()

    def all_faces(self) -> List[Face]:
        return [f for layer in self.faces_by_dim for f in layer]

    def face_set(self) -> FrozenSet[Face]:
        return frozenset(self.all_faces())

    def facets(self) -> List[Face]:
        """Inclusion-maximal faces."""
        faces = self.face_set()
        out = []
        for f in self.all_faces():
            fs = set(f)
            if not any(v not in fs and tuple(sorted(f + (v,))) in faces
                       for v in range(self.vertex_count)):
                out.append(f)
        return out

    def is_closed(self) -> bool:
        faces = self.face_set()
        for f in faces:
            for k in range(len(f)):
                if f[:k] + f[k + 1:] not in faces:
                    return False
        return True


class BettiVector(tuple):
    """Reduced Betti numbers, index k holding the k-th one."""

    def at(self, k: int) -> int:
        return self[k] if 0 <= k < len(self) else 0


def class_offsets(shape: Sequence[int]) -> List[int]:
    out, acc = [], 0
    for n in shape:
        out.append(acc)
        acc += n
    return out


def simplex_face(shape: Sequence[int], simplex) -> Face:
    off = class_offsets(shape)
    return tuple(sorted(off[c] + i for c, i in simplex))


def rain_complex(n: Sequence[int]) -> SimplicialComplexGF2:
    """Join of the discrete complexes on each class: every colorful simplex is a face."""
    if any(k < 1 for k in n):
        raise ValueError("class sizes must be positive")
    off = class_offsets(n)
    faces = []
    # each class contributes either nothing or one of its vertices
    for choice in product(*([None] + list(range(k)) for k in n)):
        faces.append(tuple(off[c] + i for c, i in enumerate(choice) if i is not None))
    return SimplicialComplexGF2.from_faces(sum(n), faces)


def avoiding_complex(c: ColorfulConfiguration) -> SimplicialComplexGF2:
    """Colorful simplices whose hull misses the origin.

    A face contains 0 in its hull exactly when it contains one of the minimal
    hitting faces, so those are computed once and used as a filter.
    """
    shape = c.shape
    minimal = [frozenset(simplex_face(shape, s)) for s in minimal_hitting_set(c)]
    rain = rain_complex(shape)
    faces = [f for f in rain.all_faces() if not any(m <= set(f) for m in minimal)]
    return SimplicialComplexGF2.from_faces(rain.vertex_count, faces)


# --- GF(2) linear algebra on bit-packed vectors --------------------------------------------

class _XorBasis:
    """Row-reduced GF(2) vectors stored as Python ints, keyed by leading bit."""

    def __init__(self):
        self.rows: Dict[int, int] = {}
        self.tags: Dict[int, int] = {}

    def reduce(self, v: int, tag: int = 0) -> Tuple[int, int]:
        while v:
            top = v.bit_length() - 1
            row = self.rows.get(top)
            if row is None:
                break
            v ^= row
            tag ^= self.tags[top]
        return v, tag

    def add(self, v: int, tag: int = 0) -> bool:
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        top = v.bit_length() - 1
        self.rows[top] = v
        self.tags[top] = tag
        return True

    def __len__(self) -> int:
        return len(self.rows)


def _boundary_masks(cx: SimplicialComplexGF2, k: int) -> List[int]:
    """Columns of the k-th boundary map as bit masks over the (k-1)-faces."""
    index = {f: i for i, f in enumerate(cx.faces(k - 1))}
    out = []
    for f in cx.faces(k):
        mask = 0
        for j in range(len(f)):
            mask |= 1 << index[f[:j] + f[j + 1:]]
        out.append(mask)
    return out


def gf2_rank(vectors: Iterable[int]) -> int:
    basis = _XorBasis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def betti_gf2(cx: SimplicialComplexGF2) -> BettiVector:
    """Reduced Betti numbers over GF(2), dimensions 0 through the top dimension."""
    if not cx.is_closed():
        raise ValueError("not a simplicial complex")
    top = cx.top_dim
    ranks = {k: gf2_rank(_boundary_masks(cx, k)) for k in range(0, top + 1)}
    ranks[top + 1] = 0
    return BettiVector(len(cx.faces(k)) - ranks[k] - ranks[k + 1] for k in range(top + 1))


class EulerReport(NamedTuple):
    csd: int
    betti_dminus1: int
    betti_d: int
    identity_holds: bool


def _require_centered_rgp(c: ColorfulConfiguration) -> None:
    if not is_centered(c):
        raise ValueError("configuration is not centered")
    if not is_relative_general_position(c):
        raise ValueError("configuration is not in relative general position")


def verify_euler_identity(c: ColorfulConfiguration) -> EulerReport:
    """Compare the depth with the Betti numbers of the avoiding complex.

    The two sides are computed independently: the depth by enumeration, the
    Betti numbers by GF(2) elimination on the avoiding complex.
    """
    _require_centered_rgp(c)
    d = c.dim
    csd = hitting_simplices(c).csd
    b = betti_gf2(avoiding_complex(c))
    lhs = prod(n - 1 for n in c.shape) + b.at(d - 1) - b.at(d)
    return EulerReport(csd, b.at(d - 1), b.at(d), csd == lhs)


def _chain_boundary(face: Face) -> List[Face]:
    return [face[:j] + face[j + 1:] for j in range(len(face))]


def homologous(av: SimplicialComplexGF2, eta1: Sequence[int], eta2: Sequence[int]
               ) -> Optional[FrozenSet[Face]]:
    """A chain of top faces of ``av`` whose boundary is the sum of the two boundaries, if any."""
    eta1, eta2 = tuple(sorted(eta1)), tuple(sorted(eta2))
    if eta1 == eta2:
        return frozenset()
    k = len(eta1) - 1
    ridges = list(av.faces(k - 1))
    for f in _chain_boundary(eta1) + _chain_boundary(eta2):
        if f not in ridges:
            ridges.append(f)
    index = {f: i for i, f in enumerate(ridges)}

    def mask(face):
        m = 0
        for r in _chain_boundary(face):
            m ^= 1 << index[r]
        return m

    target = mask(eta1) ^ mask(eta2)
    cols = list(av.faces(k))
    basis = _XorBasis()
    for j, f in enumerate(cols):
        basis.add(mask(f), 1 << j)
    rest, tag = basis.reduce(target)
    if rest:
        return None
    return frozenset(f for j, f in enumerate(cols) if tag >> j & 1)


def hitting_cycles_generate(c: ColorfulConfiguration) -> bool:
    """Do the boundaries of hitting simplices span the (d-1)-homology of the avoiding complex?

    Checks that boundaries of Av together with the hitting boundaries fill out
    every (d-1)-cycle of Av.
    """
    d = c.dim
    av = avoiding_complex(c)
    shape = c.shape
    ridges = av.faces(d - 1)
    index = {f: i for i, f in enumerate(ridges)}
    cycles = len(ridges) - gf2_rank(_boundary_masks(av, d - 1))
    basis = _XorBasis()
    for m in _boundary_masks(av, d):
        basis.add(m)
    for s in hitting_simplices(c).hitting:
        m = 0
        for r in _chain_boundary(simplex_face(shape, s)):
            m |= 1 << index[r]
        basis.add(m)
    return len(basis) == cycles


# --- collapses ----------------------------------------------------------------------------

class CollapseStep(NamedTuple):
    free_face: Face
    top_face: Face


def _cofaces(faces: Set[Face], tau: Face) -> List[Face]:
    ts = set(tau)
    return [f for f in faces if len(f) > len(tau) and ts <= set(f)]


def _collapse(faces: Set[Face], tau: Face, sigma: Face) -> None:
    """Remove ``tau`` and everything above it, provided ``sigma`` is its only maximal coface."""
    if tau not in faces or sigma not in faces:
        raise ValueError(f"collapse {tau} < {sigma}: face missing")
    above = _cofaces(faces, tau)
    ss = set(sigma)
    if sigma not in above or not all(set(f) <= ss for f in above):
        raise ValueError(f"collapse {tau} < {sigma}: not a free face")
    faces.discard(tau)
    for f in above:
        faces.discard(f)


def verify_extremal_collapse(n: Sequence[int]) -> List[CollapseStep]:
    """Collapse the avoiding complex of the extremal configuration onto a sphere.

    The special vertices are the first point of every class (the vertices of
    the simplex spanned by the ``v_i``).  Stage k removes, from every top face
    with exactly k special vertices, its non-special part as a free face.
    Stage 1 therefore collapses ridges and stage d single vertices; what is
    left is the boundary of the special simplex.  Every step is validated when
    it is executed and the Betti numbers are recomputed after each stage.
    """
    n = list(n)
    d = len(n) - 1
    c = extremal_config(n)
    av = avoiding_complex(c)
    off = class_offsets(n)
    special = set(off)
    faces = set(av.all_faces())
    start = betti_gf2(av)
    steps: List[CollapseStep] = []
    for k in range(1, d + 1):
        tops = sorted(f for f in faces if len(f) == d + 1 and len(special & set(f)) == k)
        for sigma in tops:
            tau = tuple(v for v in sigma if v not in special)
            try:
                _collapse(faces, tau, sigma)
            except ValueError as exc:
                raise ValueError(f"stage {k}: {exc}") from None
            steps.append(CollapseStep(tau, sigma))
        now = betti_gf2(SimplicialComplexGF2.from_faces(av.vertex_count, faces))
        if tuple(now) != tuple(start)[:len(now)] or any(start[len(now):]):
            raise ValueError(f"stage {k}: Betti numbers changed from {start} to {now}")
    target = {f for r in range(d + 1) for f in combinations(sorted(special), r)}
    if faces != target:
        raise ValueError("residual complex is not the boundary of the special simplex")
    return steps


def greedy_collapse(cx: SimplicialComplexGF2, max_face_dim: int) -> SimplicialComplexGF2:
    """Collapse free faces of dimension below ``max_face_dim`` until none is left.

    The lexicographically smallest free face goes first, so the outcome is
    reproducible.
    """
    faces = set(cx.all_faces())
    while True:
        for tau in sorted(f for f in faces if 0 <= len(f) - 1 < max_face_dim):
            above = _cofaces(faces, tau)
            if not above:
                continue
            top = tuple(sorted(set().union(*above)))
            if top in faces:
                _collapse(faces, tau, top)
                break
        else:
            return SimplicialComplexGF2.from_faces(cx.vertex_count, faces)
