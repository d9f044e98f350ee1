"""Colorful configurations, hitting simplices and colorful simplicial depth.

A colorful configuration is a list of point classes in rational d-space.  A
colorful simplex picks at most one point per class and is written as a sorted
tuple of ``(class, index)`` pairs.  All predicates are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import prod
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from .kernel import det_int, lp_min_coeff, rank, rank_int
from .kernel.rational import Vec, integral_direction, vec

Member = Tuple[int, int]
ColorfulSimplex = Tuple[Member, ...]


def colorful_simplex(members: Iterable[Sequence[int]]) -> ColorfulSimplex:
    """Normalize ``(class, index)`` pairs into a colorful simplex, one pair per class at most."""
    out = tuple(sorted((int(c), int(i)) for c, i in members))
    classes = [c for c, _ in out]
    if len(set(classes)) != len(classes):
        raise ValueError("a colorful simplex takes at most one point per class")
    return out


@dataclass(frozen=True)
class ColorfulConfiguration:
    dim: int
    classes: Tuple[Tuple[Vec, ...], ...]

    def __post_init__(self):
        classes = tuple(tuple(vec(p) for p in cls) for cls in self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes:
            raise ValueError("a colorful configuration needs at least one class")
        for cls in classes:
            if not cls:
                raise ValueError("empty color class")
            for p in cls:
                if len(p) != self.dim:
                    raise ValueError(f"point {p} does not live in dimension {self.dim}")

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(cls) for cls in self.classes)

    def point(self, member: Member) -> Vec:
        c, i = member
        return self.classes[c][i]

    def points(self, simplex: ColorfulSimplex) -> List[Vec]:
        return [self.classes[c][i] for c, i in simplex]

    @cached_property
    def directions(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        # integer positive multiples of the points; containment of 0 only sees directions
        return tuple(tuple(integral_direction(p) for p in cls) for cls in self.classes)

    def map_points(self, f) -> "ColorfulConfiguration":
        return ColorfulConfiguration(self.dim, tuple(tuple(f(p) for p in cls) for cls in self.classes))


class Containment(NamedTuple):
    in_conv: bool
    in_relint: bool
    in_interior: bool


@dataclass(frozen=True)
class DepthReport:
    csd: int
    hitting: Tuple[ColorfulSimplex, ...]
    bound: int
    satisfies_bound: bool


def origin_containment(points: Sequence[Sequence]) -> Containment:
    """Where the origin sits relative to the convex hull of ``points``."""
    pts = [vec(p) for p in points]
    res = lp_min_coeff(pts)
    if not res.optimal:
        return Containment(False, False, False)
    relint = res.optimum > 0
    m = len(pts[0])
    full = rank([list(p) + [1] for p in pts]) == m + 1
    return Containment(True, relint, relint and full)


@lru_cache(maxsize=None)
def _sign_directions(dim: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(u for u in product((-1, 0, 1), repeat=dim) if any(u))


def _separated(pts: Sequence[Sequence[int]], directions) -> bool:
    # a direction weakly positive on all points, strictly on one, keeps 0 out of the relative interior
    for u in directions:
        vals = [sum(a * b for a, b in zip(u, p)) for p in pts]
        if min(vals) >= 0 and max(vals) > 0:
            return True
    return False


def _centered_class(pts: Sequence[Sequence[int]], directions) -> bool:
    """Exact relint test for integer points, avoiding the LP in the common cases."""
    if _separated(pts, directions):
        return False
    dim = len(pts[0])
    if len(pts) == dim + 1:
        minors = _signed_minors(pts)
        if any(minors):
            # corank one: the dependence is unique up to scale
            return all(x > 0 for x in minors) or all(x < 0 for x in minors)
    return origin_containment(pts).in_relint


def is_centered(c: ColorfulConfiguration) -> bool:
    directions = _sign_directions(c.dim)
    return all(_centered_class(cls, directions) for cls in c.directions)


def core_contains_origin(c: ColorfulConfiguration) -> bool:
    """Origin interior to the intersection of the class hulls, which is then full-dimensional."""
    return all(origin_containment(cls).in_interior for cls in c.classes)


# --- fast exact predicates on integer directions ------------------------------------------

def circuit_vector(points: Sequence[Sequence[int]]):
    """The dependence of integer ``points`` when they have corank one, else None.

    Picks k-1 independent coordinate rows and reads the kernel off their
    signed maximal minors.
    """
    k = len(points)
    rows = [list(r) for r in zip(*points)]
    if rank_int(rows) != k - 1:
        return None
    chosen: List[List[int]] = []
    for row in rows:
        if len(chosen) == k - 1:
            break
        if rank_int(chosen + [row]) > len(chosen):
            chosen.append(row)
    out = []
    for j in range(k):
        minor = det_int([r[:j] + r[j + 1:] for r in chosen])
        out.append(minor if j % 2 == 0 else -minor)
    return out


def is_positive_circuit(points: Sequence[Sequence[int]]) -> bool:
    """True iff 0 lies in the relative interior of conv(points) but in no smaller sub-hull.

    Equivalently the points are minimally linearly dependent and the dependence
    has all coefficients of one strict sign.
    """
    if len(points) == 1:
        return not any(points[0])
    v = circuit_vector(points)
    if v is None or not all(v):
        return False
    return all(x > 0 for x in v) or all(x < 0 for x in v)


def _signed_minors(points: Sequence[Sequence[int]]) -> List[int]:
    # kernel of the d x (d+1) matrix with the points as columns, by Cramer's rule
    d = len(points) - 1
    out = []
    for j in range(d + 1):
        rest = [points[i] for i in range(d + 1) if i != j]
        m = [[p[r] for p in rest] for r in range(d)]
        out.append(det_int(m) if j % 2 == 0 else -det_int(m))
    return out


def hits(points: Sequence[Sequence[int]], strict: bool = False) -> bool:
    """d+1 integer points in d-space: affinely independent with 0 in the hull.

    With ``strict`` the origin must also avoid the boundary of the simplex.
    Positive rescaling of single points changes neither answer: once 0 is in
    the hull, affine and linear spans coincide.
    """
    minors = _signed_minors(points)
    if not any(minors):
        return False
    if strict and not all(minors):
        return False
    return all(x >= 0 for x in minors) or all(x <= 0 for x in minors)


def colorful_subsets(shape: Sequence[int], size: int) -> Iterator[ColorfulSimplex]:
    """All colorful simplices with ``size`` members, in lexicographic order."""
    for cls in combinations(range(len(shape)), size):
        for idx in product(*(range(shape[c]) for c in cls)):
            yield tuple(zip(cls, idx))


def is_relative_general_position(c: ColorfulConfiguration) -> bool:
    """No colorful simplex with at most d points has the origin in its hull.

    Any family whose hull contains 0 contains a positive circuit, so it is
    enough to look for colorful positive circuits of size at most d.
    """
    dirs = c.directions
    for size in range(1, min(c.dim, len(c.classes)) + 1):
        for s in colorful_subsets(c.shape, size):
            if is_positive_circuit([dirs[a][b] for a, b in s]):
                return False
    return True


def _require_full(c: ColorfulConfiguration) -> None:
    if len(c.classes) != c.dim + 1:
        raise ValueError("csd requires d+1 classes")


def depth_bound(shape: Sequence[int]) -> int:
    return 1 + prod(n - 1 for n in shape)


def hitting_simplices(c: ColorfulConfiguration) -> DepthReport:
    _require_full(c)
    dirs = c.directions
    hit = []
    for idx in product(*(range(n) for n in c.shape)):
        if hits([dirs[k][i] for k, i in enumerate(idx)]):
            hit.append(tuple(enumerate(idx)))
    bound = depth_bound(c.shape)
    return DepthReport(len(hit), tuple(hit), bound, len(hit) <= bound)


def minimal_hitting_set(c: ColorfulConfiguration) -> List[ColorfulSimplex]:
    """Inclusion-minimal colorful simplices whose hull contains the origin."""
    _require_full(c)
    dirs = c.directions
    out = []
    for size in range(1, c.dim + 2):
        for s in colorful_subsets(c.shape, size):
            if is_positive_circuit([dirs[a][b] for a, b in s]):
                out.append(s)
    return out


def extremal_config(n: Sequence[int]) -> ColorfulConfiguration:
    """Configuration attaining the depth upper bound for class sizes ``n``.

    Class i is ``v_i, -v_i, -2 v_i, ...`` where ``v_1..v_d`` is the standard
    basis and ``v_0`` is minus their sum.
    """
    n = list(n)
    d = len(n) - 1
    if d < 1:
        raise ValueError("need at least two classes")
    if any(k < 2 for k in n):
        raise ValueError("every class needs at least two points")
    base = [tuple(-1 for _ in range(d))]
    base += [tuple(int(i == j) for j in range(d)) for i in range(d)]
    classes = []
    for v, k in zip(base, n):
        cls = [v] + [tuple(-m * x for x in v) for m in range(1, k)]
        classes.append(cls)
    return ColorfulConfiguration(d, tuple(tuple(vec(p) for p in cls) for cls in classes))


# --- random instances ---------------------------------------------------------------------

def _random_point(rng: random.Random, dim: int, bound: int) -> Tuple[int, ...]:
    while True:
        p = tuple(rng.randint(-bound, bound) for _ in range(dim))
        if any(p):
            return p


def _random_centered_class(rng: random.Random, size: int, dim: int, bound: int):
    directions = _sign_directions(dim)
    if size > dim:
        for _ in range(20):
            pts = [_random_point(rng, dim, bound) for _ in range(size)]
            if _centered_class(pts, directions):
                return pts
    # build an explicit strictly positive dependence
    while True:
        weights = [rng.randint(1, 3) for _ in range(size - 1)]
        small = max(1, bound // sum(weights))
        qs = [_random_point(rng, dim, small) for _ in range(size - 1)]
        last = tuple(-sum(w * q[k] for w, q in zip(weights, qs)) for k in range(dim))
        if not any(last) or max(abs(x) for x in last) > bound:
            continue
        pts = qs + [last]
        rng.shuffle(pts)
        # independent qs make the positive dependence the only one
        if rank_int([list(q) for q in qs]) == len(qs) or _centered_class(pts, directions):
            return pts


def random_centered_rgp(n: Sequence[int], seed: int, coord_bound: int = 10) -> ColorfulConfiguration:
    """Seeded random centered configuration in relative general position.

    Coordinates are integers in ``[-coord_bound, coord_bound]``.  Classes that
    miss the origin are redrawn point by point (then built from an explicit
    positive dependence); if the assembled configuration violates general
    position, one class is redrawn at random.
    """
    if coord_bound < 2:
        raise ValueError("insufficient coordinate range")
    n = list(n)
    if len(n) < 2:
        raise ValueError("need at least two classes")
    if any(k < 2 for k in n):
        raise ValueError("every class needs at least two points")
    d = len(n) - 1
    rng = random.Random(seed)
    classes = [_random_centered_class(rng, k, d, coord_bound) for k in n]
    while True:
        c = ColorfulConfiguration(d, tuple(tuple(vec(p) for p in cls) for cls in classes))
        if is_relative_general_position(c):
            return c
        i = rng.randrange(len(n))
        classes[i] = _random_centered_class(rng, n[i], d, coord_bound)
