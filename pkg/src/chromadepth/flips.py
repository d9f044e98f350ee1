"""Flips between centered colorful configurations.

Two realizations of a flip are supported.  ``translate_flip`` slides the whole
configuration so that the origin passes through the barycenter of a chosen
ridge.  ``homotopy_events`` follows the straight segment between two
configurations and reports, exactly, every time at which the origin enters
the hull of a colorful ridge.  ``flip_walk`` cuts a segment into pieces with
one such event each, perturbing waypoints when events collide.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .colorful import (ColorfulConfiguration, ColorfulSimplex, colorful_simplex, colorful_subsets,
                       hitting_simplices, is_centered, is_relative_general_position,
                       origin_containment)
from .kernel import (QPoly, count_roots, det, interpolate, linprog, lp_min_coeff, poly_gcd, rank,
                     refine, sturm_isolate)
from .kernel.poly import Interval, squarefree_part
from .kernel.rational import barycenter, sub

ONE = Fraction(1)


class FlipMode(enum.Enum):
    CERTIFICATE = "CERTIFICATE"
    STRICT = "STRICT"


@dataclass(frozen=True)
class FlipPath:
    start: ColorfulConfiguration
    end: ColorfulConfiguration
    ridge: ColorfulSimplex
    mode: FlipMode = FlipMode.CERTIFICATE

    def __post_init__(self):
        if self.start.shape != self.end.shape or self.start.dim != self.end.dim:
            raise ValueError("flip endpoints must share their shape")
        ridge = colorful_simplex(self.ridge)
        if len(ridge) != self.start.dim:
            raise ValueError("a flip ridge has exactly d members")
        object.__setattr__(self, "ridge", ridge)


@dataclass(frozen=True)
class FlipCertificate:
    valid: bool
    symmetric_difference: FrozenSet[ColorfulSimplex]
    expected: FrozenSet[ColorfulSimplex]
    endpoints_ok: bool


@dataclass(frozen=True)
class HomotopyEvent:
    """The origin meets the hull of ``ridge`` at the one root of ``poly`` inside ``t_interval``.

    ``note`` is empty for a clean crossing and otherwise says why the event
    is degenerate (touching without crossing, boundary contact, collision
    with another event, ...).
    """
    t_interval: Interval
    ridge: ColorfulSimplex
    note: str = ""
    poly: Optional[QPoly] = field(default=None, compare=False, repr=False)

    @property
    def clean(self) -> bool:
        return not self.note


def at_time(c1: ColorfulConfiguration, c2: ColorfulConfiguration, t) -> ColorfulConfiguration:
    """Point of the straight segment, ``t = -1`` giving ``c1`` and ``t = 1`` giving ``c2``."""
    t = Fraction(t)
    a, b = (1 - t) / 2, (1 + t) / 2
    classes = tuple(tuple(tuple(a * x + b * y for x, y in zip(p, q)) for p, q in zip(k1, k2))
                    for k1, k2 in zip(c1.classes, c2.classes))
    return ColorfulConfiguration(c1.dim, classes)


def ridges(shape: Sequence[int]) -> List[ColorfulSimplex]:
    return list(colorful_subsets(shape, len(shape) - 1))


def expected_toggles(shape: Sequence[int], ridge: ColorfulSimplex) -> FrozenSet[ColorfulSimplex]:
    """Every colorful top simplex containing ``ridge``."""
    used = {c for c, _ in ridge}
    (missing,) = [c for c in range(len(shape)) if c not in used]
    return frozenset(colorful_simplex(ridge + ((missing, j),)) for j in range(shape[missing]))


def _endpoints_ok(c: ColorfulConfiguration) -> bool:
    return is_centered(c) and is_relative_general_position(c)


def verify_flip(p: FlipPath) -> FlipCertificate:
    """Hitting simplices toggle exactly along the top simplices through the ridge."""
    expected = expected_toggles(p.start.shape, p.ridge)
    if not (_endpoints_ok(p.start) and _endpoints_ok(p.end)):
        return FlipCertificate(False, frozenset(), expected, False)
    before = set(hitting_simplices(p.start).hitting)
    after = set(hitting_simplices(p.end).hitting)
    diff = frozenset(before ^ after)
    return FlipCertificate(diff == expected, diff, expected, True)


def translate_flip(c: ColorfulConfiguration, rho) -> FlipPath:
    """Translate by twice the barycenter of the ridge so the origin crosses it.

    The path is ``f_t = f - (1 + t) b`` with ``b`` the barycenter of the
    ridge; ``f_0`` places the origin at that barycenter.  Whether a class
    stays centered along a translation only depends on the two ends, since
    the set of admissible shifts along a line is convex.
    """
    if not _endpoints_ok(c):
        raise ValueError("start configuration must be centered and in relative general position")
    rho = colorful_simplex(rho)
    if len(rho) != c.dim:
        raise ValueError("a flip ridge has exactly d members")
    pts = c.points(rho)
    if rank([list(p) + [1] for p in pts]) != len(pts):
        raise ValueError("ridge points are affinely dependent")
    b = barycenter(pts)
    end = c.map_points(lambda p: tuple(x - 2 * y for x, y in zip(p, b)))
    middle = [sub(p, b) for p in pts]
    assert origin_containment(middle).in_relint
    if not is_centered(end):
        raise ValueError("flip breaks centeredness")
    if not is_relative_general_position(end):
        raise ValueError("degenerate endpoint")
    return FlipPath(c, end, rho, FlipMode.CERTIFICATE)


# --- exact event detection ----------------------------------------------------------------

def _strip_endpoint_roots(p: QPoly) -> QPoly:
    for r in (ONE, -ONE):
        while not p.is_zero() and p.degree > 0 and p(r) == 0:
            p = p // QPoly((-r, 1))
    return p


def _has_root_in(p: QPoly, lo, hi) -> bool:
    """Does ``p`` vanish somewhere in the open interval ``(lo, hi)``?"""
    if p.is_zero():
        return True
    for r in (lo, hi):
        while p.degree > 0 and p(r) == 0:
            p = p // QPoly((-r, 1))
    if p.degree <= 0:
        return False
    return count_roots(squarefree_part(p), lo, hi) > 0


def _sign_at_root(a: QPoly, q: QPoly, interval: Interval) -> int:
    """Sign of ``a`` at the unique root of ``q`` in ``interval`` (``q`` squarefree)."""
    if a.is_zero():
        return 0
    lo, hi = interval
    g = poly_gcd(q, a)
    if g.degree > 0 and _has_root_in(g, lo, hi):
        return 0
    while True:
        va, vb = a(lo), a(hi)
        if va * vb > 0 and not _has_root_in(a, lo, hi):
            return 1 if va > 0 else -1
        lo, hi = refine(q, (lo, hi))


def _samples(dim: int) -> List[Fraction]:
    return [Fraction(k) for k in range(dim + 1)]


def _ridge_polys(c1: ColorfulConfiguration, c2: ColorfulConfiguration, ridge: ColorfulSimplex):
    """Determinant of the ridge points along the segment, and their adjugate entries.

    The origin lies in the affine hull of the d ridge points exactly when the
    d x d matrix with those points as columns is singular; at such a time the
    columns of the adjugate span the kernel, i.e. give the barycentric weights.
    """
    d = c1.dim
    ts = _samples(d)
    mats = []
    for t in ts:
        a, b = (1 - t) / 2, (1 + t) / 2
        cols = [tuple(a * x + b * y for x, y in zip(c1.point(m), c2.point(m))) for m in ridge]
        mats.append([[col[r] for col in cols] for r in range(d)])
    dpoly = interpolate(ts, [det(m) for m in mats])

    def adjugate():
        # entry (j, k) = (-1)^(j+k) * minor with row k and column j removed
        out = [[None] * d for _ in range(d)]
        for j, k in product(range(d), repeat=2):
            vals = []
            for m in mats:
                minor = [row[:j] + row[j + 1:] for r, row in enumerate(m) if r != k]
                vals.append(det(minor) * (-1) ** (j + k))
            out[j][k] = interpolate(ts, vals)
        return out

    return dpoly, adjugate


def _classify(dpoly: QPoly, q: QPoly, interval: Interval, adj) -> Optional[str]:
    """None when the origin misses the ridge hull at this root, else the event note."""
    d = len(adj)
    column = None
    for k in range(d):
        signs = [_sign_at_root(adj[j][k], q, interval) for j in range(d)]
        if any(signs):
            column = k
            break
    if column is None:
        return "ridge rank drops"
    total = QPoly()
    for j in range(d):
        total = total + adj[j][column]
    s = _sign_at_root(total, q, interval)
    nonzero = [x for x in signs if x]
    if s == 0:
        # the only dependence is affine, so no convex combination reaches 0
        return None
    if len(set(nonzero)) > 1:
        return None
    if len(nonzero) < d:
        return "origin on the ridge boundary"
    lo, hi = interval
    if dpoly(lo) * dpoly(hi) > 0:
        return "touching without crossing"
    return ""


def _separate(e1: HomotopyEvent, e2: HomotopyEvent) -> Tuple[HomotopyEvent, HomotopyEvent, bool]:
    """Refine two events until their intervals are disjoint; report a shared root instead."""
    (a1, b1), (a2, b2) = e1.t_interval, e2.t_interval
    g = poly_gcd(e1.poly, e2.poly)
    while not (b1 <= a2 or b2 <= a1):
        lo, hi = max(a1, a2), min(b1, b2)
        if g.degree > 0 and _has_root_in(g, lo, hi):
            return e1, e2, False
        a1, b1 = refine(e1.poly, (a1, b1))
        a2, b2 = refine(e2.poly, (a2, b2))
    return (HomotopyEvent((a1, b1), e1.ridge, e1.note, e1.poly),
            HomotopyEvent((a2, b2), e2.ridge, e2.note, e2.poly), True)


def homotopy_events(c1: ColorfulConfiguration, c2: ColorfulConfiguration) -> List[HomotopyEvent]:
    """Times in (-1, 1) at which the origin lies in the hull of a colorful ridge.

    Along ``f_t = ((1 - t) c1 + (1 + t) c2) / 2`` every ridge contributes the
    roots of its determinant polynomial; each root is kept if the barycentric
    weights there are one-signed.  Decisions at the (algebraic) roots are made
    with gcds and Sturm counts on isolating intervals.  Events that cannot be
    told apart from another event carry the note ``"simultaneous"``.
    """
    if c1.shape != c2.shape or c1.dim != c2.dim:
        raise ValueError("configurations must share their shape")
    if not (is_relative_general_position(c1) and is_relative_general_position(c2)):
        raise ValueError("endpoints must be in relative general position")
    events: List[HomotopyEvent] = []
    for ridge in ridges(c1.shape):
        dpoly, adjugate = _ridge_polys(c1, c2, ridge)
        if dpoly.is_zero():
            raise ValueError("degenerate homotopy")
        core = _strip_endpoint_roots(dpoly)
        if core.degree <= 0:
            continue
        q = squarefree_part(core)
        adj = None
        for iv in sturm_isolate(q, -ONE, ONE):
            adj = adj or adjugate()
            note = _classify(dpoly, q, iv, adj)
            if note is not None:
                events.append(HomotopyEvent(iv, ridge, note, q))
    events.sort(key=lambda e: e.t_interval)
    for i in range(len(events)):
        for j in range(i + 1, len(events)):
            e1, e2, ok = _separate(events[i], events[j])
            if not ok:
                e1 = HomotopyEvent(e1.t_interval, e1.ridge, "simultaneous", e1.poly)
                e2 = HomotopyEvent(e2.t_interval, e2.ridge, "simultaneous", e2.poly)
            events[i], events[j] = e1, e2
    events.sort(key=lambda e: e.t_interval)
    return events


def segment_stays_centered(c1: ColorfulConfiguration, c2: ColorfulConfiguration) -> bool:
    """Exact sufficient test that every class stays centered along the segment.

    Looks, per class, for strictly positive weights ``w0`` and ``w1`` with
    ``sum w0 = sum w1 = 1``, ``sum w0 c1 = 0``, ``sum w1 c2 = 0`` and
    ``sum w0 c2 + sum w1 c1 = 0``.  Then the interpolated weights are positive
    and balance the origin at every time on the segment.
    """
    for k1, k2 in zip(c1.classes, c2.classes):
        n = len(k1)
        dim = c1.dim
        # variables: w0 (n), w1 (n), eps; maximize eps
        a_eq, b_eq = [], []
        for r in range(dim):
            a_eq.append([p[r] for p in k1] + [0] * n + [0])
            a_eq.append([0] * n + [q[r] for q in k2] + [0])
            a_eq.append([q[r] for q in k2] + [p[r] for p in k1] + [0])
            b_eq += [0, 0, 0]
        a_eq.append([1] * n + [0] * n + [0])
        a_eq.append([0] * n + [1] * n + [0])
        b_eq += [1, 1]
        a_ub = []
        for j in range(2 * n):
            row = [0] * (2 * n + 1)
            row[j] = -1
            row[-1] = 1
            a_ub.append(row)
        res = linprog([0] * (2 * n) + [1], a_ub=a_ub, b_ub=[0] * (2 * n), a_eq=a_eq, b_eq=b_eq,
                      nonneg=[True] * (2 * n + 1))
        if not res.optimal or res.witness[-1] <= 0:
            return False
    return True


# --- walks --------------------------------------------------------------------------------

@dataclass(frozen=True)
class FlipWalk:
    success: bool
    paths: Tuple[FlipPath, ...]
    retries_used: int
    diagnostics: Tuple[str, ...]


def balance_classes(c: ColorfulConfiguration) -> ColorfulConfiguration:
    """Rescale points by positive factors so that every class sums to zero.

    Positive rescaling of single points leaves every containment predicate
    unchanged.  Once both ends of a segment are balanced, each class keeps
    the origin as a positive combination all along the segment.
    """
    classes = []
    for cls in c.classes:
        lam = lp_min_coeff(cls).witness
        top = max(lam)
        classes.append(tuple(tuple(x * l / top for x in p) for p, l in zip(cls, lam)))
    return ColorfulConfiguration(c.dim, tuple(classes))


def _perturbed_waypoint(rng: random.Random, a: ColorfulConfiguration, b: ColorfulConfiguration,
                        tries: int = 50) -> Optional[ColorfulConfiguration]:
    """Seeded random configuration near the midpoint, with zero-sum noise in every class."""
    mid = at_time(a, b, 0)
    scale = Fraction(1, 8)
    for _ in range(tries):
        classes = []
        for cls in mid.classes:
            noise = [[scale * rng.randint(-2, 2) for _ in range(a.dim)] for _ in cls]
            mean = [sum(col) / len(cls) for col in zip(*noise)]
            classes.append(tuple(tuple(x + y - m for x, y, m in zip(p, e, mean))
                                 for p, e in zip(cls, noise)))
        w = ColorfulConfiguration(a.dim, tuple(classes))
        if w != mid and _endpoints_ok(w):
            return w
    return None


def flip_walk(c1: ColorfulConfiguration, c2: ColorfulConfiguration, max_retries: int = 20,
              seed: int = 0) -> FlipWalk:
    """Connect two configurations by straight segments that each carry exactly one flip.

    The plain segment from ``c1`` to ``c2`` is tried first.  If it does not
    split cleanly, both ends are balanced (see ``balance_classes``) and the
    walk runs between the balanced ends; the rescaling itself crosses no
    event.  Segments with several events are cut at rational times between
    them.  Degenerate or simultaneous events, uncertified centeredness and
    probes out of general position make the walk go through a seeded random
    waypoint instead; every such detour spends one retry.  Each returned path
    is a STRICT flip whose certificate has been checked.
    """
    if c1.shape != c2.shape or c1.dim != c2.dim:
        raise ValueError("configurations must share their shape")
    if not (_endpoints_ok(c1) and _endpoints_ok(c2)):
        raise ValueError("endpoints must be centered and in relative general position")
    rng = random.Random(seed)
    paths: List[FlipPath] = []
    notes: List[str] = []
    budget = [0]

    def detour(a, b, reason: str) -> bool:
        notes.append(reason)
        if budget[0] <= 0:
            notes.append("retries exhausted")
            return False
        budget[0] -= 1
        w = _perturbed_waypoint(rng, a, b)
        if w is None:
            notes.append("no admissible waypoint found")
            return False
        return walk(a, w) and walk(w, b)

    def walk(a, b) -> bool:
        if a == b:
            return True
        try:
            events = homotopy_events(a, b)
        except ValueError as exc:
            return detour(a, b, str(exc))
        bad = [e for e in events if not e.clean]
        if bad:
            return detour(a, b, f"{bad[0].note} event at ridge {bad[0].ridge}")
        if len(events) > 1:
            probes = [(e.t_interval[1] + f.t_interval[0]) / 2 for e, f in zip(events, events[1:])]
            stops = [a] + [at_time(a, b, t) for t in probes] + [b]
            if not all(_endpoints_ok(s) for s in stops[1:-1]):
                return detour(a, b, "probe not centered or not in relative general position")
            return all(walk(x, y) for x, y in zip(stops, stops[1:]))
        if not segment_stays_centered(a, b):
            return detour(a, b, "centeredness along the segment not certified")
        if not events:
            return True
        path = FlipPath(a, b, events[0].ridge, FlipMode.STRICT)
        if not verify_flip(path).valid:
            return detour(a, b, f"certificate rejected at ridge {path.ridge}")
        paths.append(path)
        return True

    if walk(c1, c2):
        return FlipWalk(True, tuple(paths), 0, tuple(notes))
    paths.clear()
    notes.append("retrying between balanced endpoints")
    budget[0] = max_retries
    ok = walk(balance_classes(c1), balance_classes(c2))
    return FlipWalk(ok, tuple(paths), max_retries - budget[0], tuple(notes))
