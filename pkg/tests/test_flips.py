from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from chromadepth.colorful import ColorfulConfiguration, hitting_simplices, random_centered_rgp
from chromadepth.complexes import avoiding_complex, betti_gf2
from chromadepth.flips import (FlipMode, FlipPath, at_time, balance_classes, expected_toggles,
                               flip_walk, homotopy_events, ridges, segment_stays_centered,
                               translate_flip, verify_flip)

import oracles


def cfg(dim, *classes):
    return ColorfulConfiguration(dim, tuple(tuple(tuple(p) if isinstance(p, tuple) else (p,) for p in c)
                                            for c in classes))


D1 = cfg(1, (-1, 1), (-2, 3))


def certified_translate_flips(shape, seeds):
    out = []
    for seed in seeds:
        c = random_centered_rgp(shape, seed)
        for r in ridges(shape):
            try:
                p = translate_flip(c, r)
            except ValueError:
                continue
            if verify_flip(p).valid:
                out.append(p)
    return out


def oracle_hitting(c):
    return {tuple(enumerate(idx)) for idx in product(*(range(n) for n in c.shape))
            if oracles.hitting([c.classes[k][i] for k, i in enumerate(idx)])}


def test_translate_flip_rejections():
    with pytest.raises(ValueError, match="flip breaks centeredness"):
        translate_flip(D1, ((0, 0),))
    with pytest.raises(ValueError, match="flip breaks centeredness"):
        translate_flip(D1, ((0, 1),))
    with pytest.raises(ValueError, match="exactly d members"):
        translate_flip(D1, ((0, 0), (1, 0)))
    with pytest.raises(ValueError, match="centered"):
        translate_flip(cfg(1, (1, 2), (-1, 1)), ((0, 0),))


def test_translate_flip_found_and_certified():
    flips = certified_translate_flips((3, 3, 3), range(4))
    assert flips
    for p in flips:
        cert = verify_flip(p)
        assert cert.valid and cert.endpoints_ok
        assert cert.symmetric_difference == expected_toggles((3, 3, 3), p.ridge)
        # independent check of the toggled set
        before, after = oracle_hitting(p.start), oracle_hitting(p.end)
        assert before ^ after == set(cert.expected)


def test_verify_flip_identity_path_invalid():
    c = random_centered_rgp((3, 3, 3), 2)
    cert = verify_flip(FlipPath(c, c, ((1, 1), (2, 2))))
    assert not cert.valid and cert.endpoints_ok
    assert cert.symmetric_difference == frozenset() and len(cert.expected) == 3


def test_verify_flip_unrelated_configurations():
    a, b = random_centered_rgp((3, 3, 3), 5), random_centered_rgp((3, 3, 3), 6)
    cert = verify_flip(FlipPath(a, b, ((0, 0), (1, 0))))
    assert not cert.valid
    assert cert.symmetric_difference == frozenset(set(hitting_simplices(a).hitting)
                                                  ^ set(hitting_simplices(b).hitting))


def test_verify_flip_bad_endpoint():
    bad = cfg(1, (1, 2), (-1, 1))
    cert = verify_flip(FlipPath(bad, D1, ((0, 0),)))
    assert not cert.valid and not cert.endpoints_ok


def test_flip_path_validation():
    with pytest.raises(ValueError, match="share their shape"):
        FlipPath(D1, random_centered_rgp((3, 3), 0), ((0, 0),))
    with pytest.raises(ValueError, match="exactly d members"):
        FlipPath(D1, D1, ((0, 0), (1, 0)))


def test_homotopy_events_examples():
    assert homotopy_events(D1, D1) == []
    c2 = cfg(1, (-1, 1), (-3, 2))
    assert homotopy_events(D1, c2) == []
    p = certified_translate_flips((3, 3), range(4))[0]
    events = homotopy_events(p.start, p.end)
    assert [e.ridge for e in events] == [p.ridge] and events[0].clean
    lo, hi = events[0].t_interval
    # the event sits at t = 0 for a translation through the barycenter
    assert lo <= 0 <= hi


def test_homotopy_events_detects_d1_crossing():
    # the point 1 of class 0 slides to -1/2: it passes 0 at t = 1/3
    c1 = cfg(1, (-1, 1), (-2, 3))
    c2 = cfg(1, (-1, F(-1, 2)), (-2, 3))
    with pytest.raises(ValueError):
        homotopy_events(c1, cfg(1, (-1, 0), (-2, 3)))
    events = homotopy_events(c1, c2)
    assert [e.ridge for e in events] == [((0, 1),)]
    lo, hi = events[0].t_interval
    assert lo <= F(1, 3) <= hi


def test_at_time_endpoints():
    a, b = random_centered_rgp((3, 3), 1), random_centered_rgp((3, 3), 2)
    assert at_time(a, b, -1) == a and at_time(a, b, 1) == b


def test_flip_walk_examples():
    c = random_centered_rgp((3, 3), 1)
    w = flip_walk(c, c)
    assert w.success and w.paths == ()
    p = certified_translate_flips((3, 3), [1])[0]
    w = flip_walk(p.start, p.end, seed=0)
    assert w.success and len(w.paths) == 1 and w.paths[0].ridge == p.ridge
    assert w.paths[0].mode is FlipMode.STRICT


def check_walk(w, c1, c2):
    assert w.success
    starts = {c1, balance_classes(c1)}
    ends = {c2, balance_classes(c2)}
    if w.paths:
        assert w.paths[0].start in starts and w.paths[-1].end in ends
        for x, y in zip(w.paths, w.paths[1:]):
            assert x.end == y.start
    for p in w.paths:
        assert verify_flip(p).valid
        assert [e.ridge for e in homotopy_events(p.start, p.end)] == [p.ridge]
        for end in (p.start, p.end):
            assert betti_gf2(avoiding_complex(end)).at(end.dim - 1) == 1


def test_flip_walk_random_pair():
    c1, c2 = random_centered_rgp((3, 3, 3), 1), random_centered_rgp((3, 3, 3), 2)
    w = flip_walk(c1, c2, seed=42)
    check_walk(w, c1, c2)
    assert w == flip_walk(c1, c2, seed=42)


def test_flip_walk_failure_is_a_result():
    # all classes of size two: events come in pairs, so the walk runs out of retries
    c1, c2 = random_centered_rgp((2, 2, 2), 1), random_centered_rgp((2, 2, 2), 2)
    w = flip_walk(c1, c2, max_retries=3, seed=42)
    assert not w.success and w.diagnostics


def test_balance_classes_keeps_predicates():
    c = random_centered_rgp((3, 4, 3), 3)
    b = balance_classes(c)
    assert all(sum(col) == 0 for cls in b.classes for col in zip(*cls))
    assert set(hitting_simplices(b).hitting) == set(hitting_simplices(c).hitting)
    assert segment_stays_centered(b, b)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(3, 3), (4, 4), (3, 3, 3)]), st.integers(0, 10 ** 6))
def test_certified_flip_counts(shape, seed):
    for p in certified_translate_flips(shape, [seed]):
        a, b = hitting_simplices(p.start).csd, hitting_simplices(p.end).csd
        k = len(expected_toggles(shape, p.ridge))
        assert abs(a - b) <= k and (a + b) % 2 == k % 2
