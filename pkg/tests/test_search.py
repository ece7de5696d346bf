import math

import pytest

from lenslift.braid import braid, delta, power
from lenslift.diagram import LensSpace
from lenslift.errors import ResourceLimitError
from lenslift.invariants import braid_fingerprint, identify
from lenslift.lift import lift_braid
from lenslift.search import (
    Separator,
    brute_force_solutions,
    build_cable_pair,
    collision_search,
    enumerate_braids,
    separator,
    solve_lift_equation,
)


def families(h, p_max=30):
    return {s.k: s for s in solve_lift_equation(h, p_max) if s.is_family}


def test_solver_examples():
    f = families(1)
    assert set(f) == {0}
    assert list(f[0].family.instances(9)) == [(3, 2), (5, 3), (7, 4), (9, 5)]
    f = families(2)
    assert set(f) == {1, 0}
    assert f[1].family.q(17) == 1
    assert f[0].family.q(6) == 4
    assert 6 in f[0].non_coprime and not f[1].non_coprime


@pytest.mark.parametrize("h", range(-9, 10))
def test_explicit_solutions_match_brute_force(h):
    sols = [s for s in solve_lift_equation(h, 25) if not s.is_family]
    got = {(s.p, s.q, s.k) for s in sols}
    want = {(p, q, k) for p in range(2, 26) for q in range(p) for k in range(-30, 31) if k * p + 2 * q - p == h}
    assert got == want == set(brute_force_solutions(h, 25))
    for s in sols:
        assert s.coprime_valid == (math.gcd(s.p, s.q) == 1)


@pytest.mark.parametrize("h", range(-9, 10))
def test_families_cover_all_but_finitely_many(h):
    fam = {(p, q, s.k) for s in families(h, 40).values() for p, q in s.family.instances(40)}
    explicit = set(brute_force_solutions(h, 40))
    assert fam <= explicit
    # beyond p = |h| every solution belongs to a family
    assert {x for x in explicit if x[0] > abs(h)} <= fam


def test_solver_rejects_tiny_pmax():
    with pytest.raises(ValueError):
        solve_lift_equation(1, 1)


def test_round_trip_through_catalog():
    # Δ_t^k closed in a solution lens space lifts to Δ_t^h
    for t, h in ((2, 2), (2, -2), (3, 1), (2, 4), (4, -1)):
        target = identify(power(delta(t), h))
        for s in solve_lift_equation(h, 9):
            if s.is_family or not s.coprime_valid:
                continue
            lift = lift_braid(power(delta(t), s.k), LensSpace(s.p, s.q))[1]
            assert identify(lift) == target, (t, h, s)


def test_enumeration_is_freely_reduced_and_ordered():
    words = list(enumerate_braids(3, 3))
    assert words[0] == braid(1, [])
    assert all(w.letters[i] != -w.letters[i + 1] for w in words for i in range(len(w.letters) - 1))
    assert len(set(words)) == len(words)
    assert sum(1 for w in words if w.strands == 2) == 1 + 2 + 2 + 2


def test_small_search_finds_the_examples():
    reports = collision_search(2, 2, 5)
    by = {(r.lens.p, r.lens.q, str(r.first), str(r.second)): r for r in reports}
    hopf = by[(4, 1, "t=2", "t=2 1")]
    assert hopf.name == "L2a1"
    assert {hopf.first_separator.components, hopf.second_separator.components} == {1, 2}
    knots = by[(5, 3, "t=1", "t=2")]
    assert knots.name == "0_1" and not knots.indistinguishable
    assert knots.first_separator.classes == (1,) and knots.second_separator.classes == (2,)
    flagged = by[(3, 2, "t=1", "t=2")]
    assert flagged.indistinguishable
    for r in reports:
        assert r.first_separator != r.second_separator or r.indistinguishable
        for w in (r.first, r.second):
            assert braid_fingerprint(lift_braid(w, r.lens)[1]) == r.fingerprint


def test_search_is_deterministic_across_threads():
    a = [r.to_json() for r in collision_search(2, 3, 5, threads=1)]
    b = [r.to_json() for r in collision_search(2, 3, 5, threads=3)]
    assert a == b


def test_search_limits():
    with pytest.raises(ResourceLimitError):
        collision_search(5, 2, 5)
    with pytest.raises(ResourceLimitError):
        collision_search(3, 9, 5)
    with pytest.raises(ResourceLimitError):
        collision_search(3, 3, 17)
    with pytest.raises(ResourceLimitError):
        collision_search(4, 8, 16)


def test_separator():
    assert separator(braid(2, [1]), LensSpace(4, 1)) == Separator(2, (1, 1))
    assert separator(braid(2, []), LensSpace(4, 1)).components == 1


def test_cable_pair_i1_is_ce():
    for j in range(3):
        a, b, lens = build_cable_pair(1, j)
        assert (a, b) == (braid(2, []), braid(2, [1]))
        assert lens == LensSpace(4, 1)


def test_cable_counts():
    a, b, lens = build_cable_pair(3, 0)
    assert separator(a, lens).components == 3 and separator(b, lens).components == 4
    a, b, lens = build_cable_pair(2, 2)
    sa, sb = separator(a, lens), separator(b, lens)
    assert sa == sb == Separator(2, (2, 2))
    assert braid_fingerprint(lift_braid(a, lens)[1]) == braid_fingerprint(lift_braid(b, lens)[1])
    with pytest.raises(ValueError):
        build_cable_pair(0, 1)
