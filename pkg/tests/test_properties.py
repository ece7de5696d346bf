import random

from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import garside_braids, lens_cases
from lenslift.braid import (
    braid,
    braid_equal,
    concat,
    delta,
    flip,
    inverse,
    left_normal_form,
    power,
    reverse,
)
from lenslift.diagram import from_braid, is_standard, r6_swap, standardize
from lenslift.invariants import (
    alexander,
    bracket_state_sum,
    bracket_temperley_lieb,
    braid_fingerprint,
    closure,
    fingerprint,
)
from lenslift.lift import lift_diagram, lift_diagram_reduced


@st.composite
def braids(draw, t_min=1, t_max=6, max_len=10):
    t = draw(st.integers(t_min, t_max))
    if t == 1:
        return braid(1, [])
    letters = draw(st.lists(st.integers(1, t - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return braid(t, letters)


def conj(a, b):
    return concat(concat(inverse(b), a), b)


@settings(max_examples=60, deadline=None)
@given(braids())
def test_delta_squared_is_central(w):
    d2 = power(delta(w.strands), 2)
    assert braid_equal(concat(d2, w), concat(w, d2))


@settings(max_examples=60, deadline=None)
@given(braids())
def test_delta_conjugation_is_flip(w):
    assert braid_equal(conj(w, delta(w.strands)), flip(w))


def test_garside_words():
    for t in range(1, 7):
        d = delta(t)
        assert braid_equal(reverse(d), d)
        assert braid_equal(power(d, 2), power(braid(t, range(1, t)), t))


@settings(max_examples=60, deadline=None)
@given(braids(), braids())
def test_normal_form_decides_equality(a, b):
    if a.strands != b.strands:
        return
    ab = concat(a, b)
    assert braid_equal(ab, concat(concat(ab, b), inverse(b)))
    d = delta(a.strands)
    detour = concat(concat(a, d), concat(conj(b, d), inverse(d)))
    assert left_normal_form(detour) == left_normal_form(ab)


@settings(max_examples=40, deadline=None)
@given(braids(t_min=2, t_max=5, max_len=8), braids(t_min=2, t_max=5, max_len=4), st.sampled_from([1, -1]))
def test_markov_invariance(w, c, sign):
    fp = braid_fingerprint(w)
    if c.strands == w.strands:
        assert braid_fingerprint(conj(w, c)) == fp
        assert braid_fingerprint(conj(w, c)).same_oriented_class(fp)
        assert alexander(conj(w, c)) == alexander(w)
    up = braid(w.strands + 1, list(w.letters) + [sign * w.strands])
    assert braid_fingerprint(up).same_oriented_class(fp)
    assert alexander(up) == alexander(w)


def test_naive_and_transfer_bracket_agree_on_corpus():
    checked = 0
    for w in garside_braids() + [w for w, _ in lens_cases()]:
        pd = closure(w)
        if pd.crossing_count <= 14:
            assert bracket_state_sum(pd) == bracket_temperley_lieb(w), w
            checked += 1
    assert checked > 50


@settings(max_examples=40, deadline=None)
@given(braids(t_max=5, max_len=14))
def test_naive_and_transfer_bracket_agree(w):
    assert bracket_state_sum(closure(w)) == bracket_temperley_lieb(w)


def test_theorem_and_reduced_lifts_agree_on_corpus():
    for w, lens in lens_cases():
        d = from_braid(w, lens)
        a, b = lift_diagram(d), lift_diagram_reduced(d)
        assert a.component_count() == b.component_count()
        fa, fb = fingerprint(a.diagram), fingerprint(b.diagram)
        assert fa.same_oriented_class(fb), (w, lens)


def shuffle(d, rng, moves):
    for _ in range(moves):
        labs = d.labels()
        n = len(labs)
        ok = [k for k in range(n) if (labs[k] > 0) != (labs[(k + 1) % n] > 0) and labs[k] != -labs[(k + 1) % n]]
        if not ok:
            break
        d = r6_swap(d, rng.choice(ok))
    return d


def test_standardize_then_lift_preserves_fingerprint():
    rng = random.Random(11)
    cases = [c for c in lens_cases() if c[0].strands >= 2 and len(c[0].letters) <= 6 and c[1].p <= 5]
    for w, lens in cases:
        d = from_braid(w, lens)
        want = fingerprint(lift_diagram_reduced(d).diagram)
        s = shuffle(d, rng, rng.randint(1, 4))
        out = standardize(s)
        assert is_standard(out)
        assert fingerprint(lift_diagram_reduced(out).diagram).same_oriented_class(want), (w, lens)
