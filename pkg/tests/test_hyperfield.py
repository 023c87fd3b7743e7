from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import open_half_plane_zero, semicircle_zero, signs_mutations, tropical_zero
from hypermatroid.hyperfield import (
    KRASNER,
    NEG_INF,
    PHASE,
    PHASE_ZERO,
    SIGNS,
    TROPICAL,
    FiniteSet,
    Homomorphism,
    HyperfieldError,
    PhaseRegion,
    TropicalDownSet,
    apply_hom,
    canonical_to_krasner,
    identity_hom,
    phase_region,
    table_of,
    verify_homomorphism,
    verify_hyperfield_axioms,
)

F = Fraction


# --- multiplication, inverses -----------------------------------------------

def test_mul_examples():
    assert SIGNS.mul(-1, -1) == 1
    assert TROPICAL.mul(F(2), F(3)) == F(5)
    for h, a in [(KRASNER, 1), (SIGNS, -1), (TROPICAL, F(7)), (PHASE, F(1, 3))]:
        assert h.mul(h.zero, a) == h.zero
        assert h.mul(h.one, a) == a


def test_carrier_errors():
    with pytest.raises(HyperfieldError):
        SIGNS.hyperadd(2, 1)
    with pytest.raises(HyperfieldError):
        PHASE.check(F(3, 2))
    with pytest.raises(ZeroDivisionError):
        TROPICAL.inv(NEG_INF)
    with pytest.raises(ZeroDivisionError):
        SIGNS.inv(0)


def test_neg_examples():
    assert KRASNER.neg(1) == 1
    assert SIGNS.neg(1) == -1
    assert PHASE.neg(F(1, 8)) == F(5, 8)


def test_tropical_neg_is_identity_by_search():
    sample = [NEG_INF] + [F(k, 3) for k in range(-6, 7)]
    for a in sample:
        partners = [b for b in sample if TROPICAL.member(TROPICAL.hyperadd(a, b), NEG_INF)]
        assert partners == [a]
        assert TROPICAL.neg(a) == a


# --- hyperaddition ---------------------------------------------------------

def test_hyperadd_examples():
    assert KRASNER.hyperadd(1, 1) == FiniteSet(frozenset({0, 1}))
    assert SIGNS.hyperadd(1, -1) == FiniteSet(frozenset({-1, 0, 1}))
    assert TROPICAL.hyperadd(F(3), F(3)) == TropicalDownSet(F(3))
    assert PHASE.hyperadd(F(0), F(1, 2)) == PhaseRegion(True, (F(0), F(1, 2)))


def test_phase_pairwise_cases():
    assert PHASE.hyperadd(F(1, 3), F(1, 3)) == PhaseRegion(False, (F(1, 3),))
    # the shorter arc, whichever side it is on
    assert PHASE.hyperadd(F(0), F(1, 4)) == PhaseRegion(False, (), ((F(0), F(1, 4)),))
    assert PHASE.hyperadd(F(0), F(3, 4)) == PhaseRegion(False, (), ((F(3, 4), F(1, 4)),))
    assert PHASE.hyperadd(F(1, 5), PHASE_ZERO) == PhaseRegion(False, (F(1, 5),))


def test_hypersum_examples():
    assert SIGNS.hypersum([1, -1, 1]).items == {-1, 0, 1}
    assert TROPICAL.hypersum([F(2), F(5), F(5)]) == TropicalDownSet(F(5))
    for h in (KRASNER, SIGNS, TROPICAL, PHASE):
        assert h.hypersum([]) == h.singleton(h.zero)


def test_hypersum_signs_matches_table_iteration():
    table = table_of(SIGNS)
    for terms in itertools.product((-1, 0, 1), repeat=3):
        acc = {"0"}
        for t in terms:
            acc = set().union(*(table.add_table(a, str(t)) for a in acc))
        assert {str(x) for x in SIGNS.hypersum(terms).items} == acc


def test_contains_zero_examples():
    assert KRASNER.contains_zero([1, 1])
    assert not KRASNER.contains_zero([1])
    assert not SIGNS.contains_zero([1, 1])
    assert TROPICAL.contains_zero([F(3), F(3), F(1)])
    assert not TROPICAL.contains_zero([F(3), F(1)])


def test_member_examples():
    assert TROPICAL.member(TropicalDownSet(F(3)), F(2))
    assert not TROPICAL.member(TropicalDownSet(F(3)), F(4))
    assert KRASNER.member(FiniteSet(frozenset({0, 1})), 1)
    arc = phase_region(False, (), [(F(0), F(1, 4))])
    assert PHASE.member(arc, F(1, 8))
    assert not PHASE.member(arc, F(0))
    assert not PHASE.member(arc, F(1, 4))


@pytest.mark.parametrize("h", [KRASNER, SIGNS], ids=lambda h: h.name)
def test_fast_paths_match_plain_tables(h):
    plain = table_of(h)
    for k in range(6):
        for terms in itertools.product(h.elements(), repeat=k):
            slow = plain.member(plain.hypersum([str(t) for t in terms]), plain.zero)
            assert h.contains_zero(terms) == slow


@settings(max_examples=200, deadline=None)
@given(st.lists(st.one_of(st.just(NEG_INF), st.fractions(min_value=-5, max_value=5, max_denominator=4)),
                max_size=7))
def test_tropical_zero_rule(values):
    expected = tropical_zero(values)
    assert TROPICAL.contains_zero(values) == expected
    assert TROPICAL.member(TROPICAL.hypersum(values), NEG_INF) == expected


def test_phase_zero_matches_semicircle_rule():
    angles = [PHASE_ZERO] + [F(k, 12) for k in range(12)]
    for k in range(5):
        for terms in itertools.product(angles, repeat=k):
            assert PHASE.contains_zero(terms) == semicircle_zero(terms), terms


def test_phase_open_half_plane_wording_is_too_generous():
    # three phases on a closed half-circle: their sum is the open arc between
    # the outer two, which misses zero
    terms = [F(0), F(1, 4), F(1, 2)]
    assert open_half_plane_zero(terms)
    assert not PHASE.contains_zero(terms)
    assert PHASE.hypersum(terms) == PhaseRegion(False, (), ((F(0), F(1, 2)),))


def test_phase_membership_by_reversibility():
    # w is in the sum of the terms exactly when 0 is in the sum of terms and -w
    angles = [PHASE_ZERO] + [F(k, 8) for k in range(8)]
    probes = [PHASE_ZERO] + [F(k, 48) for k in range(48)]
    for k in range(4):
        for terms in itertools.product(angles, repeat=k):
            s = PHASE.hypersum(terms)
            for w in probes:
                assert PHASE.member(s, w) == semicircle_zero(list(terms) + [PHASE.neg(w)])


def test_phase_set_sums_are_associative():
    angles = [PHASE_ZERO] + [F(k, 8) for k in range(8)]
    for a in itertools.product(angles, repeat=2):
        for b in itertools.product(angles, repeat=2):
            assert PHASE.add_sets(PHASE.hypersum(a), PHASE.hypersum(b)) == PHASE.hypersum(a + b)


def test_phase_region_is_canonical():
    whole = phase_region(False, [F(0), F(1, 2)], [(F(0), F(1, 2)), (F(1, 2), F(1, 2))])
    assert phase_region(False, [F(1, 2), F(0)], [(F(1, 2), F(1, 2)), (F(0), F(1, 2))]) == whole
    assert whole != phase_region(False, [F(1, 2)], [(F(1, 2), F(1, 2)), (F(0), F(1, 2))])
    assert all(PHASE.member(whole, F(k, 16)) for k in range(16))
    # touching arcs with their shared endpoint merge
    assert phase_region(False, [F(1, 8)], [(F(0), F(1, 8)), (F(1, 8), F(1, 8))]) == phase_region(
        False, [], [(F(0), F(1, 4))])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23), st.integers(0, 23))
def test_phase_commutative_and_associative(a, b, c):
    a, b, c = F(a, 24), F(b, 24), F(c, 24)
    assert PHASE.hyperadd(a, b) == PHASE.hyperadd(b, a)
    assert PHASE.hypersum([a, b, c]) == PHASE.hypersum([c, a, b])


@pytest.mark.parametrize("h", [KRASNER, SIGNS], ids=lambda h: h.name)
def test_finite_basic_laws(h):
    for a, b in itertools.product(h.elements(), repeat=2):
        assert h.hyperadd(a, b) == h.hyperadd(b, a)
    for a in h.elements():
        assert h.neg(h.neg(a)) == a
    for a, b, c in itertools.product(h.elements(), repeat=3):
        if h.member(h.hyperadd(b, c), a):
            assert h.member(h.hyperadd(a, h.neg(b)), c)


# --- axiom verification ----------------------------------------------------

def test_builtin_tables_pass():
    assert verify_hyperfield_axioms(table_of(KRASNER)).passed
    assert verify_hyperfield_axioms(table_of(SIGNS)).passed


def test_broken_signs_table_reports_reversibility():
    for (part, key, new), table in signs_mutations():
        if (part, key, new) == ("add", "-1,1", ["0"]):
            rep = verify_hyperfield_axioms(table)
            assert not rep.passed
            assert "reversibility" in {v.rule for v in rep.violations}
            return
    pytest.fail("mutation not generated")


def test_every_single_entry_mutation_fails():
    muts = signs_mutations()
    assert len(muts) == 54
    for change, table in muts:
        rep = verify_hyperfield_axioms(table)
        assert not rep.passed and rep.violations, change


def test_axioms_reject_infinite():
    with pytest.raises(HyperfieldError):
        verify_hyperfield_axioms(TROPICAL)


# --- homomorphisms -----------------------------------------------------------

def test_homomorphism_examples():
    assert verify_homomorphism(canonical_to_krasner(SIGNS)).passed
    assert verify_homomorphism(identity_hom(SIGNS)).passed
    bad = Homomorphism(SIGNS, KRASNER, {-1: 0, 0: 0, 1: 1})
    rep = verify_homomorphism(bad)
    assert not rep.passed
    assert "multiplicative" in {v.rule for v in rep.violations}


def test_canonical_map_values():
    f = canonical_to_krasner(TROPICAL)
    assert apply_hom(f, NEG_INF) == 0
    assert apply_hom(f, F(-3)) == 1
    g = canonical_to_krasner(PHASE)
    assert g(PHASE_ZERO) == 0 and g(F(1, 3)) == 1


def test_signs_to_krasner_is_the_only_map_checked_exhaustively():
    good = []
    for img in itertools.product((0, 1), repeat=3):
        f = Homomorphism(SIGNS, KRASNER, dict(zip((-1, 0, 1), img)))
        if verify_homomorphism(f).passed:
            good.append(img)
    assert good == [(1, 0, 1)]


def test_verify_homomorphism_needs_finite_source():
    with pytest.raises(HyperfieldError):
        verify_homomorphism(canonical_to_krasner(TROPICAL))


def test_text_round_trip_of_elements():
    for h, vals in [(KRASNER, [0, 1]), (SIGNS, [-1, 0, 1]), (TROPICAL, [NEG_INF, F(-2, 3), F(4)]),
                    (PHASE, [PHASE_ZERO, F(0), F(5, 7)])]:
        for v in vals:
            assert h.parse(h.format(v)) == v
    assert TROPICAL.format(F(1, 2)) == "1/2"
    assert PHASE.format(F(1, 2)) == "turn:1/2"
    with pytest.raises(HyperfieldError):
        PHASE.parse("turn:3/2")
