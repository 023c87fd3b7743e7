from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import corpus, exchange_ok, labelled_bases, oracle_circuits, small_signs, supports_of
from hypermatroid.corpus import enumerate_gpfs, graphic_k4, labels, uniform
from hypermatroid.hyperfield import KRASNER, NEG_INF, SIGNS, TROPICAL
from hypermatroid.matroid import (
    STRONG,
    WEAK,
    CircuitSet,
    GPFunction,
    HVector,
    MatroidError,
    check_circuit_axioms,
    check_strong_gpf,
    check_weak_gpf,
    circuits_from_gpf,
    cocircuits,
    dot,
    dual_gpf,
    gpf_value,
    matroid_equal,
    orthogonal,
    perm_parity,
    perp_minimal,
    proportionality,
    strong_orthogonal,
    underlying_bases,
    verify_basis_exchange,
    weak_orthogonal,
)

U24S = uniform(SIGNS, 2, 4)


def vec(h, ground, coords):
    return HVector(h, tuple(ground), tuple(coords))


# --- construction and evaluation ---------------------------------------------

def test_gpf_value_examples():
    phi = GPFunction.from_subsets(SIGNS, ["1", "2"], 2, {("1", "2"): 1})
    assert gpf_value(phi, ("2", "1")) == -1
    assert gpf_value(phi, ("1", "1")) == 0
    trop = GPFunction.from_subsets(TROPICAL, ["1", "2"], 2, {("1", "2"): 5})
    assert gpf_value(trop, ("2", "1")) == 5
    with pytest.raises(MatroidError):
        gpf_value(phi, ("1",))
    with pytest.raises(MatroidError):
        gpf_value(phi, ("1", "9"))


def test_gpf_validation():
    with pytest.raises(MatroidError, match="identically zero"):
        GPFunction.from_subsets(SIGNS, labels(2), 1, {("1",): 0})
    with pytest.raises(MatroidError):
        GPFunction(SIGNS, labels(2), 3, {3: 1})
    with pytest.raises(MatroidError):
        GPFunction.from_subsets(SIGNS, labels(2), 1, {("3",): 1})
    with pytest.raises(MatroidError):
        GPFunction(SIGNS, ("1", "1"), 1, {1: 1})


def test_perm_parity_against_inversion_count():
    for p in itertools.permutations(range(5)):
        inv = sum(1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j])
        assert perm_parity(p) == inv % 2


@settings(max_examples=60, deadline=None)
@given(st.permutations(["1", "2", "3"]))
def test_alternation_over_signs(t):
    phi = uniform(SIGNS, 3, 3)
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if t[i] > t[j])
    assert gpf_value(phi, t) == (-1) ** inv


# --- Plücker checks --------------------------------------------------------

def test_u24_signs_passes_both():
    assert check_weak_gpf(U24S).passed
    assert check_strong_gpf(U24S).passed


def test_flipped_u24_fails_weak_with_witness():
    flipped = GPFunction.from_subsets(SIGNS, labels(4), 2, {
        ("1", "2"): 1, ("1", "3"): -1, ("1", "4"): 1, ("2", "3"): 1, ("2", "4"): 1, ("3", "4"): 1})
    rep = check_weak_gpf(flipped)
    assert not rep.passed
    (v,) = rep.violations
    assert v.rule == "WG"
    assert v.witness == (("1", "2", "3", "4"), ())
    assert not check_strong_gpf(flipped).passed


def test_flip_on_14_is_still_a_chirotope():
    # terms of the relation become 1, -1, -1, whose sum contains 0
    phi = GPFunction.from_subsets(SIGNS, labels(4), 2, {
        ("1", "2"): 1, ("1", "3"): 1, ("1", "4"): -1, ("2", "3"): 1, ("2", "4"): 1, ("3", "4"): 1})
    assert check_weak_gpf(phi).passed
    assert check_strong_gpf(phi).passed


def test_vacuous_cases():
    assert check_weak_gpf(uniform(SIGNS, 1, 4)).passed
    assert check_weak_gpf(uniform(SIGNS, 1, 4)).checked == 0
    empty = GPFunction(SIGNS, (), 0, {0: 1})
    rep = check_strong_gpf(empty)
    assert rep.passed and rep.checked == 0


def test_non_exchange_indicator_fails_strong():
    phi = GPFunction.from_subsets(KRASNER, labels(4), 2, {("1", "2"): 1, ("3", "4"): 1})
    assert not check_strong_gpf(phi).passed
    assert not verify_basis_exchange([{"1", "2"}, {"3", "4"}])
    assert not exchange_ok([{"1", "2"}, {"3", "4"}])


def test_reduced_enumeration_matches_full_enumeration():
    for phi in small_signs() + enumerate_gpfs(SIGNS, 4, ranks=[2]):
        assert check_weak_gpf(phi).passed == check_weak_gpf(phi, exhaustive=True).passed
        assert check_strong_gpf(phi).passed == check_strong_gpf(phi, exhaustive=True).passed


def test_reduced_enumeration_matches_full_on_failures():
    # every sign pattern on U24 supports, valid or not
    subsets = list(itertools.combinations(labels(4), 2))
    for signs in itertools.product((1, -1), repeat=5):
        phi = GPFunction.from_subsets(SIGNS, labels(4), 2, dict(zip(subsets, (1,) + signs)))
        assert check_weak_gpf(phi).passed == check_weak_gpf(phi, exhaustive=True).passed
        assert check_strong_gpf(phi).passed == check_strong_gpf(phi, exhaustive=True).passed


def test_strong_implies_weak_on_corpus():
    for e in corpus():
        assert check_strong_gpf(e.phi).passed, e.name
        assert check_weak_gpf(e.phi).passed, e.name


def test_tropical_three_term_example():
    # values 0,1,2 on 12,13,23: the two largest products tie
    phi = GPFunction.from_subsets(TROPICAL, labels(3), 2, {("1", "2"): 0, ("1", "3"): 1, ("2", "3"): 2})
    assert check_strong_gpf(phi).passed
    bad = GPFunction.from_subsets(TROPICAL, labels(4), 2, {
        ("1", "2"): 0, ("3", "4"): 0, ("1", "3"): 0, ("2", "4"): 0, ("1", "4"): 5, ("2", "3"): 0})
    # products 0, 0, 5: maximum attained once
    assert not check_weak_gpf(bad).passed


def test_report_violations_sorted_and_capped():
    phi = GPFunction.from_subsets(KRASNER, labels(6), 2, {("1", "2"): 1, ("3", "4"): 1, ("5", "6"): 1})
    rep = check_strong_gpf(phi, limit=3)
    assert not rep.passed
    assert len(rep.violations) == 3
    assert list(rep.violations) == sorted(rep.violations)


# --- underlying matroid ----------------------------------------------------

def test_underlying_bases_examples():
    u = underlying_bases(U24S)
    assert u.labelled_bases() == sorted(itertools.combinations(labels(4), 2))
    rank0 = underlying_bases(GPFunction(SIGNS, labels(2), 0, {0: 1}))
    assert rank0.bases == frozenset({0})
    assert verify_basis_exchange(rank0.bases)
    with pytest.raises(MatroidError):
        verify_basis_exchange([])


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))).flatmap(
    lambda nr: st.tuples(st.just(nr), st.sets(st.sampled_from(
        list(itertools.combinations(range(nr[0]), nr[1]))), min_size=1))))
def test_basis_exchange_matches_oracle(args):
    (n, r), fam = args
    assert verify_basis_exchange([frozenset(map(str, b)) for b in fam]) == exchange_ok(
        [frozenset(b) for b in fam])


# --- circuits ----------------------------------------------------------------

def test_circuit_example_u24():
    c = circuits_from_gpf(U24S)
    x = HVector.from_map(SIGNS, labels(4), {"1": 1, "2": -1, "3": 1})
    assert x in c.circuits
    assert supports_of(c) == {frozenset(s) for s in itertools.combinations(labels(4), 3)}


def test_circuits_over_krasner_and_free():
    c = circuits_from_gpf(uniform(KRASNER, 2, 4))
    assert supports_of(c) == {frozenset(s) for s in itertools.combinations(labels(4), 3)}
    assert all(set(x.coords) <= {0, 1} for x in c)
    assert len(circuits_from_gpf(uniform(SIGNS, 3, 3))) == 0


def test_circuit_supports_match_ordinary_circuits():
    for e in corpus():
        c = circuits_from_gpf(e.phi)
        assert supports_of(c) == oracle_circuits(e.phi.ground, labelled_bases(e.phi)), e.name


def test_circuits_satisfy_axioms_on_corpus():
    for e in corpus():
        c = circuits_from_gpf(e.phi)
        assert check_circuit_axioms(c, STRONG).passed, e.name
        assert check_circuit_axioms(c, WEAK).passed, e.name


def test_all_small_signs_circuits_pass():
    for phi in small_signs():
        c = circuits_from_gpf(phi)
        assert check_circuit_axioms(c, STRONG).passed
        assert check_circuit_axioms(c, WEAK).passed


def test_corrupted_circuit_fails():
    c = circuits_from_gpf(U24S)
    target = HVector.from_map(SIGNS, labels(4), {"1": 1, "2": -1, "3": 1})
    bad = HVector.from_map(SIGNS, labels(4), {"1": 1, "2": 1, "3": 1})
    corrupted = CircuitSet.build(SIGNS, labels(4), (c.circuits - {target}) | {bad})
    weak = check_circuit_axioms(corrupted, WEAK)
    strong = check_circuit_axioms(corrupted, STRONG)
    assert not weak.passed and weak.violations
    assert not strong.passed and strong.violations
    assert {v.rule for v in weak.violations} <= {"WC", "C3"}


def test_circuit_axiom_basic_rules():
    assert check_circuit_axioms(CircuitSet(SIGNS, labels(2), frozenset())).passed
    zero = vec(SIGNS, labels(2), (0, 0))
    rep = check_circuit_axioms(CircuitSet(SIGNS, labels(2), frozenset({zero})))
    assert "C1" in {v.rule for v in rep.violations}
    nested = CircuitSet.build(SIGNS, labels(2), [vec(SIGNS, labels(2), (1, 0)), vec(SIGNS, labels(2), (1, 1))])
    assert "C3" in {v.rule for v in check_circuit_axioms(nested).violations}
    junk = CircuitSet(SIGNS, labels(1), frozenset({vec(SIGNS, labels(1), (7,))}))
    assert "malformed" in {v.rule for v in check_circuit_axioms(junk).violations}


def test_sign_patterns_on_u24_supports_match_gpf_count():
    # circuit sets on the U24 supports passing the strong axioms are exactly
    # those coming from chirotopes; both counts are found by brute force
    supports = [s for s in itertools.combinations(range(4), 3)]
    passing = set()
    for pattern in itertools.product((1, -1), repeat=8):
        vecs = []
        for k, s in enumerate(supports):
            coords = [0] * 4
            coords[s[0]] = 1
            coords[s[1]], coords[s[2]] = pattern[2 * k], pattern[2 * k + 1]
            vecs.append(vec(SIGNS, labels(4), coords))
        c = CircuitSet.build(SIGNS, labels(4), vecs)
        if check_circuit_axioms(c, STRONG).passed:
            passing.add(c)
    from_gpfs = {circuits_from_gpf(p) for p in enumerate_gpfs(SIGNS, 4, ranks=[2])
                 if len(p.values) == 6}
    assert passing == from_gpfs


# --- duality ---------------------------------------------------------------

def test_dual_examples():
    k = dual_gpf(uniform(KRASNER, 1, 2))
    assert k.rank == 1 and k.values == {1: 1, 2: 1}
    s = dual_gpf(uniform(SIGNS, 1, 2))
    assert s.values == {1: 1, 2: -1}
    d = dual_gpf(U24S)
    assert d.rank == 2
    assert d.at(0b0101) == -1  # {1,3} from the word (2,4,1,3)
    assert d.at(0b0011) == 1


def test_double_dual_and_orthogonality_on_corpus():
    for e in corpus():
        phi = e.phi
        assert matroid_equal(dual_gpf(dual_gpf(phi)), phi), e.name
        assert check_strong_gpf(dual_gpf(phi)).passed, e.name
        cs, ds = circuits_from_gpf(phi), cocircuits(phi)
        for x in cs:
            for y in ds:
                assert strong_orthogonal(x, y), (e.name, x, y)


def test_dual_bases_are_complements():
    for e in corpus():
        full = frozenset(e.phi.ground)
        assert labelled_bases(dual_gpf(e.phi)) == {full - b for b in labelled_bases(e.phi)}


def test_dot_and_orthogonality_examples():
    g = labels(4)
    x = vec(SIGNS, g, (1, -1, 1, 0))
    y = vec(SIGNS, g, (1, 1, 0, 1))
    assert SIGNS.member(dot(x, y), 0)
    assert strong_orthogonal(x, y)
    a = vec(SIGNS, g, (1, 0, 1, 0))
    b = vec(SIGNS, g, (0, 1, 0, 1))
    assert dot(a, b) == SIGNS.singleton(0) and strong_orthogonal(a, b)
    p = vec(SIGNS, g, (1, 1, 1, 1))
    assert not strong_orthogonal(p, p)
    assert weak_orthogonal(p, p)
    assert orthogonal(p, p, WEAK) and not orthogonal(p, p, STRONG)
    with pytest.raises(MatroidError):
        dot(x, vec(SIGNS, labels(3), (1, 1, 1)))


def test_perp_examples():
    assert supports_of(perp_minimal(circuits_from_gpf(uniform(KRASNER, 2, 4)))) == {
        frozenset(s) for s in itertools.combinations(labels(4), 3)}
    free = perp_minimal(CircuitSet(SIGNS, labels(3), frozenset()))
    assert free.labelled_supports() == [("1",), ("2",), ("3",)]
    assert perp_minimal(circuits_from_gpf(U24S)) == cocircuits(U24S)


def test_perp_limits():
    with pytest.raises(Exception):
        perp_minimal(circuits_from_gpf(uniform(TROPICAL, 1, 2)))
    with pytest.raises(MatroidError, match="cap"):
        perp_minimal(circuits_from_gpf(U24S), cap=10)


def test_perp_matches_cocircuits_small_signs():
    for phi in small_signs():
        assert perp_minimal(circuits_from_gpf(phi)) == cocircuits(phi)


# --- equality ----------------------------------------------------------------

def test_matroid_equal_examples():
    assert matroid_equal(U24S, U24S.scaled(-1))
    assert matroid_equal(U24S, U24S)
    flipped = GPFunction(SIGNS, U24S.ground, 2, {**U24S.values, 0b1001: -1})
    assert not matroid_equal(U24S, flipped)
    with pytest.raises(MatroidError):
        matroid_equal(U24S, uniform(KRASNER, 2, 4))
    with pytest.raises(MatroidError):
        matroid_equal(U24S, uniform(SIGNS, 1, 4))


def test_tropical_scaling_is_addition():
    phi = graphic_k4(KRASNER)
    assert proportionality(phi, phi) == 1
    t = GPFunction.from_subsets(TROPICAL, labels(2), 1, {("1",): 0, ("2",): Fraction(3)})
    assert proportionality(t, t.scaled(Fraction(2))) == 2
    assert t.scaled(Fraction(2)).values == {1: 2, 2: 5}
    assert NEG_INF not in t.values.values()
