"""Unit tests for the duality functional and its independent check paths."""

from __future__ import annotations

import random
from itertools import product

import pytest

from polyphi import (
    GeeParams,
    IndexSet,
    TopMonomial,
    admissible_summands,
    binom_parity,
    block_counts,
    closed_form_k3,
    compositions,
    count_disjoint_subgees,
    enumerate_subgees,
    is_subgee_profile,
    pairing,
    pairing_by_profile,
    pairing_set,
)
from polyphi.errors import InfeasibleProfileError

from brute import brute_subgees, theta_of


def all_profiles(k: int, cap: int):
    for r in range(cap + 1):
        yield from compositions(r, k)


# ---------------------------------------------------------------- TopMonomial

def test_top_monomial_validation():
    TopMonomial(IndexSet([1, 4]), 7)
    with pytest.raises(ValueError, match="top degree"):
        TopMonomial(IndexSet([1, 2, 3]), 5)  # r=3 > n-3=2
    with pytest.raises(ValueError, match="n-1"):
        TopMonomial(IndexSet([5]), 5)
    with pytest.raises(ValueError):
        TopMonomial(IndexSet(), 2)
    assert TopMonomial(IndexSet([1, 4]), 7).r == 2


# -------------------------------------------------------------------- pairing

def test_pairing_known_values():
    a222 = GeeParams((2, 2, 2))
    assert pairing_set(a222, IndexSet([3])) == 1       # profile (0,1,0)
    assert pairing_set(GeeParams((1,)), IndexSet()) == 0
    assert pairing_set(GeeParams((2,)), IndexSet()) == 1
    assert pairing_set(GeeParams(()), IndexSet()) == 1  # k=0 convention


def test_pairing_monomial_matches_set():
    a = GeeParams((2, 2, 2))
    mono = TopMonomial(IndexSet([3]), 10)
    assert pairing(a, mono) == pairing_set(a, IndexSet([3]))


def test_pairing_zero_beyond_span():
    assert pairing_set(GeeParams((1,)), IndexSet([2])) == 0
    assert pairing_set(GeeParams((2, 2)), IndexSet([5])) == 0


def test_pairing_zero_when_larger_than_block_count():
    # more subscripts than blocks can never be a subgee
    assert pairing_set(GeeParams((2,)), IndexSet([1, 2])) == 0


def test_admissible_summands_for_second_block_singleton():
    a = GeeParams((2, 2, 2))
    out = admissible_summands(a, (0, 1, 0))
    assert [b for b, _ in out] == [(1, 0, 1), (1, 1, 0), (2, 0, 0)]
    assert all(term == 1 for _, term in out)
    acc = 0
    for _, term in out:
        acc ^= term
    assert acc == pairing_by_profile(a, (0, 1, 0)) == 1


def test_top_class_rule_small():
    for a in [(1,), (3,), (1, 1), (2, 2), (2, 3, 1), (1, 1, 1, 1)]:
        gee = GeeParams(a)
        for j in enumerate_subgees(gee):
            if len(j) == gee.k:
                assert pairing_set(gee, j) == 1, (a, j)


def test_profile_class_invariance():
    rng = random.Random(99)
    for _ in range(200):
        k = rng.randint(1, 4)
        a = GeeParams(tuple(rng.randint(1, 4) for _ in range(k)))
        subgees = list(enumerate_subgees(a))
        j1 = rng.choice(subgees)
        profile = block_counts(j1, a)
        matches = [j for j in subgees if block_counts(j, a) == profile]
        j2 = rng.choice(matches)
        assert pairing_set(a, j1) == pairing_set(a, j2)


def test_non_subgee_vanishing():
    for a in [(2,), (1, 1), (2, 2), (2, 3, 1)]:
        gee = GeeParams(a)
        for mask in range(1 << gee.span):
            subset = IndexSet.from_mask(mask)
            if not is_subgee_profile(block_counts(subset, gee)):
                assert pairing_set(gee, subset) == 0, (a, subset)


# --------------------------------------------------------- pairing_by_profile

def test_pairing_by_profile_values():
    assert pairing_by_profile(GeeParams((2, 2, 2)), (1, 1, 1)) == 1
    assert pairing_by_profile(GeeParams((2, 2, 2)), (0, 2, 0)) == 1
    assert pairing_by_profile(GeeParams((3, 2, 2)), (0, 0, 0)) == 0


def test_pairing_by_profile_matches_every_realization():
    for a in [(2, 1), (2, 2), (3, 1, 2)]:
        gee = GeeParams(a)
        for j in enumerate_subgees(gee):
            profile = block_counts(j, gee)
            assert pairing_by_profile(gee, profile) == pairing_set(gee, j)


def test_pairing_by_profile_infeasible():
    with pytest.raises(InfeasibleProfileError):
        pairing_by_profile(GeeParams((2, 2, 2)), (3, 0, 0))


def test_pairing_by_profile_bad_length():
    with pytest.raises(ValueError):
        pairing_by_profile(GeeParams((2, 2)), (1, 0, 0))


# -------------------------------------------------------------- closed forms

def test_closed_form_rows_at_222():
    a = GeeParams((2, 2, 2))
    expected = {
        (0, 0, 0): 1,
        (0, 0, 1): 0,
        (0, 1, 0): 1,
        (1, 0, 0): 1,
        (0, 1, 1): 1,
        (0, 2, 0): 1,
        (1, 0, 1): 0,
        (1, 1, 0): 1,
        (2, 0, 0): 1,
        (1, 1, 1): 1,
        (1, 2, 0): 1,
        (2, 0, 1): 1,
        (2, 1, 0): 1,
    }
    for profile, value in expected.items():
        assert closed_form_k3(a, profile) == value, profile


def test_closed_form_examples():
    assert closed_form_k3(GeeParams((2, 2, 2)), (1, 0, 1)) == 0
    assert closed_form_k3(GeeParams((2, 2, 2)), (2, 0, 0)) == 1
    assert closed_form_k3(GeeParams((1, 1, 1)), (0, 0, 0)) == 0


def test_closed_form_zero_outside_suffix_condition():
    assert closed_form_k3(GeeParams((4, 4, 4)), (0, 2, 1)) == 0
    assert closed_form_k3(GeeParams((4, 4, 4)), (0, 0, 2)) == 0


def test_closed_form_requires_three_blocks():
    with pytest.raises(ValueError):
        closed_form_k3(GeeParams((2, 2)), (0, 0))


def test_closed_form_agrees_with_general_formula_small():
    for a in product(range(1, 5), repeat=3):
        gee = GeeParams(a)
        for profile in all_profiles(3, 3):
            if not is_subgee_profile(profile):
                continue
            if any(c > ai for c, ai in zip(profile, a)):
                continue
            assert closed_form_k3(gee, profile) == pairing_by_profile(gee, profile), (
                a,
                profile,
            )


# ---------------------------------------------------- count_disjoint_subgees

def test_count_disjoint_examples():
    assert count_disjoint_subgees(GeeParams((2, 2)), (1, 0), (1, 1)) == 2
    assert count_disjoint_subgees(GeeParams((3, 1)), (0, 0), (0, 0)) == 1
    assert count_disjoint_subgees(GeeParams((2, 2)), (2, 0), (1, 0)) == 0


def test_count_disjoint_errors():
    with pytest.raises(InfeasibleProfileError):
        count_disjoint_subgees(GeeParams((2, 2)), (3, 0), (0, 0))
    with pytest.raises(ValueError):
        count_disjoint_subgees(GeeParams((2, 2)), (1, 0, 0), (0, 0))


def test_count_disjoint_matches_brute_force_small():
    for a in [(2, 2), (2, 1), (3, 2)]:
        subgees = brute_subgees(a)
        k = len(a)
        for i in subgees:
            occupied = theta_of(i, a)
            by_profile: dict[tuple[int, ...], int] = {}
            for j in subgees:
                if set(i) & set(j):
                    continue
                key = theta_of(j, a)
                by_profile[key] = by_profile.get(key, 0) + 1
            for profile in all_profiles(k, k):
                if not is_subgee_profile(profile):
                    continue
                assert (
                    count_disjoint_subgees(GeeParams(a), occupied, profile)
                    == by_profile.get(profile, 0)
                ), (a, i, profile)


# ----------------------------------------------- identities behind the proof

def test_relation_sums_vanish_small():
    for a in [(1,), (2,), (1, 1), (2, 2), (2, 1, 2)]:
        gee = GeeParams(a)
        subgees = list(enumerate_subgees(gee))
        for i in subgees:
            if not i:
                continue
            acc = 0
            for j in subgees:
                if j.isdisjoint(i):
                    acc ^= pairing_set(gee, j)
            assert acc == 0, (a, i)


def test_identity_chain_endpoints():
    # Both collapsed forms of a relation's value vanish for every nonempty
    # occupied profile: the direct suffix-condition sum over full-weight
    # profiles, and the disjoint-count weighted sum over the basis profiles.
    for a in [(1,), (2,), (3,), (1, 1), (2, 1), (2, 2), (2, 2, 2), (3, 2, 2)]:
        gee = GeeParams(a)
        k = gee.k
        for m in all_profiles(k, k):
            if sum(m) == 0 or not is_subgee_profile(m):
                continue
            if any(mi > ai for mi, ai in zip(m, gee.a)):
                continue
            lhs = 0
            for t in compositions(k, k):
                if not is_subgee_profile(t):
                    continue
                term = 1
                for mi, ti in zip(m, t):
                    term &= binom_parity(1 - mi, ti)
                lhs ^= term
            rhs = 0
            for c in all_profiles(k, k):
                # an odd count forces c_i <= a_i - m_i, so the profile is feasible
                if count_disjoint_subgees(gee, m, c) & 1:
                    rhs ^= pairing_by_profile(gee, c)
            assert lhs == 0, (a, m)
            assert rhs == 0, (a, m)
