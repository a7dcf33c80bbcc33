"""Property-based tests for structural invariants of the calculators.

These are identities that should hold on *every* admissible exponent
vector, not just the worked examples pinned elsewhere: permutation
invariance, parity and sign of the principal index, agreement of the two
orbifold Euler characteristic computations, and agreement of the
rank-table Euler average with the closed-form mean Euler characteristic.
"""

import math
import random

from hypothesis import given, settings, strategies as st

from brieskorn import (
    chi_s1,
    is_homotopy_sphere,
    is_rational_homology_sphere,
    make_link,
    mean_euler,
    mean_euler_from_ranks,
    middle_betti,
    period_spectrum,
    phi,
    principal_index,
    quotient_betti,
    se_status,
    sh_plus_ranks,
    strata,
    sylvester_sequence,
)

SETTINGS = settings(deadline=None, max_examples=60)

exponent_vectors = st.lists(st.integers(2, 12), min_size=3, max_size=5).map(tuple)
exponent_vectors_4 = st.lists(st.integers(2, 12), min_size=4, max_size=4).map(tuple)


def shuffled(vec):
    entries = list(vec)
    random.Random(sum(vec)).shuffle(entries)
    return tuple(entries)


@SETTINGS
@given(exponent_vectors)
def test_permutation_invariance(vec):
    link = make_link(vec)
    twin = make_link(shuffled(vec))
    assert principal_index(link) == principal_index(twin)
    assert middle_betti(vec) == middle_betti(twin.exponents)
    if principal_index(link) != 0:
        assert mean_euler(link).value == mean_euler(twin).value
        assert sh_plus_ranks(link, 0, 0).ranks == sh_plus_ranks(twin, 0, 0).ranks


@SETTINGS
@given(exponent_vectors)
def test_principal_index_parity_and_sign(vec):
    link = make_link(vec)
    mu_p = principal_index(link)
    assert mu_p % 2 == 0
    if mu_p > 0:
        assert link.recip_sum > 1
    elif mu_p < 0:
        assert link.recip_sum < 1
    else:
        assert link.recip_sum == 1


@SETTINGS
@given(exponent_vectors)
def test_phi_matches_brute_scan(vec):
    link = make_link(vec)
    layers = strata(link)
    mins = sorted(s.min_period for s in layers)
    total = 0
    for s in layers:
        larger = [m for m in mins if m > s.min_period]
        if s.min_period == link.degree:
            brute = 1  # the principal period itself
        else:
            brute = sum(
                1
                for t in range(s.min_period, link.degree, s.min_period)
                if not any(t % m == 0 for m in larger)
            )
        assert phi(s.min_period, larger, link.degree) == brute
        total += brute
    assert total == len(period_spectrum(link).entries)


@SETTINGS
@given(exponent_vectors)
def test_quotient_chi_equals_chi_s1(vec):
    q = quotient_betti(vec)
    alternating = sum((-1) ** k * b for k, b in enumerate(q.ranks))
    assert q.chi == alternating == chi_s1(vec)


@SETTINGS
@given(st.lists(st.integers(2, 12), min_size=4, max_size=5).map(tuple))
def test_rank_average_agrees_with_closed_form(vec):
    link = make_link(vec)
    if principal_index(link) == 0:
        return
    assert mean_euler_from_ranks(link).value == mean_euler(link).value


@SETTINGS
@given(exponent_vectors_4)
def test_existence_and_obstruction_disjoint(vec):
    report = se_status(make_link(vec))
    if report.verdict.value == "Exists":
        assert not report.lichnerowicz_obstructed


@SETTINGS
@given(exponent_vectors_4)
def test_rhs_iff_middle_rank_zero(vec):
    assert is_rational_homology_sphere(vec) == (middle_betti(vec) == 0)


@SETTINGS
@given(exponent_vectors_4)
def test_sphere_implies_rhs(vec):
    if is_homotopy_sphere(vec):
        assert is_rational_homology_sphere(vec)


@given(st.integers(1, 8))
def test_sylvester_pairwise_coprime(n):
    seq = sylvester_sequence(n)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            assert math.gcd(seq[i], seq[j]) == 1
