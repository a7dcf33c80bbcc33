"""Sasaki-Einstein existence criteria, moduli counts, and Sylvester numerators."""

import itertools
from fractions import Fraction

import pytest

from brieskorn import (
    CoprimeVerdict,
    PreconditionFailed,
    SEVerdict,
    count_perturbation_monomials,
    count_weighted_monomials,
    lichnerowicz_obstructed,
    make_link,
    moduli_dimension,
    se_coprime_iff,
    se_status,
    se_sufficient,
    sylvester_numerator,
)


def test_sufficient_inequalities():
    assert se_sufficient(make_link((2, 3, 11, 11))) == (False, True)
    assert se_sufficient(make_link((3, 3, 3, 3))) == (False, False)
    assert se_sufficient(make_link((2, 2, 5, 5))) == (False, False)
    # not positive: both vacuously false
    assert se_sufficient(make_link((2, 3, 7, 42))) == (False, False)


def test_coprime_criterion():
    assert se_coprime_iff(make_link((2, 3, 5, 7))) is CoprimeVerdict.YES
    assert se_coprime_iff(make_link((2, 3, 5, 61))) is CoprimeVerdict.NO
    assert se_coprime_iff(make_link((2, 2, 5, 5))) is CoprimeVerdict.NOT_APPLICABLE


def test_lichnerowicz_bound():
    assert not lichnerowicz_obstructed(make_link((2, 2, 2, 3)))
    assert lichnerowicz_obstructed(make_link((2, 2, 2, 7)))
    assert lichnerowicz_obstructed(make_link((2, 3, 4, 28)))
    assert not lichnerowicz_obstructed(make_link((2, 3, 4, 16)))


def test_verdicts():
    r = se_status(make_link((2, 3, 11, 11)))
    assert r.verdict is SEVerdict.EXISTS
    assert r.sufficient2 and not r.sufficient1
    r = se_status(make_link((2, 3, 5, 7)))
    assert r.verdict is SEVerdict.EXISTS
    assert r.coprime_iff is CoprimeVerdict.YES
    assert se_status(make_link((2, 2, 2, 7))).verdict is SEVerdict.OBSTRUCTED
    assert se_status(make_link((2, 2, 5, 5))).verdict is SEVerdict.UNKNOWN
    # settled affirmatively in the literature, but not by these criteria
    r = se_status(make_link((2, 2, 2, 3)))
    assert r.verdict is SEVerdict.UNKNOWN
    assert not r.lichnerowicz_obstructed


def test_report_json_shape():
    d = se_status(make_link((2, 3, 11, 11))).to_json_dict()
    assert d == {
        "positivity": True,
        "sufficient1": False,
        "sufficient2": True,
        "coprime_iff": "NotApplicable",
        "lichnerowicz_obstructed": False,
        "verdict": "Exists",
    }


def brute_weighted_count(weights, degree):
    count = 0
    for combo in itertools.product(*(range(degree // w + 1) for w in weights)):
        if sum(c * w for c, w in zip(combo, weights)) == degree:
            count += 1
    return count


def test_count_weighted_monomials():
    assert count_weighted_monomials((33, 22, 6, 6), 66) == 14
    assert count_weighted_monomials((33, 22, 6, 6), 0) == 1
    assert count_weighted_monomials((1, 1), 3) == 4
    for degree in (7, 12, 30):
        for weights in [(2, 3), (3, 5, 7), (1, 2, 4), (6, 10, 15)]:
            assert count_weighted_monomials(weights, degree) == brute_weighted_count(
                weights, degree
            ), (weights, degree)


def test_count_weighted_monomials_validates():
    with pytest.raises(PreconditionFailed):
        count_weighted_monomials((), 5)
    with pytest.raises(PreconditionFailed):
        count_weighted_monomials((2, 0), 5)
    with pytest.raises(PreconditionFailed):
        count_weighted_monomials((2, 3), -1)


def test_count_perturbation_monomials():
    assert count_perturbation_monomials(make_link((2, 3, 11, 11))) == 10
    assert count_perturbation_monomials(make_link((2, 3, 5, 7))) == 0
    # (2,2,2,2): b in {0,1}^4 with sum of weights 1+1+1+1 reaching d = 2
    assert count_perturbation_monomials(make_link((2, 2, 2, 2))) == 6


def test_moduli_report():
    m = moduli_dimension(make_link((2, 3, 11, 11)))
    assert m.applicable
    assert m.h0_degree == 14
    assert m.h0_weight_sum == 6
    assert m.kuranishi_dim == 8
    assert m.perturbation_count == 10
    assert not moduli_dimension(make_link((2, 2, 3, 3))).applicable
    m = moduli_dimension(make_link((2, 3, 5, 7)))
    assert (m.kuranishi_dim, m.perturbation_count) == (0, 0)


def test_sylvester_numerator_values():
    # n = 1 admissible tails: odd, coprime to 3, below 2(c_2 - 1) = 12
    vals = {a: sylvester_numerator(1, a) for a in (5, 7, 11)}
    assert vals == {5: 52, 7: 76, 11: 124}
    # affine in a: 12(a-1) + 4
    assert all(v == 12 * (a - 1) + 4 for a, v in vals.items())


def test_sylvester_numerator_validates():
    with pytest.raises(PreconditionFailed):
        sylvester_numerator(1, 13)  # past the positivity cap
    with pytest.raises(PreconditionFailed):
        sylvester_numerator(1, 6)  # shares a factor with the sequence
    with pytest.raises(PreconditionFailed):
        sylvester_numerator(-1, 5)
    with pytest.raises(PreconditionFailed):
        sylvester_numerator(1, 1)


def test_exists_and_obstructed_disjoint_small_grid():
    for v in itertools.combinations_with_replacement(range(2, 13), 4):
        r = se_status(make_link(v))
        assert not (
            r.verdict is SEVerdict.EXISTS and r.lichnerowicz_obstructed
        ), v
