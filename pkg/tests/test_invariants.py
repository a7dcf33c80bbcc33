"""Indices, phi counts, mean Euler characteristics, and graded rank tables."""

from fractions import Fraction

import pytest

from brieskorn import (
    NotLacunary,
    NotMorseBottCover,
    PreconditionFailed,
    ZeroPrincipalIndex,
    chi_s1,
    e1_page,
    make_link,
    maslov_index,
    mean_euler,
    mean_euler_from_ranks,
    period_spectrum,
    phi,
    principal_index,
    sh_plus_ranks,
    strata,
)


def phi_by_scan(period, exclusions, principal_period):
    """Reference phi: walk every multiple of the period up to the principal
    one and drop those absorbed by a strictly larger stratum."""
    if period == principal_period:
        return 1
    return sum(
        1
        for t in range(period, principal_period + 1, period)
        if not any(t % e == 0 for e in exclusions)
    )


def stratum_exclusions(link):
    """Map each stratum to the minimal periods of its strict superstrata."""
    ss = strata(link)
    out = {}
    for s in ss:
        out[s] = tuple(
            t.min_period for t in ss if t.index_set > s.index_set
        )
    return out


# ---------------------------------------------------------------------------
# indices


def test_maslov_index_worked_example():
    link = make_link((2, 3, 4, 16))
    rep = maslov_index(link, 48)
    assert rep.maslov == 14
    assert rep.stratum_dim == 5
    assert rep.shift == 12
    rep6 = maslov_index(link, 6)
    assert rep6.maslov == 2
    assert rep6.stratum_dim == 1
    assert rep6.shift == 2


def test_maslov_index_cover_and_periodicity():
    link = make_link((2, 3, 4, 16))
    mu_p = principal_index(link)
    # period 4 stratum: cover 13 gives T = 52 = 4 + 48, still Morse-Bott
    r1 = maslov_index(link, 4, cover=1)
    r13 = maslov_index(link, 4, cover=13)
    assert r13.shift - r1.shift == mu_p


def test_maslov_index_rejects_non_morse_bott_cover():
    link = make_link((2, 3, 4, 16))
    # T = 12: the outside exponent 4 divides it, so the period-6 stratum
    # does not persist as a Morse-Bott manifold at its double cover
    with pytest.raises(NotMorseBottCover):
        maslov_index(link, 6, cover=2)


def test_maslov_index_rejects_non_stratum_period():
    link = make_link((2, 3, 4, 16))
    with pytest.raises(PreconditionFailed):
        maslov_index(link, 5)
    with pytest.raises(PreconditionFailed):
        maslov_index(link, 24)  # a period, but not a minimal one


def test_principal_index_values():
    assert principal_index(make_link((2, 3, 4, 16))) == 14
    assert principal_index(make_link((2, 2, 2, 2))) == 4
    assert principal_index(make_link((2, 3, 7, 22))) == 20
    assert principal_index(make_link((2, 7, 7, 7))) == -2
    assert principal_index(make_link((2, 4, 6, 12))) == 0


def test_shift_parity_is_uniform():
    # shift = n - 1 (mod 2) for every stratum at its minimal period
    for v in [(2, 3, 4, 16), (3, 3, 4, 7), (2, 2, 2, 3, 5), (2, 4, 6, 14, 86, 5)]:
        link = make_link(v)
        n = len(v) - 1
        for s in strata(link):
            rep = maslov_index(link, s.min_period)
            assert rep.shift % 2 == (n - 1) % 2, (v, s.exponents)


# ---------------------------------------------------------------------------
# phi


def test_phi_worked_example():
    # exclusions are the minimal periods of the strictly larger strata
    assert phi(4, (12, 16, 48), 48) == 6
    assert phi(6, (12, 48), 48) == 4
    assert phi(12, (48,), 48) == 3
    assert phi(16, (48,), 48) == 2
    assert phi(48, (), 48) == 1


def test_phi_matches_scan_on_real_links():
    for v in [(2, 3, 4, 16), (2, 2, 3, 3), (3, 3, 4, 7), (2, 3, 7, 22),
              (2, 2, 2, 3, 5), (2, 4, 6, 14, 86, 5)]:
        link = make_link(v)
        t_p = period_spectrum(link).principal_period
        for s, excl in stratum_exclusions(link).items():
            assert phi(s.min_period, excl, t_p) == phi_by_scan(
                s.min_period, excl, t_p
            ), (v, s.exponents)


def test_phi_equals_spectrum_label_count():
    # the spectrum lists exactly the phi(S) periods carrying each stratum
    for v in [(2, 3, 4, 16), (2, 3, 7, 22), (2, 2, 2, 4), (2, 3, 3, 3, 3)]:
        link = make_link(v)
        spec = period_spectrum(link)
        counts = {}
        for _, stratum in spec.entries:
            counts[stratum] = counts.get(stratum, 0) + 1
        for s, excl in stratum_exclusions(link).items():
            assert counts[s] == phi(s.min_period, excl, spec.principal_period)


def test_phi_validates():
    with pytest.raises(PreconditionFailed):
        phi(5, (), 48)  # period must divide the principal period
    with pytest.raises(PreconditionFailed):
        phi(0, (), 48)
    with pytest.raises(PreconditionFailed):
        phi(4, (0,), 48)


# ---------------------------------------------------------------------------
# mean Euler characteristic


KNOWN_MEAN_EULER = {
    (2, 3, 4, 16): Fraction(25, 14),
    (2, 2, 3, 3): Fraction(3, 2),
    (2, 3, 5, 31): Fraction(301, 122),
    (2, 3, 3, 9): Fraction(13, 10),
    (2, 3, 4, 4): Fraction(1, 2),
    (2, 3, 4, 28): Fraction(23, 10),
    (2, 3, 4, 40): Fraction(67, 26),
    (2, 4, 6, 5): Fraction(43, 14),
    (2, 2, 2, 2): Fraction(1),
    (2, 3, 7, 22): Fraction(77, 10),
    (3, 3, 4, 7): Fraction(77, 10),
    (2, 7, 7, 7): Fraction(-25, 2),
    (2, 2, 2, 3, 5): Fraction(-39, 62),
    (2, 3, 3, 3, 3): Fraction(-13, 10),
    (3, 4, 5, 6): Fraction(7, 2),
    (3, 3, 4, 4): Fraction(13, 2),
}


@pytest.mark.parametrize("v,expected", sorted(KNOWN_MEAN_EULER.items()))
def test_mean_euler_known_values(v, expected):
    assert mean_euler(make_link(v)).value == expected


def test_mean_euler_accepts_raw_exponents():
    assert mean_euler((2, 3, 4, 16)).value == Fraction(25, 14)


def test_mean_euler_needs_nonzero_principal_index():
    for v in [(2, 4, 6, 12), (2, 3, 6), (2, 4, 4)]:
        with pytest.raises(ZeroPrincipalIndex):
            mean_euler(make_link(v))


def test_mean_euler_against_full_spectrum_sum():
    # alternative evaluation: sum over *every* spectrum period with its own
    # sign and quotient Euler characteristic; must agree with the phi form
    for v in [(2, 3, 4, 16), (3, 3, 4, 7), (2, 7, 7, 7), (2, 2, 2, 3, 5),
              (2, 4, 6, 14, 86, 5)]:
        link = make_link(v)
        spec = period_spectrum(link)
        mu_p = principal_index(link)
        total = 0
        for t, stratum in spec.entries:
            rep = maslov_index(link, stratum.min_period, t // stratum.min_period)
            sign = -1 if rep.shift % 2 else 1
            total += sign * chi_s1(stratum.exponents)
        assert Fraction(total, abs(mu_p)) == mean_euler(link).value, v


# ---------------------------------------------------------------------------
# graded ranks


def test_sh0_distinguishes_the_contact_pair():
    # equal mean Euler characteristics, different degree-0 ranks
    a = sh_plus_ranks(make_link((2, 3, 7, 22)), 0, 0)
    b = sh_plus_ranks(make_link((3, 3, 4, 7)), 0, 0)
    assert a.ranks == {0: 6}
    assert b.ranks == {0: 7}
    assert a.lacunary and b.lacunary


def test_degree_zero_columns_of_2_3_7_22():
    g = sh_plus_ranks(make_link((2, 3, 7, 22)), 0, 0)
    at_zero = {c.period for c in g.columns if c.shift == 0}
    assert at_zero == {6, 12, 14, 18, 21, 42}


def test_degree_zero_columns_of_3_3_4_7():
    g = sh_plus_ranks(make_link((3, 3, 4, 7)), 0, 0)
    contrib = {c.period: c.ranks[0 - c.shift] for c in g.columns if c.shift == 0}
    assert contrib == {3: 3, 6: 3, 12: 1}


def test_page_vanishes_below_minimal_shift():
    for v in [(2, 3, 4, 16), (3, 3, 4, 7)]:
        link = make_link(v)
        min_shift = min(
            maslov_index(link, s.min_period).shift for s in strata(link)
        )
        g = e1_page(link, min_shift - 6, min_shift - 1)
        assert all(r == 0 for r in g.ranks.values()), v


def test_page_columns_are_positive_ordinals():
    g = e1_page(make_link((2, 3, 4, 16)), 0, 20)
    assert g.columns
    assert all(c.ordinal >= 1 for c in g.columns)


def test_page_rejects_empty_window():
    with pytest.raises(PreconditionFailed):
        e1_page(make_link((2, 3, 4, 16)), 5, 4)


def test_page_needs_nonzero_principal_index():
    with pytest.raises(ZeroPrincipalIndex):
        e1_page(make_link((2, 4, 6, 12)), 0, 0)


def test_graded_ranks_json_shape():
    g = sh_plus_ranks(make_link((2, 3, 7, 22)), -1, 2)
    d = g.to_json_dict()
    assert d == {
        "k_lo": -1,
        "k_hi": 2,
        "ranks": {"-1": 0, "0": 6, "1": 0, "2": 16},
        "mu_P": 20,
        "lacunary": True,
    }


def test_stable_window_alternating_sum_reproduces_numerator():
    # one full degree period just past the first action block sums to
    # chi_m * mu_P = 25 for the worked example
    link = make_link((2, 3, 4, 16))
    g = sh_plus_ranks(link, 17, 30)
    assert sum((-1) ** k * r for k, r in g.ranks.items()) == 25


def test_mean_euler_from_ranks_agrees():
    for v in [(2, 3, 4, 16), (2, 2, 3, 3), (2, 3, 5, 31), (3, 4, 5, 6),
              (2, 7, 7, 7), (2, 2, 2, 3, 5), (2, 3, 3, 3, 3), (3, 3, 4, 4)]:
        link = make_link(v)
        assert mean_euler_from_ranks(link).value == mean_euler(link).value, v


def test_strict_mode_raises_exactly_when_not_lacunary():
    # (2,7,7,7): its (7,7,7) stratum is a genus-15 curve quotient whose odd
    # middle rank (30) sits at odd total degrees next to even-degree classes
    with pytest.raises(NotLacunary):
        mean_euler_from_ranks(make_link((2, 7, 7, 7)), strict=True)
    with pytest.raises(NotLacunary):
        mean_euler_from_ranks(make_link((2, 3, 4, 16)), strict=True)
    v = mean_euler_from_ranks(make_link((2, 3, 7, 22)), strict=True)
    assert v.value == Fraction(77, 10)


def test_non_lacunary_page_is_flagged():
    g = sh_plus_ranks(make_link((2, 7, 7, 7)), -4, 2)
    assert not g.lacunary
    assert g.ranks[-1] == 30
