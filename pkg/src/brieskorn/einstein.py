"""Sasaki-Einstein existence criteria and deformation counts.

Everything here evaluates number-theoretic inequalities and lattice counts
in exact arithmetic; no metric is ever constructed.  The criteria are the
classical ones for Brieskorn-Pham links:

* two sufficient inequalities in the style of Boyer-Galicki-Kollar, using
  the auxiliary integers b_i = gcd(lcm_{j != i} a_j, a_i);
* the Ghigi-Kollar sharp characterization in the pairwise-coprime case;
* the Lichnerowicz-type obstruction of Gauntlett-Martelli-Sparks-Yau,
  expressed through the weights.

The three are combined into a single verdict (Exists / Obstructed / Unknown)
by :func:`se_status`.  The moduli side counts weighted-homogeneous monomials:
the Kuranishi-style dimension h^0(O(d)) - sum_i h^0(O(w_i)) and the number
of admissible perturbation monomials z^b with 0 <= b_j < a_j of weighted
degree d.  For some links the two counts disagree in the literature; both
are always reported side by side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import (
    DimensionTooLow,
    InternalInconsistency,
    PreconditionFailed,
)
from .linkmodel import LinkProfile, make_link, sylvester_sequence

__all__ = [
    "SEVerdict",
    "CoprimeVerdict",
    "SEReport",
    "se_sufficient",
    "se_coprime_iff",
    "lichnerowicz_obstructed",
    "se_status",
    "count_weighted_monomials",
    "count_perturbation_monomials",
    "ModuliReport",
    "moduli_dimension",
    "sylvester_numerator",
]


def _as_link(link_or_exponents):
    if isinstance(link_or_exponents, LinkProfile):
        return link_or_exponents
    return make_link(link_or_exponents)


def _require_surface_dim(link):
    if len(link.exponents) < 3:
        raise DimensionTooLow(
            "Sasaki-Einstein criteria need at least three exponents"
        )


class SEVerdict(Enum):
    EXISTS = "Exists"
    OBSTRUCTED = "Obstructed"
    UNKNOWN = "Unknown"


class CoprimeVerdict(Enum):
    YES = "Yes"
    NO = "No"
    NOT_APPLICABLE = "NotApplicable"


def _b_numbers(exponents):
    """b_i = gcd(lcm of the other exponents, a_i)."""
    out = []
    for i, a in enumerate(exponents):
        rest = math.lcm(*(b for j, b in enumerate(exponents) if j != i))
        out.append(math.gcd(rest, a))
    return tuple(out)


def se_sufficient(link):
    """The two sufficient inequalities, as a pair of booleans.

    With sigma = sum 1/a_i and n+1 exponents:

      first:   1 < sigma < 1 + (n/(n-1)) * min over { 1/a_i } and
               { 1/(b_i b_j) : i < j }
      second:  1 < sigma < 1 + (n/(n-1)) * min_i(1/a_i) * max_j(1/a_j)

    Either firing implies a Sasaki-Einstein metric exists.

    >>> se_sufficient(make_link((2, 3, 11, 11)))
    (False, True)
    """
    link = _as_link(link)
    _require_surface_dim(link)
    a = link.exponents
    n = len(a) - 1
    sigma = link.recip_sum
    if sigma <= 1:
        return (False, False)
    factor = Fraction(n, n - 1)
    bs = _b_numbers(a)
    small = min(
        min(Fraction(1, ai) for ai in a),
        min(Fraction(1, bs[i] * bs[j]) for i, j in combinations(range(len(a)), 2)),
    )
    first = sigma < 1 + factor * small
    second = sigma < 1 + factor * Fraction(1, max(a)) * Fraction(1, min(a))
    return (first, second)


def se_coprime_iff(link):
    """Ghigi-Kollar: for pairwise coprime exponents the existence question
    is *equivalent* to 1 < sigma < 1 + n * min_i(1/a_i).

    Returns Yes/No accordingly, or NotApplicable when some pair of exponents
    shares a factor.

    >>> se_coprime_iff(make_link((2, 3, 5, 7)))
    <CoprimeVerdict.YES: 'Yes'>
    >>> se_coprime_iff(make_link((2, 3, 5, 61)))
    <CoprimeVerdict.NO: 'No'>
    """
    link = _as_link(link)
    _require_surface_dim(link)
    a = link.exponents
    if any(math.gcd(x, y) > 1 for x, y in combinations(a, 2)):
        return CoprimeVerdict.NOT_APPLICABLE
    n = len(a) - 1
    sigma = link.recip_sum
    if 1 < sigma < 1 + Fraction(n, max(a)):
        return CoprimeVerdict.YES
    return CoprimeVerdict.NO


def lichnerowicz_obstructed(link):
    """Weight-form of the Lichnerowicz/Bishop volume obstruction:

        |w| - d >= n * min_i w_i   implies no Sasaki-Einstein metric.

    (Equality is included: the borderline of the underlying Fano-index bound
    is attained only by the round sphere, which no nontrivial link is.)

    >>> lichnerowicz_obstructed(make_link((2, 2, 2, 5)))
    True
    >>> lichnerowicz_obstructed(make_link((2, 2, 2, 3)))
    False
    """
    link = _as_link(link)
    _require_surface_dim(link)
    n = len(link.exponents) - 1
    return sum(link.weights) - link.degree >= n * min(link.weights)


@dataclass(frozen=True)
class SEReport:
    """Outcome of all Sasaki-Einstein criteria for one link.

    ``verdict`` is Exists when a sufficient criterion fires (or the coprime
    characterization says Yes), Obstructed when the Lichnerowicz bound or
    the coprime characterization rules a metric out, Unknown otherwise.
    Exists and Obstructed are mutually exclusive by construction; the code
    still cross-checks and treats a clash as an internal bug.
    """

    positivity: bool
    sufficient1: bool
    sufficient2: bool
    coprime_iff: CoprimeVerdict
    lichnerowicz_obstructed: bool
    verdict: SEVerdict

    def to_json_dict(self):
        return {
            "positivity": self.positivity,
            "sufficient1": self.sufficient1,
            "sufficient2": self.sufficient2,
            "coprime_iff": self.coprime_iff.value,
            "lichnerowicz_obstructed": self.lichnerowicz_obstructed,
            "verdict": self.verdict.value,
        }


def se_status(link):
    """Combine all criteria into one :class:`SEReport`.

    >>> se_status(make_link((2, 3, 11, 11))).verdict
    <SEVerdict.EXISTS: 'Exists'>
    >>> se_status(make_link((2, 2, 2, 7))).verdict
    <SEVerdict.OBSTRUCTED: 'Obstructed'>
    >>> se_status(make_link((2, 2, 5, 5))).verdict
    <SEVerdict.UNKNOWN: 'Unknown'>
    """
    link = _as_link(link)
    _require_surface_dim(link)
    s1, s2 = se_sufficient(link)
    cop = se_coprime_iff(link)
    lich = lichnerowicz_obstructed(link)
    exists = s1 or s2 or cop is CoprimeVerdict.YES
    obstructed = lich or cop is CoprimeVerdict.NO
    if exists and obstructed:
        raise InternalInconsistency(
            f"criteria clash for {link.exponents}: "
            f"sufficient=({s1},{s2}) coprime={cop.value} lichnerowicz={lich}"
        )
    if exists:
        verdict = SEVerdict.EXISTS
    elif obstructed:
        verdict = SEVerdict.OBSTRUCTED
    else:
        verdict = SEVerdict.UNKNOWN
    return SEReport(
        positivity=link.recip_sum > 1,
        sufficient1=s1,
        sufficient2=s2,
        coprime_iff=cop,
        lichnerowicz_obstructed=lich,
        verdict=verdict,
    )


def _monomial_counts(weights, up_to):
    """DP table t with t[m] = #{ b in Z_{>=0}^k : sum b_j w_j = m }."""
    table = [0] * (up_to + 1)
    table[0] = 1
    for w in weights:
        for amount in range(w, up_to + 1):
            table[amount] += table[amount - w]
    return table


def count_weighted_monomials(weights, degree):
    """Number of monomials of weighted degree ``degree``: the coefficient
    count #{ b : sum b_j w_j = degree } = h^0 of O(degree) on the weighted
    projective space CP(w).

    >>> count_weighted_monomials((33, 22, 6, 6), 66)
    14
    >>> count_weighted_monomials((1, 1), 3)
    4
    """
    weights = tuple(weights)
    if not weights:
        raise PreconditionFailed("need at least one weight")
    for w in weights:
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise PreconditionFailed(f"weight {w!r} must be an integer >= 1")
    if degree < 0:
        raise PreconditionFailed(f"degree must be >= 0, got {degree}")
    return _monomial_counts(weights, degree)[degree]


def count_perturbation_monomials(link):
    """Number of monomials z^b of weighted degree d with 0 <= b_j < a_j.

    These are the perturbations of the defining polynomial that stay inside
    the same weighted-homogeneous family with isolated singularity (each
    variable's exponent stays below its own a_j).

    >>> count_perturbation_monomials(make_link((2, 3, 11, 11)))
    10
    >>> count_perturbation_monomials(make_link((2, 3, 5, 7)))
    0
    """
    link = _as_link(link)
    d = link.degree
    table = [0] * (d + 1)
    table[0] = 1
    for w, a in zip(link.weights, link.exponents):
        nxt = [0] * (d + 1)
        for amount, ways in enumerate(table):
            if not ways:
                continue
            v = amount
            for _ in range(a):  # b = 0 .. a-1
                if v > d:
                    break
                nxt[v] += ways
                v += w
        table = nxt
    return table[d]


@dataclass(frozen=True)
class ModuliReport:
    """Both deformation counts, side by side.

    ``kuranishi_dim`` = h^0(O(d)) - sum_i h^0(O(w_i)) on CP(w);
    ``perturbation_count`` = number of admissible perturbation monomials.
    The two measure the same moduli in different ways and are known to
    disagree for some links (e.g. 8 vs 10 for (2,3,11,11)); this package
    reports both and adjudicates neither.  ``applicable`` records whether
    the hypersurface-deformation count is justified for this link (at most
    one exponent equal to 2).
    """

    applicable: bool
    h0_degree: int
    h0_weight_sum: int
    kuranishi_dim: int
    perturbation_count: int

    def to_json_dict(self):
        return {
            "applicable": self.applicable,
            "h0_degree": self.h0_degree,
            "h0_weight_sum": self.h0_weight_sum,
            "kuranishi_dim": self.kuranishi_dim,
            "perturbation_count": self.perturbation_count,
        }


def moduli_dimension(link):
    """Compute the :class:`ModuliReport` of a link.

    One DP table up to amount d answers h^0(O(d)) and every h^0(O(w_i)).

    >>> r = moduli_dimension(make_link((2, 3, 11, 11)))
    >>> (r.kuranishi_dim, r.perturbation_count)
    (8, 10)
    """
    link = _as_link(link)
    _require_surface_dim(link)
    table = _monomial_counts(link.weights, link.degree)
    h0_d = table[link.degree]
    h0_w = sum(table[w] for w in link.weights)
    kuranishi = h0_d - h0_w
    applicable = sum(1 for a in link.exponents if a == 2) <= 1
    if applicable and kuranishi < 0:
        raise InternalInconsistency(
            f"negative deformation dimension {kuranishi} for {link.exponents}"
        )
    return ModuliReport(
        applicable=applicable,
        h0_degree=h0_d,
        h0_weight_sum=h0_w,
        kuranishi_dim=kuranishi,
        perturbation_count=count_perturbation_monomials(link),
    )


def _chi_even_odd(k):
    # k + 2 + (1 - (-1)^{k+1}) / 2: adds 1 exactly when k is even
    return k + 2 + (1 if k % 2 == 0 else 0)


def sylvester_numerator(n, a):
    """Closed-form numerator for the mean Euler characteristic of the
    Sylvester links (2, 2c_0, ..., 2c_n, a), as a polynomial identity in a.

    First sum (strata containing the tail coordinate), ell = 0..n over
    subsets S of {0..n} with |S| = ell + 1, weighted by (a-1) and
    chi_A(ell) = ell + 2 + (1 - (-1)^{ell+1})/2; second sum (strata avoiding
    the tail), ell = 1..n, weighted by chi_B(ell) = ell + 3.  Both weighted
    by prod_{j not in S}(c_j - 1).

    This closed form and the stratum-by-stratum machinery value
    (mean_euler * |mu_P|) do not agree -- e.g. 52 vs 43 at n = 1, a = 5 --
    and no attempt is made to reconcile them here; callers should compute
    both and report both.  What both forms share: they are affine in a on
    the admissible arithmetic progressions, with positive slope.

    Preconditions: a >= 2 coprime to c_0..c_n, and the principal index is
    positive, i.e. a < 2(c_{n+1} - 1).

    >>> sylvester_numerator(1, 5)
    52
    """
    if n < 0:
        raise PreconditionFailed("need n >= 0")
    cs = sylvester_sequence(n + 2)
    tail_cap = 2 * (cs[n + 1] - 1)
    cs = cs[: n + 1]
    if a < 2:
        raise PreconditionFailed(f"tail exponent {a} is below 2")
    for c in cs:
        if math.gcd(a, c) != 1:
            raise PreconditionFailed(
                f"tail exponent {a} shares a factor with sylvester term {c}"
            )
    if a >= tail_cap:
        raise PreconditionFailed(
            f"tail exponent {a} >= {tail_cap}: principal index not positive"
        )
    idx = range(n + 1)
    total = 0
    for ell in range(0, n + 1):
        for subset in combinations(idx, ell + 1):
            outside = math.prod(
                cs[j] - 1 for j in idx if j not in subset
            )
            total += outside * (a - 1) * _chi_even_odd(ell)
    for ell in range(1, n + 1):
        for subset in combinations(idx, ell + 1):
            outside = math.prod(
                cs[j] - 1 for j in idx if j not in subset
            )
            total += outside * (ell + 3)
    return total
