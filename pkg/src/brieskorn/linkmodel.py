"""Brieskorn-Pham links and their Reeb-orbit strata.

A Brieskorn-Pham link L(a) for an exponent vector a = (a_0, ..., a_n) is the
intersection of the singularity {z_0^{a_0} + ... + z_n^{a_n} = 0} with the
unit sphere in C^{n+1}.  It carries the contact structure induced by the
weighted Sasakian structure with weights w_j = d / a_j, where d = lcm(a_j).
All periods below are measured in units of the common circle action, i.e.
with the overall factor of 2*pi dropped.

The Reeb flow is periodic on each stratum: a point whose coordinate support
is exactly S \\subseteq {0..n} returns to itself after time T iff a_j | T for
every j in S.  For an integer T the fixed-point set of the time-T flow is the
sub-link on the index set

    I_T = { j : a_j | T },

which is itself a Brieskorn-Pham link, of dimension 2*|I_T| - 3.  The strata
of the flow are the distinct such sub-links with |I_T| >= 2, each recorded at
its minimal period lcm{ a_j : j in I_T }.

>>> lk = make_link((2, 3, 4, 16))
>>> lk.degree, lk.weights
(48, (24, 16, 12, 3))
>>> [ (s.min_period, s.exponents) for s in strata(lk) ]
[(4, (2, 4)), (6, (2, 3)), (12, (2, 3, 4)), (16, (2, 4, 16)), (48, (2, 3, 4, 16))]
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionTooLow, InternalInconsistency, InvalidExponent

__all__ = [
    "LinkProfile",
    "Stratum",
    "PeriodSpectrum",
    "parse_exponents",
    "canonical_exponents",
    "make_link",
    "index_set",
    "strata",
    "period_spectrum",
    "sylvester_sequence",
    "sylvester_links",
]


def parse_exponents(text):
    """Parse a comma-separated exponent vector such as ``"2,3,4,16"``.

    >>> parse_exponents("2,3,4,16")
    (2, 3, 4, 16)
    """
    parts = [p.strip() for p in str(text).split(",") if p.strip() != ""]
    if not parts:
        raise InvalidExponent("empty exponent vector")
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise InvalidExponent(f"exponent {p!r} is not an integer") from None
    return tuple(out)


def canonical_exponents(exponents):
    """Sorted (non-decreasing) copy of the vector, used as a dedup/cache key.

    The link type is invariant under permuting coordinates, so two vectors
    with the same multiset of exponents describe the same link.  User-facing
    functions preserve the order they were given; canonicalization is only
    for comparing, deduplicating and caching.
    """
    return tuple(sorted(exponents))


@dataclass(frozen=True)
class LinkProfile:
    """Basic numerical profile of a Brieskorn-Pham link.

    Attributes
    ----------
    exponents : tuple of int, in the order supplied by the caller
    degree : int, d = lcm of the exponents
    weights : tuple of int, w_j = d / a_j
    link_dim : int, 2n - 1 for n + 1 exponents
    recip_sum : Fraction, sum of 1/a_j; the link is "positive" (log Fano
        range) exactly when this exceeds 1
    """

    exponents: tuple
    degree: int
    weights: tuple
    link_dim: int
    recip_sum: Fraction

    @property
    def gcd_graph(self):
        """Edges (i, j), i < j, with gcd(a_i, a_j) > 1."""
        a = self.exponents
        return tuple(
            (i, j)
            for i, j in combinations(range(len(a)), 2)
            if math.gcd(a[i], a[j]) > 1
        )

    @property
    def canonical(self):
        return canonical_exponents(self.exponents)


def make_link(exponents):
    """Validate an exponent vector and compute its :class:`LinkProfile`.

    Every entry must be an integer >= 2 and there must be at least two of
    them.  (Classifiers and Reeb-orbit machinery impose stronger dimension
    requirements of their own; a two-exponent vector still has a meaningful
    degree/weight/homology profile.)

    >>> make_link((2, 2, 2, 2)).weights
    (1, 1, 1, 1)
    """
    exponents = tuple(exponents)
    if len(exponents) < 2:
        raise InvalidExponent(
            f"need at least two exponents, got {len(exponents)}"
        )
    for a in exponents:
        if not isinstance(a, int) or isinstance(a, bool):
            raise InvalidExponent(f"exponent {a!r} is not an integer")
        if a < 2:
            raise InvalidExponent(f"exponent {a} is below 2")
    d = math.lcm(*exponents)
    weights = tuple(d // a for a in exponents)
    n = len(exponents) - 1
    recip = sum((Fraction(1, a) for a in exponents), Fraction(0))
    return LinkProfile(
        exponents=exponents,
        degree=d,
        weights=weights,
        link_dim=2 * n - 1,
        recip_sum=recip,
    )


def index_set(link, period):
    """I_T = indices j with a_j | T: the coordinate support fixed at time T."""
    return frozenset(
        j for j, a in enumerate(link.exponents) if period % a == 0
    )


@dataclass(frozen=True)
class Stratum:
    """One stratum of the Reeb flow: a sub-link fixed by the time-T map.

    Attributes
    ----------
    index_set : frozenset of coordinate indices (I_T)
    exponents : the sub-link's exponents, in ambient index order
    min_period : lcm of the sub-link's exponents; the stratum appears in the
        period spectrum exactly at the multiples of this
    dim : 2*|I_T| - 3, the real dimension of the sub-link
    """

    index_set: frozenset
    exponents: tuple
    min_period: int
    dim: int


def _require_three(link, what):
    if len(link.exponents) < 3:
        raise DimensionTooLow(
            f"{what} needs a link of dimension >= 3 "
            f"(at least three exponents); got {len(link.exponents)}"
        )


def strata(link):
    """All strata of the Reeb flow, sorted by minimal period.

    Enumerates subsets S of the index set with |S| >= 2, closes each under
    T = lcm{a_j : j in S} (i.e. replaces S by I_T), and deduplicates.  The
    last stratum is always the principal one (the whole link, at period d).
    Distinct strata never share a minimal period, because I_T is a function
    of T alone.
    """
    _require_three(link, "stratum enumeration")
    a = link.exponents
    found = {}
    for size in range(2, len(a) + 1):
        for subset in combinations(range(len(a)), size):
            t = math.lcm(*(a[j] for j in subset))
            if t in found:
                continue
            idx = index_set(link, t)
            if not idx.issuperset(subset):  # cannot happen; cheap to check
                raise InternalInconsistency(
                    f"I_{t} = {sorted(idx)} does not contain {subset}"
                )
            found[t] = Stratum(
                index_set=idx,
                exponents=tuple(a[j] for j in sorted(idx)),
                min_period=t,
                dim=2 * len(idx) - 3,
            )
    out = tuple(sorted(found.values(), key=lambda s: s.min_period))
    if out[-1].min_period != link.degree or len(out[-1].index_set) != len(a):
        raise InternalInconsistency("principal stratum missing or misplaced")
    return out


@dataclass(frozen=True)
class PeriodSpectrum:
    """Every period T <= d at which some stratum is fixed, with its label.

    ``entries`` is a tuple of (T, stratum) sorted by T; the stratum labeling
    T is the one with index set I_T.  The spectrum consists of all multiples
    of the strata minimal periods up to and including the principal period,
    and it is periodic: I_{T + d} = I_T.
    """

    entries: tuple
    principal_period: int


def period_spectrum(link):
    """Compute the :class:`PeriodSpectrum` of one principal period.

    Built as the union of multiples of the strata minimal periods (never by
    scanning 1..d, which is hopeless when d is large and the minimal periods
    are small).
    """
    st = strata(link)
    d = link.degree
    by_index_set = {s.index_set: s for s in st}
    periods = set()
    for s in st:
        periods.update(range(s.min_period, d + 1, s.min_period))
    entries = []
    for t in sorted(periods):
        label = by_index_set.get(index_set(link, t))
        if label is None:
            raise InternalInconsistency(
                f"period {t} has index set outside the stratum list"
            )
        entries.append((t, label))
    return PeriodSpectrum(entries=tuple(entries), principal_period=d)


def sylvester_sequence(count):
    """First ``count`` terms of Sylvester's sequence 2, 3, 7, 43, 1807, ...

    Defined by c_0 = 2 and c_{i+1} = c_i(c_i - 1) + 1; equivalently
    c_i = 1 + prod_{j<i} c_j, which makes the terms pairwise coprime (any
    common divisor of c_i and c_j, j < i, divides 1).  Coprimality is
    re-checked here for the terms we ever use.

    >>> sylvester_sequence(5)
    (2, 3, 7, 43, 1807)
    """
    if count < 1:
        raise InvalidExponent("sylvester_sequence needs count >= 1")
    seq = [2]
    while len(seq) < count:
        c = seq[-1]
        seq.append(c * (c - 1) + 1)
    for i, j in combinations(range(min(count, 7)), 2):
        if math.gcd(seq[i], seq[j]) != 1:
            raise InternalInconsistency(
                f"sylvester terms c_{i}, c_{j} are not coprime"
            )
    return tuple(seq)


def sylvester_links(n, a_max):
    """Exponent vectors (2, 2c_0, ..., 2c_n, a) for admissible a <= a_max.

    The tail exponent a ranges over 2 <= a <= a_max with gcd(a, c_i) = 1 for
    all i <= n (in particular a is odd, since c_0 = 2).  These links have
    dimension 2n + 3.

    >>> sylvester_links(1, 5)
    [(2, 4, 6, 5)]
    >>> sylvester_links(0, 3)
    [(2, 4, 3)]
    """
    if n < 0:
        raise InvalidExponent("sylvester_links needs n >= 0")
    cs = sylvester_sequence(n + 1)
    head = (2,) + tuple(2 * c for c in cs)
    out = []
    for a in range(2, a_max + 1):
        if all(math.gcd(a, c) == 1 for c in cs):
            out.append(head + (a,))
    return out
