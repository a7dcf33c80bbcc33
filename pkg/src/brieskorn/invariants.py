"""Reeb-orbit indices, orbit counts, and mean Euler characteristics.

The closed Reeb orbits of a Brieskorn-Pham link organize into the strata of
:mod:`brieskorn.linkmodel`.  Each stratum, traversed with total period T
(a multiple of its minimal period), carries a Robbin-Salamon index

    mu(T) = 2 * sum_{j in I_T} T/a_j  +  2 * sum_{j not in I_T} floor(T/a_j)
            + #{j not in I_T}  -  2T,

valid exactly when no exponent outside I_T divides T (otherwise the
fixed-point set jumps and the cover is not Morse-Bott).  The grading shift
used by the Morse-Bott spectral sequence is

    shift(T) = mu(T) - (dim Sigma_T - 1) / 2 .

A parity fact: mu(T) = (n+1) - |I_T| (mod 2), hence shift(T) = n - 1
(mod 2) for *every* stratum and cover of a link with n+1 exponents.  All
strata therefore enter the mean Euler characteristic with the same sign
(-1)^{n-1}.  The code computes signs per stratum anyway and treats a parity
violation as an internal bug.  Note the parity of the *shifts* does not by
itself make the first page lacunary: a stratum whose quotient has odd
complex dimension and positive middle rank (e.g. the genus-15 curve
quotient of the (7,7,7) stratum inside (2,7,7,7)) contributes classes at
odd offsets from its shift, and such pages can support differentials.

The mean Euler characteristic is

    chi_m = (1/|mu_P|) * sum_i (-1)^{shift(T_i)} * phi_i * chi^{S^1}(Sigma_i)

summed over strata at their minimal periods, where mu_P is the index of the
principal orbit and phi_i counts how many periods below the principal one
belong to stratum i (the function :func:`phi`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InternalInconsistency,
    NotLacunary,
    NotMorseBottCover,
    PreconditionFailed,
    ZeroPrincipalIndex,
)
from .homology import quotient_betti
from .linkmodel import (
    LinkProfile,
    index_set,
    make_link,
    period_spectrum,
    strata,
)

__all__ = [
    "IndexReport",
    "maslov_index",
    "principal_index",
    "phi",
    "MeanEuler",
    "mean_euler",
    "PageColumn",
    "GradedRanks",
    "e1_page",
    "sh_plus_ranks",
    "mean_euler_from_ranks",
]


def _as_link(link_or_exponents):
    if isinstance(link_or_exponents, LinkProfile):
        return link_or_exponents
    return make_link(link_or_exponents)


@dataclass(frozen=True)
class IndexReport:
    """Robbin-Salamon data of one stratum cover.

    period: the stratum's minimal period T; cover: N (total period N*T);
    maslov: mu of the N-fold traversal; stratum_dim: 2|I_T| - 3;
    shift: mu - (stratum_dim - 1)/2, the spectral-sequence grading shift.
    """

    period: int
    cover: int
    maslov: int
    stratum_dim: int
    shift: int


def _raw_maslov(link, total_period):
    """mu at total period t, labeled by I_t.  Assumes Morse-Bott (checked
    by callers where the period is not automatically its own I-set lcm)."""
    a = link.exponents
    idx = index_set(link, total_period)
    inside = sum(total_period // a[j] for j in idx)
    outside_floor = 0
    outside_count = 0
    for j in range(len(a)):
        if j not in idx:
            outside_floor += total_period // a[j]
            outside_count += 1
    mu = 2 * inside + 2 * outside_floor + outside_count - 2 * total_period
    return mu, idx


def maslov_index(link, period, cover=1):
    """Robbin-Salamon index report for the N-fold cover of a stratum.

    ``period`` must be the minimal period of a stratum (the lcm of its
    exponents); ``cover`` the positive traversal count N.  Raises
    NotMorseBottCover when some exponent outside the stratum divides N*T:
    those covers sit inside a bigger stratum and carry its index instead.

    >>> maslov_index(make_link((2, 3, 4, 16)), 12)
    IndexReport(period=12, cover=1, maslov=3, stratum_dim=3, shift=2)
    """
    link = _as_link(link)
    if cover < 1:
        raise PreconditionFailed(f"cover must be >= 1, got {cover}")
    if period < 1:
        raise PreconditionFailed(f"period must be >= 1, got {period}")
    idx = index_set(link, period)
    if len(idx) < 2:
        raise PreconditionFailed(
            f"{period} is not a stratum period: I_{period} has "
            f"{len(idx)} element(s)"
        )
    min_period = math.lcm(*(link.exponents[j] for j in idx))
    if min_period != period:
        raise PreconditionFailed(
            f"{period} is not a stratum *minimal* period "
            f"(its stratum starts at {min_period})"
        )
    total = cover * period
    for j, aj in enumerate(link.exponents):
        if j not in idx and total % aj == 0:
            raise NotMorseBottCover(
                f"cover {cover} of period {period} has total period {total} "
                f"divisible by exponent a_{j} = {aj} outside the stratum"
            )
    mu, idx_total = _raw_maslov(link, total)
    if idx_total != idx:
        raise InternalInconsistency(
            f"index set changed between period {period} and cover {total}"
        )
    dim = 2 * len(idx) - 3
    return IndexReport(
        period=period,
        cover=cover,
        maslov=mu,
        stratum_dim=dim,
        shift=mu - (dim - 1) // 2,
    )


def principal_index(link):
    """Index mu_P of the principal orbit: 2 * (|w| - d).

    Positive exactly when sum 1/a_j > 1 (the log Fano range), zero on the
    Calabi-Yau boundary, negative below it.  Always even.

    >>> principal_index(make_link((2, 3, 4, 16)))
    14
    """
    link = _as_link(link)
    mu = 2 * (sum(link.weights) - link.degree)
    if mu % 2:
        raise InternalInconsistency(f"principal index {mu} is odd")
    return mu


def phi(period, exclusions, principal_period):
    """Count multiples of ``period`` below ``principal_period`` avoiding all
    ``exclusions``.

        phi(T_i; T_{i+1}, ..., T_k) =
            #{ a >= 1 : a*T_i < T_k, a*T_i not in T_j*N for any j > i }

    with the convention phi(T_k; empty) = 1 for the principal period itself.
    In the mean-Euler formula the exclusions are the strictly larger strata
    minimal periods, so phi counts the spectrum entries that are labeled by
    this stratum rather than a bigger one.

    Implemented by inclusion-exclusion over the lcm lattice (with the
    exclusion list reduced to divisibility-minimal elements and branches
    pruned once the running lcm reaches the principal period), so it stays
    fast when the principal period is large.

    >>> phi(4, [12, 16, 48], 48)
    6
    >>> phi(48, [], 48)
    1
    """
    if period < 1:
        raise PreconditionFailed(f"period must be >= 1, got {period}")
    if principal_period % period:
        raise PreconditionFailed(
            f"{period} does not divide the principal period {principal_period}"
        )
    for e in exclusions:
        if e < 1:
            raise PreconditionFailed(f"exclusion {e} must be >= 1")
    if period == principal_period:
        return 1
    limit = principal_period - 1
    # Join each exclusion against the base period; keep divisibility-minimal
    # representatives below the cap (multiples of a larger join are a subset).
    joins = sorted(
        {
            math.lcm(period, e)
            for e in exclusions
            if math.lcm(period, e) <= limit
        }
    )
    minimal = []
    for j in joins:
        if not any(j % m == 0 for m in minimal):
            minimal.append(j)

    total = limit // period

    def union(start, running, sign):
        acc = 0
        for k in range(start, len(minimal)):
            l = math.lcm(running, minimal[k])
            if l > limit:
                continue
            acc += sign * (limit // l) + union(k + 1, l, -sign)
        return acc

    return total - union(0, 1, 1)


@dataclass(frozen=True)
class MeanEuler:
    """Mean Euler characteristic, as an exact rational."""

    value: Fraction


def _stratum_shift(link, stratum):
    report = maslov_index(link, stratum.min_period)
    n = len(link.exponents) - 1
    if (report.shift - (n - 1)) % 2:
        raise InternalInconsistency(
            f"shift parity violated at period {stratum.min_period} of "
            f"{link.exponents}: shift {report.shift}, n-1 = {n - 1}"
        )
    return report.shift


def mean_euler(link):
    """Mean Euler characteristic of the link's contact structure.

    Sums (-1)^shift * phi * chi^{S^1} over the strata at their minimal
    periods and divides by |mu_P|.  Exact rational arithmetic throughout.
    Raises ZeroPrincipalIndex when mu_P = 0 (the average does not converge
    to a finite period-independent value there).

    >>> mean_euler(make_link((2, 3, 4, 16))).value
    Fraction(25, 14)
    >>> mean_euler(make_link((2, 2, 3, 3))).value
    Fraction(3, 2)
    """
    link = _as_link(link)
    mu_p = principal_index(link)
    if mu_p == 0:
        raise ZeroPrincipalIndex(
            f"principal index of {link.exponents} is zero"
        )
    st = strata(link)
    periods = [s.min_period for s in st]
    numerator = 0
    for i, s in enumerate(st):
        count = phi(s.min_period, periods[i + 1 :], link.degree)
        shift = _stratum_shift(link, s)
        sign = -1 if shift % 2 else 1
        numerator += sign * count * quotient_betti(s.exponents).chi
    return MeanEuler(value=Fraction(numerator, abs(mu_p)))


@dataclass(frozen=True)
class PageColumn:
    """One column of the first page: a stratum traversed with some period."""

    ordinal: int
    period: int
    cover: int
    exponents: tuple
    shift: int
    ranks: tuple


@dataclass(frozen=True)
class GradedRanks:
    """Per-degree ranks of positive equivariant symplectic homology.

    ``ranks`` maps every degree in [k_lo, k_hi] to its rank (zeros included).
    ``period_degree`` is mu_P (degrees repeat with this period across action
    blocks), ``period_action`` the principal period.  ``lacunary`` certifies
    that no two first-page entries with total degree in [k_lo-1, k_hi+1]
    sit at adjacent degrees with the later one in an earlier column -- the
    degeneration criterion; when it holds the ranks are exact, otherwise
    they are upper bounds.  ``columns`` retains the contributing columns.
    """

    k_lo: int
    k_hi: int
    ranks: dict
    period_degree: int
    period_action: int
    lacunary: bool
    columns: tuple = ()

    def to_json_dict(self):
        return {
            "k_lo": self.k_lo,
            "k_hi": self.k_hi,
            "ranks": {str(k): v for k, v in sorted(self.ranks.items())},
            "mu_P": self.period_degree,
            "lacunary": self.lacunary,
        }


def _block0_columns(link):
    """Columns of the first action block (periods T <= principal period).

    Returns (entries, mu_P, principal_period) where each entry is
    (period, stratum, shift, betti_ranks).  Later blocks are translates:
    period + m*T_P carries shift + m*mu_P with the same Betti vector.
    """
    link = _as_link(link)
    spectrum = period_spectrum(link)
    betti_cache = {}
    n = len(link.exponents) - 1
    entries = []
    for t, stratum in spectrum.entries:
        mu, idx = _raw_maslov(link, t)
        if idx != stratum.index_set:
            raise InternalInconsistency(
                f"spectrum label mismatch at period {t}"
            )
        shift = mu - (stratum.dim - 1) // 2
        if (shift - (n - 1)) % 2:
            raise InternalInconsistency(
                f"shift parity violated at period {t} of {link.exponents}"
            )
        betti = betti_cache.get(stratum.index_set)
        if betti is None:
            betti = quotient_betti(stratum.exponents).ranks
            betti_cache[stratum.index_set] = betti
        entries.append((t, stratum, shift, betti))
    return entries, principal_index(link), spectrum.principal_period


def e1_page(link, k_lo, k_hi):
    """First page of the Morse-Bott spectral sequence, in a degree window.

    Column p > 0 is the p-th period in the spectrum (ordered by action);
    the column of a stratum traversed with period T contributes the
    quotient's Betti vector at total degrees shift(T), shift(T)+1, ...,
    shift(T) + 2q.  Degrees below every column (p <= 0) vanish.  The page is
    assembled for one action block and translated by (+T_P, +mu_P) for later
    blocks, which is exact because I_{T+T_P} = I_T.

    Returns :class:`GradedRanks` with per-column detail for every column
    whose degree span meets [k_lo-1, k_hi+1].
    """
    link = _as_link(link)
    if k_hi < k_lo:
        raise PreconditionFailed(
            f"empty degree window [{k_lo}, {k_hi}]"
        )
    entries, mu_p, t_p = _block0_columns(link)
    if mu_p == 0:
        raise ZeroPrincipalIndex(
            f"principal index of {link.exponents} is zero; the page does "
            "not stabilize degree-wise"
        )
    lo_m, hi_m = k_lo - 1, k_hi + 1
    shifts = [e[2] for e in entries]
    spans = [e[2] + len(e[3]) - 1 for e in entries]
    if mu_p > 0:
        block_count = max(0, (hi_m - min(shifts)) // mu_p) + 1
    else:
        block_count = max(0, (lo_m - max(spans)) // mu_p) + 1
    ranks = {k: 0 for k in range(k_lo, k_hi + 1)}
    columns = []
    occupied = []  # (ordinal, degree) pairs with nonzero rank in margins
    width = len(entries)
    for m in range(block_count):
        dshift = m * mu_p
        for i, (t, stratum, shift, betti) in enumerate(entries):
            s = shift + dshift
            if s > hi_m or s + len(betti) - 1 < lo_m:
                continue
            ordinal = m * width + i + 1
            for l, b in enumerate(betti):
                if not b:
                    continue
                k = s + l
                if lo_m <= k <= hi_m:
                    occupied.append((ordinal, k))
                if k_lo <= k <= k_hi:
                    ranks[k] += b
            columns.append(
                PageColumn(
                    ordinal=ordinal,
                    period=t + m * t_p,
                    cover=(t + m * t_p) // stratum.min_period,
                    exponents=stratum.exponents,
                    shift=s,
                    ranks=betti,
                )
            )
    lacunary = True
    min_col = {}
    max_col = {}
    for ordinal, k in occupied:
        min_col[k] = min(min_col.get(k, ordinal), ordinal)
        max_col[k] = max(max_col.get(k, ordinal), ordinal)
    for k in max_col:
        if k - 1 in min_col and min_col[k - 1] < max_col[k]:
            lacunary = False
            break
    return GradedRanks(
        k_lo=k_lo,
        k_hi=k_hi,
        ranks=ranks,
        period_degree=mu_p,
        period_action=t_p,
        lacunary=lacunary,
        columns=tuple(columns),
    )


def sh_plus_ranks(link, k_lo, k_hi):
    """Ranks of positive equivariant symplectic homology in [k_lo, k_hi].

    Exact when the page is lacunary; otherwise the first-page ranks are
    upper bounds for the homology ranks, and the ``lacunary`` flag (the
    window-scoped check) says which situation the caller is in.  Every shift
    has the same parity, but strata whose quotient is odd-complex-dimensional
    with positive middle rank (a curve of positive genus, say) inject
    odd-degree classes, so non-lacunary pages do occur -- (2,7,7,7) is one.

    >>> sh_plus_ranks(make_link((2, 3, 7, 22)), 0, 0).ranks
    {0: 6}
    """
    return e1_page(link, k_lo, k_hi)


def mean_euler_from_ranks(link, strict=False):
    """Mean Euler characteristic recovered from graded ranks alone.

    Uses the (T_P, mu_P)-periodicity of the page: past the degrees touched
    by the first action block, the rank profile repeats with degree period
    mu_P, so the alternating sum over one stable window of width |mu_P|,
    divided by |mu_P|, equals the mean Euler characteristic.  The window is
    placed just above the first block's degree support for mu_P > 0 and just
    below it for mu_P < 0.  Independent of :func:`mean_euler` (no phi
    counts), which makes the agreement of the two a strong cross-check.

    In the lacunary case the first-page ranks are the homology ranks, so
    this is literally the defining average.  When the page is not lacunary
    the first-page ranks are only upper bounds, but the *alternating sum*
    over a stable period is still exact: differentials cancel in pairs of
    adjacent degrees, and by periodicity the pairs straddling the window
    boundary balance.  Pass ``strict=True`` to demand the certified reading
    and get NotLacunary when the stable window fails the check.

    >>> mean_euler_from_ranks(make_link((2, 3, 4, 16))).value
    Fraction(25, 14)
    """
    link = _as_link(link)
    entries, mu_p, _ = _block0_columns(link)
    if mu_p == 0:
        raise ZeroPrincipalIndex(
            f"principal index of {link.exponents} is zero"
        )
    tops = [shift + len(betti) - 1 for (_, _, shift, betti) in entries]
    bottoms = [shift for (_, _, shift, _) in entries]
    width = abs(mu_p)
    if mu_p > 0:
        k_lo = max(tops) + 1
    else:
        k_lo = min(bottoms) - width
    k_hi = k_lo + width - 1
    graded = e1_page(link, k_lo, k_hi)
    if strict and not graded.lacunary:
        raise NotLacunary(
            f"first page of {link.exponents} is not lacunary over the "
            f"stable window [{k_lo}, {k_hi}]; its ranks are upper bounds, "
            "call with strict=False for the (still exact) Euler average"
        )
    alternating = sum(
        (v if k % 2 == 0 else -v) for k, v in graded.ranks.items()
    )
    return MeanEuler(value=Fraction(alternating, width))
