"""Homology of Brieskorn-Pham links and their S^1-quotients, and the
classical classifiers built on it (Brieskorn graph theorem, Smale's dim-5
classification, Milnor-plumbing signatures in dim 7).

Rational homology of a (2n-1)-dimensional link is concentrated in degrees
0, n-1, n, 2n-1; the only interesting rank is the middle one, computed here
by an inclusion-exclusion formula over subsets of the exponents (equivalently
by counting monodromy eigenvalue-one lattice points, which the tests use as
an independent oracle).  The S^1-quotient (a weighted projective complete
intersection) has Betti numbers obtained from the middle rank via the Gysin
sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    DimensionTooLow,
    InternalInconsistency,
    NotDim7,
    PreconditionFailed,
)
from .linkmodel import make_link

__all__ = [
    "middle_betti",
    "QuotientBetti",
    "quotient_betti",
    "chi_s1",
    "is_rational_homology_sphere",
    "is_homotopy_sphere",
    "Dim5Kind",
    "Dim5Type",
    "diffeo_type_dim5",
    "milnor_signature_dim7",
    "exotic_class_dim7",
]


def middle_betti(exponents):
    """Rank of the middle homology of the link, by inclusion-exclusion.

    For exponents (a_0, ..., a_n) this is

        sum over subsets J of {0..n} of (-1)^{n+1-|J|} prod(a_J) / lcm(a_J)

    (empty subset contributes (-1)^{n+1}).  The value equals the number of
    monodromy eigenvalue-one lattice points
    #{ x : 1 <= x_j < a_j, sum x_j / a_j integral }, which is manifestly
    non-negative and permutation invariant.  Randell's and Milnor-Orlik's
    formulas for the characteristic polynomial of the monodromy reduce to
    this count over the rationals.

    >>> middle_betti((2, 2, 3, 3))
    2
    >>> middle_betti((2, 4))
    1
    """
    a = make_link(exponents).exponents
    n1 = len(a)
    total = 0
    for size in range(n1 + 1):
        sign = -1 if (n1 - size) % 2 else 1
        for subset in combinations(a, size):
            if subset:
                p = math.prod(subset)
                l = math.lcm(*subset)
            else:
                p = l = 1
            if p % l:
                raise InternalInconsistency(
                    f"lcm {l} does not divide product {p}"
                )
            total += sign * (p // l)
    if total < 0:
        raise InternalInconsistency(
            f"middle Betti number came out negative ({total}) for {a}"
        )
    return total


@dataclass(frozen=True)
class QuotientBetti:
    """Betti numbers b_0..b_{2q} of the S^1-quotient, plus their
    alternating sum ``chi`` (the Euler characteristic)."""

    ranks: tuple
    chi: int


def quotient_betti(exponents):
    """Betti numbers of the quotient orbifold L(a)/S^1 over the rationals.

    With m+1 exponents the quotient has complex dimension q = m-1.  The Gysin
    sequence of S^1 -> L -> L/S^1 gives b_i = 1 for even i, 0 for odd i,
    except in the middle degree q where the middle homology of the link
    enters: b_q = 1 + kappa for q even, b_q = kappa for q odd (kappa the
    middle Betti number of the link).

    For q = 0 (two exponents) the quotient is a finite set of
    gcd(a_0, a_1) points, so ranks = (gcd,).

    >>> quotient_betti((2, 4, 16))
    QuotientBetti(ranks=(1, 2, 1), chi=0)
    >>> quotient_betti((2, 2, 3, 3)).ranks
    (1, 0, 3, 0, 1)
    """
    a = make_link(exponents).exponents
    q = len(a) - 2
    kappa = middle_betti(a)
    if q == 0:
        g = math.gcd(*a)
        if kappa != g - 1:
            raise InternalInconsistency(
                f"two-exponent middle rank {kappa} != gcd-1 = {g - 1}"
            )
        return QuotientBetti(ranks=(g,), chi=g)
    ranks = [1 if i % 2 == 0 else 0 for i in range(2 * q + 1)]
    ranks[q] = (1 + kappa) if q % 2 == 0 else kappa
    chi = sum(r if i % 2 == 0 else -r for i, r in enumerate(ranks))
    if ranks[0] != 1 or ranks[2 * q] != 1:
        raise InternalInconsistency("quotient must have b_0 = b_top = 1")
    return QuotientBetti(ranks=tuple(ranks), chi=chi)


def chi_s1(exponents):
    """Euler characteristic of the S^1-quotient (alternating Betti sum).

    >>> chi_s1((2, 3, 4, 16))
    3
    >>> chi_s1((2, 4, 16))
    0
    """
    return quotient_betti(exponents).chi


def _components(exponents):
    """Connected components of the gcd graph, as lists of indices."""
    n1 = len(exponents)
    parent = list(range(n1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(n1), 2):
        if math.gcd(exponents[i], exponents[j]) > 1:
            parent[find(i)] = find(j)
    comps = {}
    for i in range(n1):
        comps.setdefault(find(i), []).append(i)
    return list(comps.values())


def _has_odd_two_component(exponents, comps):
    """A component with >= 3 vertices, odd order, pairwise gcd exactly 2."""
    for comp in comps:
        if len(comp) >= 3 and len(comp) % 2 == 1:
            if all(
                math.gcd(exponents[i], exponents[j]) == 2
                for i, j in combinations(comp, 2)
            ):
                return True
    return False


def _require_dim5_plus(exponents, what):
    if len(exponents) < 4:
        raise DimensionTooLow(
            f"{what} applies to links of dimension >= 5 "
            f"(at least four exponents); got {len(exponents)}"
        )


def is_rational_homology_sphere(exponents):
    """Brieskorn graph criterion for rational homology spheres.

    Build the graph on the exponents with an edge whenever gcd > 1.  The link
    is a rational homology sphere iff the graph has at least one isolated
    vertex, or some connected component with an odd number (>= 3) of
    vertices whose pairwise gcds all equal 2.

    >>> is_rational_homology_sphere((2, 2, 3, 3))
    False
    >>> is_rational_homology_sphere((2, 3, 3, 9))
    True
    """
    a = make_link(exponents).exponents
    _require_dim5_plus(a, "the rational-homology-sphere criterion")
    comps = _components(a)
    if any(len(c) == 1 for c in comps):
        return True
    return _has_odd_two_component(a, comps)


def is_homotopy_sphere(exponents):
    """Brieskorn graph criterion for homotopy spheres.

    True iff the gcd graph has at least two isolated vertices, or exactly
    one isolated vertex together with a connected component of odd order
    >= 3 whose pairwise gcds all equal 2.

    >>> is_homotopy_sphere((2, 3, 5, 7))
    True
    >>> is_homotopy_sphere((2, 2, 2, 3))
    True
    >>> is_homotopy_sphere((2, 2, 3, 3))
    False
    """
    a = make_link(exponents).exponents
    _require_dim5_plus(a, "the homotopy-sphere criterion")
    comps = _components(a)
    isolated = sum(1 for c in comps if len(c) == 1)
    if isolated >= 2:
        return True
    if isolated == 1:
        return _has_odd_two_component(a, comps)
    return False


class Dim5Kind(Enum):
    SPHERE = "Sphere5"
    CONNECTED_SUM = "ConnectedSumS2xS3"
    RATIONAL_HOMOLOGY_SPHERE = "RationalHomologySphere"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class Dim5Type:
    """Diffeomorphism type of a 5-dimensional link, as far as recognized.

    ``kind`` says which branch applied; ``middle_rank`` is always the middle
    Betti number.  ``count`` is the number of S^2 x S^3 summands for the
    connected-sum branch; ``name`` is the rational-homology-sphere family
    label (M2, M3, M5, 2M3, 4M2) when one of the recognized residue families
    matched.
    """

    kind: Dim5Kind
    middle_rank: int
    count: int | None = None
    name: str | None = None

    def __str__(self):
        if self.kind is Dim5Kind.SPHERE:
            return "Sphere5"
        if self.kind is Dim5Kind.CONNECTED_SUM:
            return f"ConnectedSumS2xS3({self.count})"
        if self.kind is Dim5Kind.RATIONAL_HOMOLOGY_SPHERE:
            return f"RationalHomologySphere({self.name})"
        return f"Unclassified(middle_rank={self.middle_rank})"


def _rhs_family_name(sorted_exponents):
    """Residue-class family of Smale-Barden manifolds, if recognized.

    The recognized families (m >= smallest member, k >= 0):
      M2  = L(2,3,3,3+6k)
      M3  = L(2,3,4,4+12k) and L(2,3,4,8+12k)
      M5  = L(2,3,5,m), m = 6, 12, 18, 24 (mod 30)
      2M3 = L(2,3,5,m), m = 10, 20 (mod 30)
      4M2 = L(2,3,5,15+30k)
    """
    head, m = sorted_exponents[:3], sorted_exponents[3]
    if head == (2, 3, 3) and m % 6 == 3:
        return "M2"
    if head == (2, 3, 4) and m % 12 in (4, 8):
        return "M3"
    if head == (2, 3, 5):
        r = m % 30
        if r in (6, 12, 18, 24):
            return "M5"
        if r in (10, 20):
            return "2M3"
        if r == 15:
            return "4M2"
    return None


def diffeo_type_dim5(exponents):
    """Classify a 5-dimensional link up to diffeomorphism where possible.

    Branches, in order: homotopy sphere (Smale: the standard S^5);
    L(2,2,p,q) up to order, a connected sum of gcd(p,q)-1 copies of
    S^2 x S^3; the recognized rational-homology-sphere residue families;
    otherwise Unclassified carrying the middle rank.

    >>> str(diffeo_type_dim5((2, 2, 3, 3)))
    'ConnectedSumS2xS3(2)'
    >>> str(diffeo_type_dim5((2, 3, 4, 16)))
    'RationalHomologySphere(M3)'
    >>> str(diffeo_type_dim5((2, 3, 5, 31)))
    'Sphere5'
    """
    a = make_link(exponents).exponents
    if len(a) != 4:
        raise DimensionMismatch(
            f"dim-5 classification needs four exponents, got {len(a)}"
        )
    kappa = middle_betti(a)
    srt = tuple(sorted(a))
    if is_homotopy_sphere(a):
        if kappa != 0:
            raise InternalInconsistency(
                f"homotopy sphere {a} has middle rank {kappa}"
            )
        return Dim5Type(kind=Dim5Kind.SPHERE, middle_rank=0)
    if srt[0] == 2 and srt[1] == 2:
        g = math.gcd(srt[2], srt[3])
        if kappa != g - 1:
            raise InternalInconsistency(
                f"L(2,2,p,q) middle rank {kappa} != gcd-1 = {g - 1}"
            )
        return Dim5Type(
            kind=Dim5Kind.CONNECTED_SUM, middle_rank=kappa, count=g - 1
        )
    name = _rhs_family_name(srt)
    if name is not None:
        if not is_rational_homology_sphere(a) or kappa != 0:
            raise InternalInconsistency(
                f"family {name} member {a} is not a rational homology sphere"
            )
        return Dim5Type(
            kind=Dim5Kind.RATIONAL_HOMOLOGY_SPHERE, middle_rank=0, name=name
        )
    return Dim5Type(kind=Dim5Kind.UNCLASSIFIED, middle_rank=kappa)


def milnor_signature_dim7(exponents, budget=10**9):
    """Signature of the Milnor fibre intersection form for a 7-dim link.

    Brieskorn's count over the open lattice box 0 < x_j < a_j:

        sigma = #{ x : sum x_j/a_j mod 2 in (0,1) }
              - #{ x : sum x_j/a_j mod 2 in (1,2) }

    (boundary points, i.e. integral or odd-integral sums, contribute zero;
    they are exactly the monodromy eigenvalue-one points).  The box is
    iterated directly, so the product of the exponents is capped by
    ``budget`` (default 10^9 lattice points); larger requests raise
    BudgetExceeded rather than silently running for hours.

    >>> milnor_signature_dim7((2, 2, 2, 3, 5))
    8
    >>> milnor_signature_dim7((2, 2, 2, 2, 2))
    1
    """
    a = make_link(exponents).exponents
    if len(a) != 5:
        raise NotDim7(
            f"signature is computed for 7-dimensional links "
            f"(five exponents); got {len(a)}"
        )
    box = math.prod(a)
    if box > budget:
        raise BudgetExceeded(
            f"lattice box {box} exceeds budget {budget}"
        )
    d = math.lcm(*a)
    twod = 2 * d
    # per-axis contributions x * (d / a_j), reduced mod 2d
    axes = [
        [(x * (d // aj)) % twod for x in range(1, aj)]
        for aj in a
    ]
    sigma = 0
    for parts in product(*axes):
        r = sum(parts) % twod
        if 0 < r < d:
            sigma += 1
        elif r > d:
            sigma -= 1
    return sigma


def exotic_class_dim7(exponents, budget=10**9):
    """Class of a 7-dimensional homotopy-sphere link in bP_8 = Z/28.

    The group of homotopy 7-spheres bounding parallelizable manifolds is
    cyclic of order 28, detected by one eighth of the signature of a bounding
    parallelizable manifold (the Milnor fibre here).  Requires the link to be
    a homotopy sphere; its signature is then divisible by 8.

    >>> exotic_class_dim7((2, 2, 2, 3, 5))
    1
    """
    a = make_link(exponents).exponents
    if len(a) != 5:
        raise NotDim7(
            f"exotic classes live in dim 7 (five exponents); got {len(a)}"
        )
    if not is_homotopy_sphere(a):
        raise PreconditionFailed(
            f"{a} is not a homotopy sphere; bP_8 class undefined"
        )
    sigma = milnor_signature_dim7(a, budget=budget)
    if sigma % 8:
        raise InternalInconsistency(
            f"homotopy-sphere signature {sigma} not divisible by 8"
        )
    return (sigma // 8) % 28
