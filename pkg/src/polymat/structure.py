"""Structural families and closed-form coefficients.

Extracts flats, the hyperplane-like flats one below full rank, the
circuit-like subsets of singleton-sum deficiency one, and the two
threshold sequences that bound where the closed-form coefficient
expressions are guaranteed:

  rank-drop threshold   r_k  = min complement size of a subset whose
                               rank is at least k below full rank
  deficiency threshold  r'_k = min size of a subset whose singleton-sum
                               deficiency reaches k

Both coefficient formulas are exact strictly below the respective
second threshold; outside that range they may still be evaluated, but
only with an explicit ``unchecked`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .activity import polynomial_pair
from .core import Polymatroid
from .subsets import bit, complement, elements_of, full_mask, iter_masks


def binom(a: int, b: int) -> int:
    """Binomial coefficient counting b-multisets over a - b + 1 symbols.

    binom(a, 0) is 1 for every a, so rank-zero and deficiency-zero
    instances keep their constant coefficient 1; otherwise the value is
    0 when b < 0 or a < b.
    """
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return comb(a, b)


class FormulaRangeError(ValueError):
    """Coefficient index outside the guaranteed validity range."""


# -- closure and flats -------------------------------------------------


def closure(P: Polymatroid, mask: int) -> int:
    """Largest superset with the same rank (submodularity makes it unique)."""
    base = P.rank(mask)
    out = mask
    for t in range(1, P.n + 1):
        b = bit(t)
        if not mask & b and P.rank(mask | b) == base:
            out |= b
    return out


def is_flat(P: Polymatroid, mask: int) -> bool:
    return closure(P, mask) == mask


def flats(P: Polymatroid) -> tuple[int, ...]:
    """All flats, ascending by mask."""
    return tuple(m for m in iter_masks(P.n) if is_flat(P, m))


def hyperplane_sets(P: Polymatroid) -> dict[int, frozenset[int]]:
    """Flats of rank full_rank - 1 grouped by complement size j (keys 0..n)."""
    target = P.full_rank - 1
    grouped: dict[int, set[int]] = {j: set() for j in range(P.n + 1)}
    for m in iter_masks(P.n):
        if P.rank(m) == target and is_flat(P, m):
            grouped[P.n - m.bit_count()].add(m)
    return {j: frozenset(s) for j, s in grouped.items()}


# -- deficiency and circuits -------------------------------------------


def _singleton_sums(P: Polymatroid) -> list[int]:
    sums = [0] * (1 << P.n)
    for m in range(1, 1 << P.n):
        low = m & -m
        sums[m] = sums[m ^ low] + P.coord_max[low.bit_length() - 1]
    return sums


def deficiency(P: Polymatroid, mask: int) -> int:
    """Sum of singleton ranks minus the rank; zero on singletons, monotone."""
    return sum(P.coord_max[e - 1] for e in elements_of(mask)) - P.rank(mask)


def full_deficiency(P: Polymatroid) -> int:
    return deficiency(P, full_mask(P.n))


def circuit_family(P: Polymatroid) -> frozenset[int]:
    """Subsets of deficiency exactly 1 all of whose proper subsets are tight."""
    sums = _singleton_sums(P)
    values = P.table.values
    out = []
    for m in range(1, 1 << P.n):
        if sums[m] - values[m] != 1:
            continue
        ok = True
        mm = m
        while mm:
            low = mm & -mm
            sub = m ^ low
            if sums[sub] != values[sub]:
                ok = False
                break
            mm ^= low
        if ok:
            out.append(m)
    return frozenset(out)


def circuit_sets(P: Polymatroid) -> dict[int, frozenset[int]]:
    """Circuit-like subsets grouped by size (keys 0..n)."""
    grouped: dict[int, set[int]] = {j: set() for j in range(P.n + 1)}
    for m in circuit_family(P):
        grouped[m.bit_count()].add(m)
    return {j: frozenset(s) for j, s in grouped.items()}


# -- thresholds ---------------------------------------------------------


def rank_drop_thresholds(P: Polymatroid) -> dict[int, int]:
    """r_k for every k where it exists (0 <= k <= full rank).

    Missing drops are genuinely absent: the map simply has no such key.
    """
    best = [P.n + 1] * (P.full_rank + 1)
    for m in iter_masks(P.n):
        drop = P.full_rank - P.rank(m)
        size = P.n - m.bit_count()
        if drop >= 0 and size < best[drop]:
            best[drop] = size
    out: dict[int, int] = {}
    running = P.n + 1
    for k in range(P.full_rank, -1, -1):
        running = min(running, best[k])
        out[k] = running
    return dict(sorted(out.items()))


def deficiency_thresholds(P: Polymatroid) -> dict[int, int]:
    """r'_k for every k where it exists (0 <= k <= full deficiency)."""
    g = full_deficiency(P)
    sums = _singleton_sums(P)
    best = [P.n + 1] * (g + 1)
    for m in iter_masks(P.n):
        d = sums[m] - P.rank(m)
        if 0 <= d <= g and m.bit_count() < best[d]:
            best[d] = m.bit_count()
    out: dict[int, int] = {}
    running = P.n + 1
    for k in range(g, -1, -1):
        running = min(running, best[k])
        out[k] = running
    return dict(sorted(out.items()))


# -- coefficient formulas -----------------------------------------------


def first_exterior_coefficients(P: Polymatroid) -> tuple[int, int]:
    """The constant and linear exterior coefficients in closed form."""
    c1 = sum(
        P.rank(complement(bit(t), P.n)) for t in range(1, P.n + 1)
    ) - (P.n - 1) * P.full_rank
    return 1, c1


def exterior_formula_range(P: Polymatroid) -> int:
    """Number of leading exterior coefficients the formula is guaranteed for."""
    return rank_drop_thresholds(P).get(2, 0)


def interior_formula_range(P: Polymatroid) -> int:
    """Number of leading interior coefficients the formula is guaranteed for."""
    return deficiency_thresholds(P).get(2, 0)


def exterior_coefficient_formula(P: Polymatroid, i: int, *, unchecked: bool = False) -> int:
    """Closed-form exterior coefficient from hyperplane-set counts.

    Exact for 0 <= i < the second rank-drop threshold; beyond that the
    value is only an upper-bound-style estimate and must be requested
    with ``unchecked=True``.
    """
    if i < 0:
        raise FormulaRangeError("coefficient index must be nonnegative")
    if not unchecked and i >= exterior_formula_range(P):
        raise FormulaRangeError(
            f"coefficient {i} is outside the guaranteed range "
            f"0..{exterior_formula_range(P) - 1}; pass unchecked=True to evaluate anyway"
        )
    H = hyperplane_sets(P)
    fr = P.full_rank
    total = binom(fr + i - 1, i)
    for j in range(i + 1):
        total -= binom(fr + i - 1 - j, i - j) * len(H.get(j, ()))
    return total


def interior_coefficient_formula(P: Polymatroid, i: int, *, unchecked: bool = False) -> int:
    """Closed-form interior coefficient from circuit-set counts.

    Exact for 0 <= i < the second deficiency threshold.
    """
    if i < 0:
        raise FormulaRangeError("coefficient index must be nonnegative")
    if not unchecked and i >= interior_formula_range(P):
        raise FormulaRangeError(
            f"coefficient {i} is outside the guaranteed range "
            f"0..{interior_formula_range(P) - 1}; pass unchecked=True to evaluate anyway"
        )
    C = circuit_sets(P)
    g = full_deficiency(P)
    total = binom(g + i - 1, i)
    for j in range(i + 1):
        total -= binom(g + i - 1 - j, i - j) * len(C.get(j, ()))
    return total


# -- unimodality ---------------------------------------------------------


def is_unimodal(seq) -> bool:
    """True when the sequence rises (weakly) and then falls (weakly)."""
    seq = list(seq)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= len(seq)


# -- aggregate views ------------------------------------------------------


@dataclass(frozen=True)
class StructureSummary:
    flats: tuple[int, ...]
    hyperplanes: dict[int, frozenset[int]]
    circuits: dict[int, frozenset[int]]
    rank_drop: dict[int, int]
    deficiency: dict[int, int]
    full_deficiency: int


def structure_summary(P: Polymatroid) -> StructureSummary:
    return StructureSummary(
        flats=flats(P),
        hyperplanes=hyperplane_sets(P),
        circuits=circuit_sets(P),
        rank_drop=rank_drop_thresholds(P),
        deficiency=deficiency_thresholds(P),
        full_deficiency=full_deficiency(P),
    )


@dataclass(frozen=True)
class PrefixEquivalence:
    """Two pairs of equivalent statements about pure-binomial prefixes.

    Exterior: coefficients 0..k are the pure binomials iff every
    complement of a size-k subset still has full rank.  Interior: the
    same with the deficiency-based binomials iff every size-k subset
    has singleton-sum deficiency zero.
    """

    k: int
    exterior_binomial: bool
    exterior_condition: bool
    interior_binomial: bool
    interior_condition: bool

    @property
    def exterior_equivalent(self) -> bool:
        return self.exterior_binomial == self.exterior_condition

    @property
    def interior_equivalent(self) -> bool:
        return self.interior_binomial == self.interior_condition

    @property
    def passed(self) -> bool:
        return self.exterior_equivalent and self.interior_equivalent


def binomial_prefix_check(P: Polymatroid, k: int) -> PrefixEquivalence:
    """Evaluate both prefix equivalences at a given k (0 <= k <= n-1)."""
    if not 0 <= k <= P.n - 1:
        raise ValueError(f"k must satisfy 0 <= k <= {P.n - 1}, got {k}")
    interior, exterior = polynomial_pair(P)
    fr = P.full_rank
    g = full_deficiency(P)
    ext_binomial = all(exterior.coefficient(i) == binom(fr + i - 1, i) for i in range(k + 1))
    int_binomial = all(interior.coefficient(i) == binom(g + i - 1, i) for i in range(k + 1))
    sums = _singleton_sums(P)
    ext_condition = True
    int_condition = True
    for m in iter_masks(P.n):
        if m.bit_count() != k:
            continue
        if P.rank(complement(m, P.n)) != fr:
            ext_condition = False
        if sums[m] != P.rank(m):
            int_condition = False
    return PrefixEquivalence(k, ext_binomial, ext_condition, int_binomial, int_condition)
