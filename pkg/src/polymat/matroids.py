"""Matroids given by explicit base lists, plus a Tutte-polynomial oracle.

The Tutte polynomial is evaluated by the corank-nullity subset
expansion, which is independent of the activity machinery and is used
to cross-check the interior and exterior polynomials of the induced
polymatroid: the 0/1 indicator vectors of the bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .activity import polynomial_pair
from .core import Polymatroid, RankTable, SizeLimitError
from .polynomials import Polynomial
from .structure import (
    circuit_sets,
    deficiency_thresholds,
    hyperplane_sets,
    rank_drop_thresholds,
)
from .subsets import bit, complement, elements_of, iter_masks, mask_of

DEFAULT_MAX_ELEMENTS = 20


class BaseExchangeError(ValueError):
    """The base list violates the exchange axiom."""

    def __init__(self, first, second, element: int):
        super().__init__(
            f"no exchange for element {element} of base {set(first)} against base {set(second)}"
        )
        self.first = tuple(first)
        self.second = tuple(second)
        self.element = element


class Matroid:
    """Matroid on {1..n} from an explicit list of bases.

    Bases must be nonempty as a collection, equicardinal, and satisfy
    the exchange axiom; all three are checked on construction.
    """

    def __init__(self, n: int, bases: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("ground-set size must be a positive integer")
        self.n = n
        masks = sorted({mask_of(b, n) for b in bases})
        if not masks:
            raise ValueError("a matroid needs at least one base")
        sizes = {m.bit_count() for m in masks}
        if len(sizes) > 1:
            raise ValueError(f"bases must share one size, got sizes {sorted(sizes)}")
        self.rank = sizes.pop()
        self.base_masks = tuple(masks)
        self._check_exchange()

    def _check_exchange(self):
        base_set = set(self.base_masks)
        for a in self.base_masks:
            for b in self.base_masks:
                if a == b:
                    continue
                only_a = a & ~b
                only_b = b & ~a
                while only_a:
                    low = only_a & -only_a
                    stripped = a ^ low
                    if not any(stripped | y in base_set for y in _bits(only_b)):
                        raise BaseExchangeError(
                            elements_of(a), elements_of(b), low.bit_length()
                        )
                    only_a ^= low

    def subset_rank(self, mask: int) -> int:
        """Largest intersection of the subset with a base."""
        return max((mask & b).bit_count() for b in self.base_masks)

    def to_polymatroid(self) -> Polymatroid:
        """Rank table of the matroid rank function; its bases are the 0/1 indicators."""
        values = [self.subset_rank(m) for m in iter_masks(self.n)]
        return Polymatroid(RankTable(self.n, values, max_n=self.n))

    # -- matroid-native structure (kept separate from the polymatroid view
    #    so the two can be compared as independent routes) ----------------

    def closure(self, mask: int) -> int:
        base = self.subset_rank(mask)
        out = mask
        for t in range(1, self.n + 1):
            b = bit(t)
            if not mask & b and self.subset_rank(mask | b) == base:
                out |= b
        return out

    def hyperplanes(self) -> frozenset[int]:
        """Flats of rank one less than the matroid rank."""
        out = []
        for m in iter_masks(self.n):
            if self.subset_rank(m) == self.rank - 1 and self.closure(m) == m:
                out.append(m)
        return frozenset(out)

    def hyperplane_sets(self) -> dict[int, frozenset[int]]:
        grouped: dict[int, set[int]] = {j: set() for j in range(self.n + 1)}
        for m in self.hyperplanes():
            grouped[self.n - m.bit_count()].add(m)
        return {j: frozenset(s) for j, s in grouped.items()}

    def loop_mask(self) -> int:
        """Elements of rank zero, as a mask."""
        out = 0
        for t in range(1, self.n + 1):
            if self.subset_rank(bit(t)) == 0:
                out |= bit(t)
        return out

    def circuits(self) -> frozenset[int]:
        """Minimal dependent subsets."""
        out = []
        for m in iter_masks(self.n):
            if m == 0 or self.subset_rank(m) >= m.bit_count():
                continue
            if all(
                self.subset_rank(m ^ low) == (m ^ low).bit_count() for low in _bits(m)
            ):
                out.append(m)
        return frozenset(out)

    def circuit_sets(self) -> dict[int, frozenset[int]]:
        grouped: dict[int, set[int]] = {j: set() for j in range(self.n + 1)}
        for m in self.circuits():
            grouped[m.bit_count()].add(m)
        return {j: frozenset(s) for j, s in grouped.items()}

    def rank_drop_threshold(self, k: int) -> int | None:
        """Smallest removal set whose complement drops the rank by exactly k."""
        best = None
        for m in iter_masks(self.n):
            if self.subset_rank(complement(m, self.n)) == self.rank - k:
                size = m.bit_count()
                if best is None or size < best:
                    best = size
        return best

    def nullity_threshold(self, k: int, *, without_loops: bool = False) -> int | None:
        """Smallest subset whose nullity (size minus rank) is exactly k.

        With ``without_loops`` only loop-free subsets are scanned;
        that variant matches the singleton-sum deficiency of the
        polymatroid view, where rank-zero elements contribute nothing.
        """
        skip = self.loop_mask() if without_loops else 0
        best = None
        for m in iter_masks(self.n):
            if m & skip:
                continue
            if m.bit_count() - self.subset_rank(m) == k:
                size = m.bit_count()
                if best is None or size < best:
                    best = size
        return best

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.base_masks)})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


@dataclass(frozen=True)
class TuttePolynomial:
    """Two-variable coefficient grid; grid[i][j] is the x^i y^j coefficient."""

    grid: tuple[tuple[int, ...], ...]

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return 0

    def evaluate(self, x: int, y: int) -> int:
        return sum(
            c * x**i * y**j for i, row in enumerate(self.grid) for j, c in enumerate(row)
        )

    def at_x1(self) -> Polynomial:
        """T(1, y) as a one-variable polynomial."""
        cols = max(len(r) for r in self.grid)
        return Polynomial(
            tuple(sum(self.coefficient(i, j) for i in range(len(self.grid))) for j in range(cols)),
            "y",
        )

    def at_y1(self) -> Polynomial:
        """T(x, 1) as a one-variable polynomial."""
        return Polynomial(tuple(sum(row) for row in self.grid), "x")


def tutte_polynomial(M: Matroid, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> TuttePolynomial:
    """Corank-nullity expansion over all 2^n subsets."""
    if M.n > max_elements:
        raise SizeLimitError(f"{M.n} elements exceed the limit {max_elements}")
    d = M.rank
    width = M.n - d
    grid = [[0] * (width + 1) for _ in range(d + 1)]
    for m in iter_masks(M.n):
        r = M.subset_rank(m)
        a = d - r
        b = m.bit_count() - r
        for k in range(a + 1):
            ca = comb(a, k) * (-1) ** (a - k)
            for l in range(b + 1):
                grid[k][l] += ca * comb(b, l) * (-1) ** (b - l)
    return TuttePolynomial(tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class MatroidPolynomialReport:
    """Cross-check of the activity route against the Tutte oracle."""

    interior: Polynomial
    exterior: Polynomial
    tutte: TuttePolynomial
    exterior_matches: bool
    interior_matches: bool
    count_matches: bool
    rank_drop_bridge: bool
    nullity_bridge: bool
    hyperplane_bridge: bool
    circuit_bridge: bool

    @property
    def passed(self) -> bool:
        return (
            self.exterior_matches
            and self.interior_matches
            and self.count_matches
            and self.rank_drop_bridge
            and self.nullity_bridge
            and self.hyperplane_bridge
            and self.circuit_bridge
        )


def check_matroid_polynomials(M: Matroid) -> MatroidPolynomialReport:
    """Activity polynomials against reversed Tutte specializations.

    The exterior polynomial must equal the reversal of T(1, y) padded to
    degree n - rank, the interior polynomial the reversal of T(x, 1)
    padded to degree rank; thresholds and the hyperplane and circuit
    families must agree between the matroid and polymatroid routes.
    """
    P = M.to_polymatroid()
    interior, exterior = polynomial_pair(P)
    T = tutte_polynomial(M)
    exterior_matches = exterior == T.at_x1().reversed_to(M.n - M.rank)
    interior_matches = interior == T.at_y1().reversed_to(M.rank)
    count_matches = T.evaluate(1, 1) == P.basis_count()
    rank_drop_bridge = rank_drop_thresholds(P).get(2) == M.rank_drop_threshold(2)
    nullity_bridge = deficiency_thresholds(P).get(2) == M.nullity_threshold(
        2, without_loops=True
    )
    hyperplane_bridge = hyperplane_sets(P) == M.hyperplane_sets()
    # Loop singletons are matroid circuits but carry no singleton-sum
    # deficiency, so the polymatroid family matches the loop-free circuits.
    loop_free = {
        j: frozenset(c for c in s if not c & M.loop_mask())
        for j, s in M.circuit_sets().items()
    }
    circuit_bridge = circuit_sets(P) == loop_free
    return MatroidPolynomialReport(
        interior,
        exterior,
        T,
        exterior_matches,
        interior_matches,
        count_matches,
        rank_drop_bridge,
        nullity_bridge,
        hyperplane_bridge,
        circuit_bridge,
    )
