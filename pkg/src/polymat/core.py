"""Integer polymatroids presented by explicit rank tables.

A rank table stores one integer per subset of {1..n}, densely indexed
by subset mask.  ``Polymatroid`` checks the three rank axioms on
construction and exposes the lattice-point view: an integer vector a
belongs to the polymatroid when sum(a[I]) <= f(I) for every subset I
and sum(a) = f({1..n}).  Those maximal lattice points are called the
bases here.

Derived constructions (dual, deletion, contraction, coordinate slices,
relabelings) all return fresh validated polymatroids.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .subsets import bit, complement, elements_of, full_mask, iter_masks, mask_of

DEFAULT_MAX_GROUND_SET = 16


class SizeLimitError(ValueError):
    """Input exceeds a desk-scale size guard."""


class ValidationError(ValueError):
    """A rank table violates one of the rank-function axioms."""


class NormalizationError(ValidationError):
    """The empty set must have rank zero."""

    def __init__(self, value: int):
        super().__init__(f"rank of the empty set must be 0, got {value}")
        self.value = value


class MonotonicityError(ValidationError):
    """Rank decreased when an element was added."""

    def __init__(self, smaller, larger, rank_smaller: int, rank_larger: int):
        super().__init__(
            f"rank must not decrease: f({set(smaller) or '{}'}) = {rank_smaller} "
            f"> f({set(larger)}) = {rank_larger}"
        )
        self.smaller = tuple(smaller)
        self.larger = tuple(larger)
        self.rank_smaller = rank_smaller
        self.rank_larger = rank_larger


class SubmodularityError(ValidationError):
    """The local submodular inequality failed on (I, i, j)."""

    def __init__(self, base, i: int, j: int, lhs: int, rhs: int):
        super().__init__(
            f"submodularity fails at I = {set(base) or '{}'} with elements "
            f"i = {i}, j = {j}: f(I+i) + f(I+j) = {lhs} < f(I+i+j) + f(I) = {rhs}"
        )
        self.base = tuple(base)
        self.i = i
        self.j = j


class RankTable:
    """Total map from subsets of {1..n} to integers, stored densely by mask."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Iterable[int], *, max_n: int = DEFAULT_MAX_GROUND_SET):
        if n < 1:
            raise ValueError("ground-set size must be a positive integer")
        if n > max_n:
            raise SizeLimitError(f"ground-set size {n} exceeds the limit {max_n}")
        vals = tuple(values)
        if len(vals) != 1 << n:
            raise ValueError(f"need {1 << n} rank values for n = {n}, got {len(vals)}")
        for v in vals:
            if not isinstance(v, int):
                raise TypeError(f"rank values must be integers, got {v!r}")
        self.n = n
        self.values = vals

    def rank(self, mask: int) -> int:
        return self.values[mask]

    def rank_of(self, elements: Iterable[int]) -> int:
        """Rank of a subset given as an element collection."""
        return self.values[mask_of(elements, self.n)]

    @classmethod
    def from_function(
        cls,
        n: int,
        fn: Callable[[tuple[int, ...]], int],
        *,
        max_n: int = DEFAULT_MAX_GROUND_SET,
    ) -> "RankTable":
        """Tabulate ``fn`` over all subsets; ``fn`` receives element tuples."""
        return cls(n, [fn(elements_of(m)) for m in iter_masks(n)], max_n=max_n)

    @classmethod
    def from_subsets(
        cls,
        n: int,
        entries: dict,
        *,
        max_n: int = DEFAULT_MAX_GROUND_SET,
    ) -> "RankTable":
        """Build from a subset -> rank mapping that must cover every subset.

        Keys are element collections (tuples, frozensets, ...).
        """
        values: list = [None] * (1 << n)
        for key, value in entries.items():
            m = mask_of(key, n)
            if values[m] is not None:
                raise ValueError(f"duplicate rank entry for subset {set(key) or '{}'}")
            values[m] = value
        for m, v in enumerate(values):
            if v is None:
                raise ValueError(f"missing rank entry for subset {set(elements_of(m)) or '{}'}")
        return cls(n, values, max_n=max_n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.n, self.values))

    def __repr__(self) -> str:
        return f"RankTable(n={self.n}, full={self.values[-1]})"


def _check_axioms(table: RankTable) -> None:
    values = table.values
    n = table.n
    if values[0] != 0:
        raise NormalizationError(values[0])
    for m in iter_masks(n):
        vm = values[m]
        for t in range(n):
            b = 1 << t
            if m & b:
                continue
            if vm > values[m | b]:
                raise MonotonicityError(elements_of(m), elements_of(m | b), vm, values[m | b])
    for m in iter_masks(n):
        vm = values[m]
        for i in range(n):
            bi = 1 << i
            if m & bi:
                continue
            for j in range(i + 1, n):
                bj = 1 << j
                if m & bj:
                    continue
                lhs = values[m | bi] + values[m | bj]
                rhs = values[m | bi | bj] + vm
                if lhs < rhs:
                    raise SubmodularityError(elements_of(m), i + 1, j + 1, lhs, rhs)


def _inject(mask: int, t: int) -> int:
    # Reinsert a zero bit at position t-1, mapping masks over a ground
    # set with element t removed back into the original indexing.
    b = 1 << (t - 1)
    low = mask & (b - 1)
    return low | ((mask ^ low) << 1)


class Polymatroid:
    """A validated rank table together with its lattice-point bases.

    Construction runs the axiom checks (normalization, monotonicity,
    local submodularity) and raises the matching ``ValidationError``
    subclass, carrying the first witnessing subsets in scan order.
    """

    def __init__(self, table: RankTable):
        _check_axioms(table)
        self.table = table
        self.n = table.n
        full = full_mask(self.n)
        self.full_rank = table.values[full]
        self.coord_min = tuple(
            self.full_rank - table.values[complement(bit(t), self.n)] for t in range(1, self.n + 1)
        )
        self.coord_max = tuple(table.values[bit(t)] for t in range(1, self.n + 1))
        self._bases: tuple[tuple[int, ...], ...] | None = None

    # -- rank access ---------------------------------------------------

    def rank(self, mask: int) -> int:
        return self.table.values[mask]

    def rank_of(self, elements: Iterable[int]) -> int:
        return self.table.rank_of(elements)

    def coordinate_range(self, t: int) -> range:
        """Values coordinate t takes over the bases (inclusive bounds)."""
        self._check_element(t)
        return range(self.coord_min[t - 1], self.coord_max[t - 1] + 1)

    def _check_element(self, t: int) -> None:
        if not 1 <= t <= self.n:
            raise ValueError(f"element {t} outside ground set 1..{self.n}")

    # -- lattice points ------------------------------------------------

    def is_member(self, vector: Sequence[int]) -> bool:
        """True when ``vector`` is a basis (a maximal lattice point)."""
        if len(vector) != self.n:
            raise ValueError(f"vector length {len(vector)} != ground-set size {self.n}")
        if any(v < 0 for v in vector):
            return False
        if sum(vector) != self.full_rank:
            return False
        values = self.table.values
        sums = [0] * (1 << self.n)
        for m in range(1, 1 << self.n):
            low = m & -m
            s = sums[m ^ low] + vector[low.bit_length() - 1]
            if s > values[m]:
                return False
            sums[m] = s
        return True

    def bases(self) -> tuple[tuple[int, ...], ...]:
        """Every basis, in lexicographic vector order."""
        if self._bases is None:
            self._bases = tuple(self._enumerate())
        return self._bases

    def _enumerate(self):
        n = self.n
        values = self.table.values
        prefix = [values[(1 << t) - 1] for t in range(n + 1)]
        suffix_max = [0] * (n + 1)
        for t in range(n - 1, -1, -1):
            suffix_max[t] = suffix_max[t + 1] + self.coord_max[t]
        out: list[tuple[int, ...]] = []
        vec = [0] * n

        # Depth-first over coordinates.  Prefix sums are bounded by the
        # rank of {1..t}; the remaining total must stay reachable under
        # the per-coordinate caps.  Leaves get the full membership test.
        def extend(t: int, total: int) -> None:
            if t == n:
                if self.is_member(vec):
                    out.append(tuple(vec))
                return
            need = self.full_rank - total
            lo = max(self.coord_min[t], need - suffix_max[t + 1], 0)
            hi = min(self.coord_max[t], prefix[t + 1] - total, need)
            for v in range(lo, hi + 1):
                vec[t] = v
                extend(t + 1, total + v)
            vec[t] = 0

        extend(0, 0)
        return out

    def basis_count(self) -> int:
        return len(self.bases())

    def greedy_basis(self) -> tuple[int, ...]:
        """Chain increments f({1..t}) - f({1..t-1}); always a basis."""
        values = self.table.values
        return tuple(
            values[(1 << t) - 1] - values[(1 << (t - 1)) - 1] for t in range(1, self.n + 1)
        )

    # -- derived polymatroids -------------------------------------------

    def dual(self) -> Polymatroid:
        """Rank table f*(I) = f([n] \\ I) - f([n]) + sum of singleton ranks over I."""
        n = self.n
        values = self.table.values
        singles = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            singles[m] = singles[m ^ low] + self.coord_max[low.bit_length() - 1]
        dual_values = [
            values[complement(m, n)] - self.full_rank + singles[m] for m in iter_masks(n)
        ]
        return Polymatroid(RankTable(n, dual_values, max_n=n))

    def grounded(self) -> Polymatroid:
        """The translate of this polymatroid whose coordinate minima are zero.

        Subtracts each element's minimum basis coordinate from the rank
        of every subset containing it; the bases shift down by the
        minima and the polynomials are unchanged.
        """
        if not any(self.coord_min):
            return self
        n = self.n
        shifts = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            shifts[m] = shifts[m ^ low] + self.coord_min[low.bit_length() - 1]
        values = [self.table.values[m] - shifts[m] for m in iter_masks(n)]
        return Polymatroid(RankTable(n, values, max_n=n))

    def delete(self, t: int) -> Polymatroid:
        """Drop element t; remaining elements are renumbered downward."""
        self._check_element(t)
        if self.n == 1:
            raise ValueError("cannot delete from a one-element ground set")
        values = self.table.values
        vals = [values[_inject(m, t)] for m in iter_masks(self.n - 1)]
        return Polymatroid(RankTable(self.n - 1, vals, max_n=self.n))

    def contract(self, t: int) -> Polymatroid:
        """Contract element t: f(I + t) - f({t}) on the remaining elements."""
        self._check_element(t)
        if self.n == 1:
            raise ValueError("cannot contract a one-element ground set")
        values = self.table.values
        bt = bit(t)
        ft = values[bt]
        vals = [values[_inject(m, t) | bt] - ft for m in iter_masks(self.n - 1)]
        return Polymatroid(RankTable(self.n - 1, vals, max_n=self.n))

    def slice_at(self, t: int, j: int) -> Polymatroid:
        """Polymatroid of bases with coordinate t pinned to j, t projected out.

        Its rank function is min(f(I), f(I + t) - j).  The extreme pins
        coincide with ``delete`` (smallest j) and ``contract`` (largest j).
        """
        self._check_element(t)
        if j not in self.coordinate_range(t):
            raise ValueError(
                f"slice value {j} outside coordinate range "
                f"{self.coord_min[t - 1]}..{self.coord_max[t - 1]} of element {t}"
            )
        if self.n == 1:
            raise ValueError("cannot slice a one-element ground set")
        values = self.table.values
        bt = bit(t)
        vals = []
        for m in iter_masks(self.n - 1):
            im = _inject(m, t)
            vals.append(min(values[im], values[im | bt] - j))
        return Polymatroid(RankTable(self.n - 1, vals, max_n=self.n))

    def relabel(self, sigma: Sequence[int]) -> Polymatroid:
        """Apply a permutation: element i is renamed sigma[i-1]."""
        n = self.n
        if sorted(sigma) != list(range(1, n + 1)):
            raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")
        values = self.table.values
        new_values = [0] * (1 << n)
        for m in iter_masks(n):
            nm = 0
            for t in range(n):
                if m >> t & 1:
                    nm |= bit(sigma[t])
            new_values[nm] = values[m]
        return Polymatroid(RankTable(n, new_values, max_n=n))

    # -- misc ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polymatroid):
            return NotImplemented
        return self.table == other.table

    def __repr__(self) -> str:
        return f"Polymatroid(n={self.n}, full_rank={self.full_rank})"


def translate(points: Iterable[Sequence[int]], shift: Sequence[int]) -> frozenset[tuple[int, ...]]:
    """Shift a set of integer vectors by ``shift`` componentwise."""
    shift = tuple(shift)
    out = set()
    for p in points:
        if len(p) != len(shift):
            raise ValueError("shift length does not match vector length")
        out.add(tuple(a + c for a, c in zip(p, shift)))
    return frozenset(out)


def negate(points: Iterable[Sequence[int]]) -> frozenset[tuple[int, ...]]:
    """Reflect a set of integer vectors through the origin."""
    return frozenset(tuple(-a for a in p) for p in points)
