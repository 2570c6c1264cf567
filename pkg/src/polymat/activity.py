"""Internal and external activity of bases; interior and exterior polynomials.

For a basis a, index i is internally active when no transfer
a - e_i + e_j with j < i stays a basis, and externally active when no
transfer a + e_i - e_j with j < i does.  Index 1 is active vacuously on
both counts.  The interior polynomial counts bases by the number of
internally inactive indices, the exterior polynomial by externally
inactive ones; both therefore evaluate to the number of bases at 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Polymatroid
from .polynomials import Polynomial


@dataclass(frozen=True)
class ActivityReport:
    basis: tuple[int, ...]
    internal: frozenset[int]
    external: frozenset[int]


def _active_sets(n, basis, member):
    internal = {1}
    external = {1}
    for i in range(2, n + 1):
        int_active = True
        ext_active = True
        for j in range(1, i):
            probe = list(basis)
            probe[i - 1] -= 1
            probe[j - 1] += 1
            if int_active and member(probe):
                int_active = False
            probe[i - 1] += 2
            probe[j - 1] -= 2
            if ext_active and member(probe):
                ext_active = False
            if not int_active and not ext_active:
                break
        if int_active:
            internal.add(i)
        if ext_active:
            external.add(i)
    return frozenset(internal), frozenset(external)


def activity(P: Polymatroid, basis: Sequence[int]) -> ActivityReport:
    """Internally and externally active index sets of one basis."""
    vec = tuple(basis)
    if not P.is_member(vec):
        raise ValueError(f"{vec} is not a basis of {P!r}")
    internal, external = _active_sets(P.n, vec, P.is_member)
    return ActivityReport(vec, internal, external)


def _distribution(P: Polymatroid):
    interior = [0] * (P.n + 1)
    exterior = [0] * (P.n + 1)
    for basis in P.bases():
        internal, external = _active_sets(P.n, basis, P.is_member)
        interior[P.n - len(internal)] += 1
        exterior[P.n - len(external)] += 1
    return interior, exterior


def polynomial_pair(P: Polymatroid) -> tuple[Polynomial, Polynomial]:
    """(interior, exterior) computed in one sweep over the bases."""
    interior, exterior = _distribution(P)
    return Polynomial(tuple(interior), "x"), Polynomial(tuple(exterior), "y")


def interior_polynomial(P: Polymatroid) -> Polynomial:
    return polynomial_pair(P)[0]


def exterior_polynomial(P: Polymatroid) -> Polynomial:
    return polynomial_pair(P)[1]


def exterior_by_slices(P: Polymatroid, element: int | None = None) -> Polynomial:
    """Exterior polynomial through the coordinate-slice recursion.

    X(P) = X(P contract t) + y * sum of X over the remaining slices of
    coordinate t.  A second route to the same polynomial as
    ``exterior_polynomial``; the recursion bottoms out at one element,
    where the polynomial is 1.
    """
    if element is None:
        element = P.n
    P._check_element(element)
    if P.n == 1:
        return Polynomial((1,), "y")
    t = element
    total = exterior_by_slices(P.contract(t))
    for j in range(P.coord_min[t - 1], P.coord_max[t - 1]):
        total = total + exterior_by_slices(P.slice_at(t, j)).shifted(1)
    return Polynomial(total.coeffs, "y")


def interior_by_slices(P: Polymatroid, element: int | None = None) -> Polynomial:
    """Interior polynomial via the slice recursion applied to the dual."""
    return Polynomial(exterior_by_slices(P.dual(), element).coeffs, "x")


def point_set_polynomials(
    points: Iterable[Sequence[int]], n: int
) -> tuple[Polynomial, Polynomial]:
    """(interior, exterior) of an explicit finite basis set.

    Membership is decided by set lookup, so translates of a polymatroid
    basis set, including ones with negative coordinates, work directly.
    """
    pts = frozenset(tuple(p) for p in points)
    if not pts:
        raise ValueError("empty point set")
    for p in pts:
        if len(p) != n:
            raise ValueError(f"vector length {len(p)} != ground-set size {n}")
    member = lambda v: tuple(v) in pts
    interior = [0] * (n + 1)
    exterior = [0] * (n + 1)
    for p in pts:
        internal, external = _active_sets(n, p, member)
        interior[n - len(internal)] += 1
        exterior[n - len(external)] += 1
    return Polynomial(tuple(interior), "x"), Polynomial(tuple(exterior), "y")


@dataclass(frozen=True)
class DualityReport:
    interior: Polynomial
    exterior: Polynomial
    dual_interior: Polynomial
    dual_exterior: Polynomial

    @property
    def passed(self) -> bool:
        return self.interior == self.dual_exterior and self.exterior == self.dual_interior


def check_duality(P: Polymatroid) -> DualityReport:
    """Interior and exterior swap under dualization; report both pairs."""
    interior, exterior = polynomial_pair(P)
    dual_interior, dual_exterior = polynomial_pair(P.dual())
    return DualityReport(interior, exterior, dual_interior, dual_exterior)


@dataclass(frozen=True)
class InvarianceReport:
    permutation: tuple[int, ...]
    interior: Polynomial
    exterior: Polynomial
    relabeled_interior: Polynomial
    relabeled_exterior: Polynomial

    @property
    def passed(self) -> bool:
        return (
            self.interior == self.relabeled_interior
            and self.exterior == self.relabeled_exterior
        )


def check_permutation_invariance(P: Polymatroid, sigma: Sequence[int]) -> InvarianceReport:
    """Both polynomials are unchanged by relabeling the ground set."""
    interior, exterior = polynomial_pair(P)
    relabeled_interior, relabeled_exterior = polynomial_pair(P.relabel(sigma))
    return InvarianceReport(tuple(sigma), interior, exterior, relabeled_interior, relabeled_exterior)
