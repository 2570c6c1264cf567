"""Hypergraphs, their incidence graphs, and the connectivity-based rank.

A hypergraph is a multiset of nonempty hyperedges over named vertices;
hyperedges keep their input order, which fixes the activity order of
the induced polymatroid.  The rank of a hyperedge subset E' is
|covered vertices| - (components of the incidence graph restricted to
E'), equivalently |V| minus the component count when uncovered
vertices are kept as singletons.  The bases of that polymatroid are
exactly the spanning-tree degree vectors of the incidence graph with
one subtracted per hyperedge, which gives an independent route for
cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Polymatroid, RankTable
from .graphs import Graph, _UnionFind
from .structure import (
    binom,
    binomial_prefix_check,
    circuit_sets,
    deficiency_thresholds,
    full_deficiency,
    hyperplane_sets,
    rank_drop_thresholds,
)
from .subsets import complement, full_mask, iter_masks


class Hypergraph:
    """Multiset of hyperedges over named vertices."""

    def __init__(self, vertices: Sequence[str], hyperedges: Iterable[Iterable[str]]):
        names = tuple(vertices)
        if not names:
            raise ValueError("a hypergraph needs at least one vertex")
        if len(set(names)) != len(names):
            raise ValueError("vertex names must be unique")
        self.vertices = names
        index = {name: k for k, name in enumerate(names)}
        masks = []
        for edge in hyperedges:
            mask = 0
            for name in edge:
                if name not in index:
                    raise ValueError(f"unknown vertex {name!r} in hyperedge")
                mask |= 1 << index[name]
            if mask == 0:
                raise ValueError("hyperedges must be nonempty")
            masks.append(mask)
        if not masks:
            raise ValueError("a hypergraph needs at least one hyperedge")
        self.edge_masks = tuple(masks)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edge_masks)

    def edge_names(self, idx: int) -> tuple[str, ...]:
        """Vertex names of hyperedge idx (1-based), in declaration order."""
        mask = self.edge_masks[idx - 1]
        return tuple(name for k, name in enumerate(self.vertices) if mask >> k & 1)

    def incidence_graph(self) -> Graph:
        """Bipartite incidence graph: vertices first, then one node per hyperedge."""
        nv = self.vertex_count
        edges = []
        for idx, mask in enumerate(self.edge_masks):
            for k in range(nv):
                if mask >> k & 1:
                    edges.append((k + 1, nv + idx + 1))
        return Graph(nv + self.edge_count, edges)

    def restricted_components(self, edge_subset_mask: int) -> int:
        """Components of the incidence graph on the chosen hyperedges.

        The full vertex set stays present, so uncovered vertices count
        as singleton components.
        """
        nv = self.vertex_count
        chosen = [i for i in range(self.edge_count) if edge_subset_mask >> i & 1]
        uf = _UnionFind(nv + len(chosen))
        count = nv + len(chosen)
        for slot, i in enumerate(chosen):
            mask = self.edge_masks[i]
            for k in range(nv):
                if mask >> k & 1 and uf.union(k, nv + slot):
                    count -= 1
        return count

    def edge_subset_rank(self, edge_subset_mask: int) -> int:
        """|V| minus the restricted component count."""
        return self.vertex_count - self.restricted_components(edge_subset_mask)

    def is_connected(self) -> bool:
        return self.restricted_components(full_mask(self.edge_count)) == 1

    def to_polymatroid(self) -> Polymatroid:
        """Polymatroid of the subset rank; requires a connected hypergraph."""
        if not self.is_connected():
            raise ValueError("hypergraph must be connected")
        values = [self.edge_subset_rank(m) for m in iter_masks(self.edge_count)]
        return Polymatroid(RankTable(self.edge_count, values, max_n=self.edge_count))

    def cyclomatic_number(self, edge_subset_mask: int) -> int:
        """Independent cycles of the incidence graph restricted to the subset."""
        bip_edges = sum(
            self.edge_masks[i].bit_count()
            for i in range(self.edge_count)
            if edge_subset_mask >> i & 1
        )
        nodes = self.vertex_count + edge_subset_mask.bit_count()
        return bip_edges - nodes + self.restricted_components(edge_subset_mask)

    def tree_degree_vectors(self) -> frozenset[tuple[int, ...]]:
        """Spanning-tree degrees of the hyperedge nodes, each reduced by one."""
        bip = self.incidence_graph()
        nv = self.vertex_count
        out = set()
        for tree in bip.spanning_tree_masks():
            degrees = [0] * self.edge_count
            for idx, (u, v) in enumerate(bip.edges):
                if tree >> idx & 1:
                    degrees[v - nv - 1] += 1
            out.add(tuple(d - 1 for d in degrees))
        return frozenset(out)

    def girth(self) -> int | None:
        return self.incidence_graph().girth()

    def __repr__(self) -> str:
        return f"Hypergraph(vertices={len(self.vertices)}, hyperedges={self.edge_count})"


# -- connectivity-flavored structure, cross-checked against the
#    polymatroid-level families ------------------------------------------


def two_component_families(H: Hypergraph) -> dict[int, frozenset[int]]:
    """Removal sets splitting the incidence graph into exactly two parts.

    A removal set qualifies when the remaining hyperedges leave two
    components and putting back any single removed hyperedge
    reconnects; grouped by removal-set size.  These are exactly the
    complements of the hyperplane-like flats of the subset rank.
    """
    m = H.edge_count
    grouped: dict[int, set[int]] = {j: set() for j in range(m + 1)}
    for removed in iter_masks(m):
        kept = complement(removed, m)
        if H.restricted_components(kept) != 2:
            continue
        ok = True
        probe = removed
        while probe:
            low = probe & -probe
            if H.restricted_components(kept | low) != 1:
                ok = False
                break
            probe ^= low
        if ok:
            grouped[removed.bit_count()].add(removed)
    return {j: frozenset(s) for j, s in grouped.items()}


def unique_cycle_families(H: Hypergraph) -> dict[int, frozenset[int]]:
    """Hyperedge subsets whose restriction has one cycle through all of them.

    One independent cycle overall, and removing any hyperedge leaves a
    forest, i.e. the cycle alternates through every chosen hyperedge
    (length twice the subset size); grouped by subset size.  These are
    exactly the circuit-like subsets of the subset rank.
    """
    m = H.edge_count
    grouped: dict[int, set[int]] = {j: set() for j in range(m + 1)}
    for chosen in range(1, 1 << m):
        if H.cyclomatic_number(chosen) != 1:
            continue
        probe = chosen
        ok = True
        while probe:
            low = probe & -probe
            if H.cyclomatic_number(chosen ^ low) != 0:
                ok = False
                break
            probe ^= low
        if ok:
            grouped[chosen.bit_count()].add(chosen)
    return {j: frozenset(s) for j, s in grouped.items()}


def split_threshold(H: Hypergraph) -> int | None:
    """Smallest removal set leaving at least three components."""
    best = None
    m = H.edge_count
    for removed in iter_masks(m):
        if H.restricted_components(complement(removed, m)) >= 3:
            size = removed.bit_count()
            if best is None or size < best:
                best = size
    return best


def double_cycle_threshold(H: Hypergraph) -> int | None:
    """Smallest hyperedge subset carrying at least two independent cycles."""
    best = None
    for chosen in iter_masks(H.edge_count):
        if H.cyclomatic_number(chosen) >= 2:
            size = chosen.bit_count()
            if best is None or size < best:
                best = size
    return best


@dataclass(frozen=True)
class GirthPrefixRow:
    k: int
    interior_binomial: bool
    girth_reaches: bool

    @property
    def matches(self) -> bool:
        return self.interior_binomial == self.girth_reaches


@dataclass(frozen=True)
class HypergraphStructureReport:
    """Connectivity-level structure against the polymatroid-level one."""

    split_threshold: int | None
    rank_drop_threshold: int | None
    two_component: dict[int, frozenset[int]]
    hyperplane_complements: dict[int, frozenset[int]]
    unique_cycle: dict[int, frozenset[int]]
    circuits: dict[int, frozenset[int]]
    double_cycle_threshold: int | None
    deficiency_threshold: int | None
    degree_sum_nullity: int
    full_deficiency: int
    girth: int | None
    girth_rows: tuple[GirthPrefixRow, ...]

    @property
    def passed(self) -> bool:
        return (
            self.split_threshold == self.rank_drop_threshold
            and self.two_component == self.hyperplane_complements
            and self.unique_cycle == self.circuits
            and self.double_cycle_threshold == self.deficiency_threshold
            and self.full_deficiency == self.degree_sum_nullity + 1
            and all(row.matches for row in self.girth_rows)
        )


def structure_report(H: Hypergraph) -> HypergraphStructureReport:
    """Compute both routes to each structural quantity and compare.

    The binomial prefix of the interior polynomial must reach exactly
    as far as the incidence-graph girth allows: pure binomials up
    through k if and only if the girth is at least 2k + 2.
    """
    P = H.to_polymatroid()
    m = H.edge_count
    hp = hyperplane_sets(P)
    hyperplane_complements = {
        j: frozenset(complement(h, m) for h in hp[j]) for j in sorted(hp)
    }
    girth = H.girth()
    rows = []
    for k in range(m):
        eq = binomial_prefix_check(P, k)
        rows.append(GirthPrefixRow(k, eq.interior_binomial, girth is None or girth >= 2 * k + 2))
    degree_sum = sum(mask.bit_count() for mask in H.edge_masks)
    return HypergraphStructureReport(
        split_threshold=split_threshold(H),
        rank_drop_threshold=rank_drop_thresholds(P).get(2),
        two_component=two_component_families(H),
        hyperplane_complements=hyperplane_complements,
        unique_cycle=unique_cycle_families(H),
        circuits=circuit_sets(P),
        double_cycle_threshold=double_cycle_threshold(H),
        deficiency_threshold=deficiency_thresholds(P).get(2),
        degree_sum_nullity=degree_sum - m - H.vertex_count,
        full_deficiency=full_deficiency(P),
        girth=girth,
        girth_rows=tuple(rows),
    )


def printed_prefix_binomial(H: Hypergraph, i: int) -> int:
    """The degree-sum form binom(sum deg - |E| - |V| + i - 2, i).

    Kept for reporting next to the deficiency form binom(g + i - 1, i);
    on connected input the full deficiency g equals the degree sum
    minus |E| and |V| plus one, so the printed first argument sits two
    below the deficiency form's, and only the deficiency form matches
    enumeration.
    """
    degree_sum = sum(mask.bit_count() for mask in H.edge_masks)
    return binom(degree_sum - H.edge_count - H.vertex_count + i - 2, i)
