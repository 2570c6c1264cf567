"""Multigraphs with indexed edges.

Edges keep their input order; edge i of the graph is element i of the
cycle matroid, so the activity order on the matroid side is the edge
numbering.  Bonds (minimal edge cuts) are found by scanning vertex
bipartitions with connected sides, which characterizes them in a
connected graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .matroids import Matroid, tutte_polynomial
from .polynomials import Polynomial
from .structure import binom, rank_drop_thresholds


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True

    def copy(self) -> "_UnionFind":
        dup = _UnionFind(0)
        dup.parent = list(self.parent)
        return dup


class Graph:
    """Undirected multigraph on vertices 1..vertex_count with indexed edges."""

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]]):
        if vertex_count < 1:
            raise ValueError("vertex count must be a positive integer")
        self.vertex_count = vertex_count
        edge_list = []
        for u, v in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{vertex_count}")
            edge_list.append((u, v))
        self.edges = tuple(edge_list)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def component_count(self, edge_mask: int | None = None) -> int:
        """Components over the full vertex set using the selected edges."""
        if edge_mask is None:
            edge_mask = (1 << self.edge_count) - 1
        uf = _UnionFind(self.vertex_count + 1)
        count = self.vertex_count
        for idx, (u, v) in enumerate(self.edges):
            if edge_mask >> idx & 1 and uf.union(u, v):
                count -= 1
        return count

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def subset_rank(self, edge_mask: int) -> int:
        """Cycle-matroid rank: vertices minus components."""
        return self.vertex_count - self.component_count(edge_mask)

    def spanning_tree_masks(self) -> tuple[int, ...]:
        """Edge masks of all spanning trees, ascending; empty when disconnected."""
        need = self.vertex_count - 1
        m = self.edge_count
        out: list[int] = []

        def extend(idx: int, picked: int, chosen: int, uf: _UnionFind) -> None:
            if picked == need:
                out.append(chosen)
                return
            if idx == m or picked + (m - idx) < need:
                return
            u, v = self.edges[idx]
            if uf.find(u) != uf.find(v):
                branch = uf.copy()
                branch.union(u, v)
                extend(idx + 1, picked + 1, chosen | (1 << idx), branch)
            extend(idx + 1, picked, chosen, uf)

        extend(0, 0, 0, _UnionFind(self.vertex_count + 1))
        return tuple(sorted(out))

    def cycle_matroid(self) -> Matroid:
        """Matroid of spanning trees on the edge index set; needs connectivity."""
        if not self.is_connected():
            raise ValueError("cycle matroid requires a connected graph")
        if self.vertex_count == 1:
            raise ValueError("cycle matroid needs at least one edge in its bases")
        return Matroid(self.edge_count, [_mask_elements(m) for m in self.spanning_tree_masks()])

    def bonds(self, *, max_vertices: int = 12) -> tuple[int, ...]:
        """Minimal edge cuts as edge masks, sorted by (size, mask).

        Scans vertex bipartitions whose two sides both induce connected
        subgraphs; in a connected graph these are exactly the bonds.
        """
        if not self.is_connected():
            raise ValueError("bonds are defined here for connected graphs only")
        if self.vertex_count > max_vertices:
            raise ValueError(f"bond scan capped at {max_vertices} vertices")
        nv = self.vertex_count
        out = []
        for half in range(1 << (nv - 1)):
            side = (half << 1) | 1  # vertex 1 stays on the first side
            if side == (1 << nv) - 1:
                continue
            if not self._induced_connected(side):
                continue
            other = ~side & ((1 << nv) - 1)
            if not self._induced_connected(other):
                continue
            cut = 0
            for idx, (u, v) in enumerate(self.edges):
                if bool(side >> (u - 1) & 1) != bool(side >> (v - 1) & 1):
                    cut |= 1 << idx
            out.append(cut)
        return tuple(sorted(set(out), key=lambda m: (m.bit_count(), m)))

    def _induced_connected(self, vertex_mask: int) -> bool:
        uf = _UnionFind(self.vertex_count + 1)
        inside = [v for v in range(1, self.vertex_count + 1) if vertex_mask >> (v - 1) & 1]
        count = len(inside)
        for u, v in self.edges:
            if vertex_mask >> (u - 1) & 1 and vertex_mask >> (v - 1) & 1:
                if uf.union(u, v):
                    count -= 1
        return count == 1

    def bond_size_counts(self) -> dict[int, int]:
        """Number of bonds of each size j (only sizes that occur)."""
        counts: dict[int, int] = {}
        for m in self.bonds():
            counts[m.bit_count()] = counts.get(m.bit_count(), 0) + 1
        return dict(sorted(counts.items()))

    def edge_connectivity(self) -> int | None:
        """Size of the smallest bond; None for a single-vertex graph."""
        cuts = self.bonds()
        if not cuts:
            return None
        return cuts[0].bit_count()

    def girth(self) -> int | None:
        """Length of the shortest cycle, or None in a forest."""
        best: int | None = None
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count + 1)]
        for idx, (u, v) in enumerate(self.edges):
            if u == v:
                return 1
            adj[u].append((v, idx))
            adj[v].append((u, idx))
        seen_pairs = set()
        for u, v in self.edges:
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                best = 2
            seen_pairs.add(pair)
        for s in range(1, self.vertex_count + 1):
            dist = {s: 0}
            via = {s: -1}
            queue = [s]
            while queue:
                nxt = []
                for u in queue:
                    for v, idx in adj[u]:
                        if idx == via[u]:
                            continue
                        if v not in dist:
                            dist[v] = dist[u] + 1
                            via[v] = idx
                            nxt.append(v)
                        else:
                            cand = dist[u] + dist[v] + 1
                            if best is None or cand < best:
                                best = cand
                queue = nxt
        return best


def _mask_elements(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class CutFormulaRow:
    i: int
    formula: int
    coefficient: int

    @property
    def matches(self) -> bool:
        return self.formula == self.coefficient


@dataclass(frozen=True)
class CutFormulaReport:
    """High-order T(1, y) coefficients against the bond-count expression."""

    k: int
    nullity: int
    bond_counts: dict[int, int]
    rows: tuple[CutFormulaRow, ...]
    threshold_bound_ok: bool

    @property
    def passed(self) -> bool:
        return self.threshold_bound_ok and all(r.matches for r in self.rows)


def cut_formula_check(G: Graph, k: int) -> CutFormulaReport:
    """Check the bond-count expression for the top T(1, y) coefficients.

    Requires edge connectivity at least k + 1.  For each admissible i
    the coefficient of y^(nullity - i) in T(1, y) must equal
    binom(|V| + i - 2, i) - sum_j binom(|V| + i - 2 - j, i - j) * (bonds of size j),
    and 3 (k + 1) / 2 may not exceed the second rank-drop threshold of
    the cycle matroid's polymatroid.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not G.is_connected():
        raise ValueError("the cut identity applies to connected graphs")
    ec = G.edge_connectivity()
    if ec is not None and ec < k + 1:
        raise ValueError(f"edge connectivity {ec} is below the required {k + 1}")
    nullity = G.edge_count - G.vertex_count + 1
    counts = G.bond_size_counts()
    t1y: Polynomial = tutte_polynomial(G.cycle_matroid()).at_x1()
    i_top = min((3 * (k + 1) - 1) // 2, nullity)
    rows = []
    nv = G.vertex_count
    for i in range(i_top + 1):
        value = binom(nv + i - 2, i)
        for j in range(i + 1):
            value -= binom(nv + i - 2 - j, i - j) * counts.get(j, 0)
        rows.append(CutFormulaRow(i, value, t1y.coefficient(nullity - i)))
    r2 = rank_drop_thresholds(G.cycle_matroid().to_polymatroid()).get(2)
    threshold_ok = r2 is not None and 3 * (k + 1) <= 2 * r2
    return CutFormulaReport(k, nullity, counts, tuple(rows), threshold_ok)
