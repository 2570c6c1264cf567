"""Independent brute-force reference implementations.

Everything here recomputes library quantities from first principles
with deliberately different algorithms (plain product scans, DFS
reachability, deletion-contraction) so tests compare two genuinely
separate routes.  None of these functions import from the library
beyond plain data (rank tables are consumed through their ``rank``
method only).
"""

from __future__ import annotations

import itertools
from collections import defaultdict


# -- lattice points ------------------------------------------------------


def brute_bases(table) -> set[tuple[int, ...]]:
    """All maximal lattice points by scanning the full coordinate box."""
    n = table.n
    singles = [table.rank(1 << t) for t in range(n)]
    full = table.rank((1 << n) - 1)
    out = set()
    for vec in itertools.product(*(range(s + 1) for s in singles)):
        if sum(vec) != full:
            continue
        if all(
            sum(vec[t] for t in range(n) if m >> t & 1) <= table.rank(m)
            for m in range(1, 1 << n)
        ):
            out.add(vec)
    return out


def brute_polynomial_counts(points, n) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(interior, exterior) coefficient counts of an explicit point set.

    Index i of a point a is internally active when no a - e_i + e_j
    (j < i) is in the set, externally active when no a + e_i - e_j is.
    Returned untrimmed with n + 1 slots each.
    """
    pts = set(map(tuple, points))
    interior = [0] * (n + 1)
    exterior = [0] * (n + 1)
    for a in pts:
        internally_active = 0
        externally_active = 0
        for i in range(1, n + 1):
            if all(
                tuple(a[t] - (t == i - 1) + (t == j - 1) for t in range(n)) not in pts
                for j in range(1, i)
            ):
                internally_active += 1
            if all(
                tuple(a[t] + (t == i - 1) - (t == j - 1) for t in range(n)) not in pts
                for j in range(1, i)
            ):
                externally_active += 1
        interior[n - internally_active] += 1
        exterior[n - externally_active] += 1
    return tuple(interior), tuple(exterior)


# -- graphs --------------------------------------------------------------


def reachable(edges, start) -> set:
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def component_count(vertex_count, edges) -> int:
    remaining = set(range(1, vertex_count + 1))
    parts = 0
    while remaining:
        start = next(iter(remaining))
        remaining -= reachable(edges, start) | {start}
        parts += 1
    return parts


def brute_spanning_trees(vertex_count, edges) -> set[frozenset[int]]:
    """Edge-index sets of spanning trees, by scanning all (V-1)-subsets."""
    out = set()
    if vertex_count < 1:
        return out
    for combo in itertools.combinations(range(len(edges)), vertex_count - 1):
        chosen = [edges[i] for i in combo]
        if len(reachable(chosen, 1)) == vertex_count:
            out.add(frozenset(combo))
    if vertex_count == 1:
        out.add(frozenset())
    return out


def brute_bonds(vertex_count, edges) -> set[frozenset[int]]:
    """Minimal disconnecting edge-index sets, by scanning all subsets."""
    m = len(edges)
    base = component_count(vertex_count, edges)
    out = set()
    for mask in range(1, 1 << m):
        kept = [edges[i] for i in range(m) if not mask >> i & 1]
        if component_count(vertex_count, kept) <= base:
            continue
        minimal = True
        for i in range(m):
            if not mask >> i & 1:
                continue
            back = kept + [edges[i]]
            if component_count(vertex_count, back) > base:
                minimal = False
                break
        if minimal:
            out.add(frozenset(i for i in range(m) if mask >> i & 1))
    return out


def brute_girth(vertex_count, edges):
    """Size of the smallest edge set that is a single cycle, if any."""
    m = len(edges)
    for r in range(1, m + 1):
        for combo in itertools.combinations(range(m), r):
            degree = defaultdict(int)
            for i in combo:
                a, b = edges[i]
                degree[a] += 1
                degree[b] += 1
            if any(d != 2 for d in degree.values()):
                continue
            chosen = [edges[i] for i in combo]
            touched = set(degree)
            if reachable(chosen, next(iter(touched))) >= touched:
                return r
    return None


def dc_tutte(edges) -> dict[tuple[int, int], int]:
    """Tutte polynomial of a connected multigraph by deletion-contraction.

    Returns {(i, j): coefficient} for x^i y^j.  Loops contribute a factor
    y, bridges a factor x, and every other edge splits into deletion
    plus contraction.
    """
    if not edges:
        return {(0, 0): 1}
    (u, v) = edges[0]
    rest = list(edges[1:])
    if u == v:
        return {(i, j + 1): c for (i, j), c in dc_tutte(rest).items()}
    merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
    if v not in reachable(rest, u):
        return {(i + 1, j): c for (i, j), c in dc_tutte(merged).items()}
    out = dict(dc_tutte(rest))
    for key, c in dc_tutte(merged).items():
        out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c}


# -- hypergraphs -----------------------------------------------------------


def brute_restricted_components(vertex_count, edge_vertex_masks, chosen_mask) -> int:
    """Components of the incidence graph on ALL vertices plus chosen edges."""
    edges = []
    for idx, vmask in enumerate(edge_vertex_masks):
        if not chosen_mask >> idx & 1:
            continue
        node = vertex_count + idx + 1
        for t in range(vertex_count):
            if vmask >> t & 1:
                edges.append((node, t + 1))
    nodes = set(range(1, vertex_count + 1))
    nodes.update(
        vertex_count + idx + 1
        for idx in range(len(edge_vertex_masks))
        if chosen_mask >> idx & 1
    )
    remaining = set(nodes)
    parts = 0
    while remaining:
        start = next(iter(remaining))
        remaining -= reachable(edges, start) | {start}
        parts += 1
    return parts


# -- sequences ---------------------------------------------------------------


def brute_unimodal(seq) -> bool:
    """True when some split point makes the sequence rise then fall."""
    seq = list(seq)
    if not seq:
        return True
    return any(
        all(seq[i] <= seq[i + 1] for i in range(p))
        and all(seq[i] >= seq[i + 1] for i in range(p, len(seq) - 1))
        for p in range(len(seq))
    )
