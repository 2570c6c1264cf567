"""Named identity checks backing the command-line ``verify`` command.

Each check returns a ``CheckResult``; a run passes when every result
does.  The polymatroid suite covers the polynomial identities
(duality swap, the slice recursion on every element, the closed-form
first coefficients), the threshold and family correspondences under
dualization, the coefficient formulas over their guaranteed ranges,
relabeling invariance, and unimodality of the guaranteed prefixes.
Frontend suites add their own independent oracles on top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .activity import (
    check_duality,
    check_permutation_invariance,
    exterior_by_slices,
    polynomial_pair,
)
from .core import Polymatroid
from .graphs import Graph, cut_formula_check
from .hypergraphs import Hypergraph, structure_report
from .matroids import Matroid, check_matroid_polynomials
from .structure import (
    circuit_sets,
    deficiency_thresholds,
    exterior_coefficient_formula,
    exterior_formula_range,
    first_exterior_coefficients,
    full_deficiency,
    hyperplane_sets,
    interior_coefficient_formula,
    interior_formula_range,
    is_unimodal,
    rank_drop_thresholds,
)
from .subsets import complement


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, passed, "" if passed else detail)


def _deterministic_permutations(n: int) -> list[tuple[int, ...]]:
    reverse = tuple(range(n, 0, -1))
    rotate = tuple(list(range(2, n + 1)) + [1])
    return [p for p in {reverse, rotate} if p != tuple(range(1, n + 1))] or [
        tuple(range(1, n + 1))
    ]


def verify_polymatroid(P: Polymatroid) -> list[CheckResult]:
    checks: list[CheckResult] = []
    interior, exterior = polynomial_pair(P)

    checks.append(
        _result(
            "basis-count-consistency",
            interior(1) == exterior(1) == P.basis_count(),
            f"interior(1)={interior(1)} exterior(1)={exterior(1)} bases={P.basis_count()}",
        )
    )

    c0, c1 = first_exterior_coefficients(P)
    checks.append(
        _result(
            "exterior-constant-term",
            exterior.coefficient(0) == c0,
            f"got {exterior.coefficient(0)}, closed form {c0}",
        )
    )
    checks.append(
        _result(
            "exterior-linear-term",
            exterior.coefficient(1) == c1,
            f"got {exterior.coefficient(1)}, closed form {c1}",
        )
    )

    bad_t = [t for t in range(1, P.n + 1) if exterior_by_slices(P, t) != exterior]
    checks.append(
        _result("slice-recursion-all-elements", not bad_t, f"mismatch at elements {bad_t}")
    )

    duality = check_duality(P)
    checks.append(
        _result(
            "interior-equals-dual-exterior",
            duality.interior == duality.dual_exterior,
            f"{duality.interior.coeffs} vs {duality.dual_exterior.coeffs}",
        )
    )
    checks.append(
        _result(
            "exterior-equals-dual-interior",
            duality.exterior == duality.dual_interior,
            f"{duality.exterior.coeffs} vs {duality.dual_interior.coeffs}",
        )
    )

    dual = P.dual()
    r = rank_drop_thresholds(P)
    r_def = deficiency_thresholds(P)
    checks.append(
        _result(
            "threshold-existence-and-monotonicity",
            r.get(0) == 0
            and r_def.get(0) == 0
            and sorted(r) == list(range(P.full_rank + 1))
            and sorted(r_def) == list(range(full_deficiency(P) + 1))
            and all(r[k] <= r[k + 1] for k in range(P.full_rank))
            and all(r_def[k] <= r_def[k + 1] for k in range(full_deficiency(P)))
            and all(v <= P.n for v in r.values())
            and all(v <= P.n for v in r_def.values()),
            f"rank-drop {r}, deficiency {r_def}",
        )
    )
    # Rank drops in the dual equal deficiencies here outright; the
    # reverse reading needs the coordinate minima at zero first, since
    # the dual's deficiency of J is this rank drop of J minus the
    # singleton drops inside J.
    checks.append(
        _result(
            "thresholds-swap-under-duality",
            r_def == rank_drop_thresholds(dual)
            and rank_drop_thresholds(P.grounded()) == deficiency_thresholds(dual),
            "threshold maps do not swap",
        )
    )

    circuits = circuit_sets(P)
    dual_hyperplanes = hyperplane_sets(dual)
    swapped = {j: frozenset(complement(h, P.n) for h in dual_hyperplanes[j]) for j in dual_hyperplanes}
    checks.append(
        _result(
            "circuits-are-dual-hyperplane-complements",
            circuits == swapped,
            f"{circuits} vs {swapped}",
        )
    )

    hyperplanes = hyperplane_sets(P)
    r1 = r.get(1)
    r1_def = r_def.get(1)
    checks.append(
        _result(
            "families-empty-below-first-threshold",
            all(not hyperplanes[j] for j in range(min(r1, P.n + 1) if r1 is not None else P.n + 1))
            and all(not circuits[j] for j in range(min(r1_def, P.n + 1) if r1_def is not None else P.n + 1)),
            "nonempty family below its first threshold",
        )
    )

    ext_bad = [
        i
        for i in range(min(exterior_formula_range(P), P.n))
        if exterior_coefficient_formula(P, i) != exterior.coefficient(i)
    ]
    checks.append(
        _result("exterior-formula-in-range", not ext_bad, f"mismatch at indices {ext_bad}")
    )
    int_bad = [
        i
        for i in range(min(interior_formula_range(P), P.n))
        if interior_coefficient_formula(P, i) != interior.coefficient(i)
    ]
    checks.append(
        _result("interior-formula-in-range", not int_bad, f"mismatch at indices {int_bad}")
    )

    perm_bad = [
        sigma
        for sigma in _deterministic_permutations(P.n)
        if not check_permutation_invariance(P, sigma).passed
    ]
    checks.append(
        _result("relabeling-invariance", not perm_bad, f"changed under {perm_bad}")
    )

    checks.append(
        _result(
            "unimodal-guaranteed-prefixes",
            is_unimodal(exterior.coeffs[: exterior_formula_range(P)])
            and is_unimodal(interior.coeffs[: interior_formula_range(P)]),
            f"exterior {exterior.coeffs} interior {interior.coeffs}",
        )
    )
    return checks


def verify_matroid(M: Matroid) -> list[CheckResult]:
    checks = verify_polymatroid(M.to_polymatroid())
    report = check_matroid_polynomials(M)
    checks.append(_result("tutte-exterior-reversal", report.exterior_matches))
    checks.append(_result("tutte-interior-reversal", report.interior_matches))
    checks.append(_result("tutte-basis-count", report.count_matches))
    checks.append(_result("matroid-rank-drop-bridge", report.rank_drop_bridge))
    checks.append(_result("matroid-nullity-bridge", report.nullity_bridge))
    checks.append(_result("matroid-hyperplane-bridge", report.hyperplane_bridge))
    checks.append(_result("matroid-circuit-bridge", report.circuit_bridge))
    return checks


def verify_graph(G: Graph) -> list[CheckResult]:
    M = G.cycle_matroid()
    checks = verify_matroid(M)
    P = M.to_polymatroid()
    bonds = set(G.bonds())
    hyperplane_complements = {
        complement(h, G.edge_count)
        for group in hyperplane_sets(P).values()
        for h in group
    }
    checks.append(
        _result(
            "bonds-are-hyperplane-complements",
            bonds == hyperplane_complements,
            f"{sorted(bonds)} vs {sorted(hyperplane_complements)}",
        )
    )
    ec = G.edge_connectivity()
    if ec is not None and ec >= 1:
        report = cut_formula_check(G, ec - 1)
        checks.append(
            _result(
                "cut-count-coefficients",
                all(row.matches for row in report.rows),
                f"rows {[ (row.i, row.formula, row.coefficient) for row in report.rows ]}",
            )
        )
        checks.append(_result("cut-threshold-bound", report.threshold_bound_ok))
    return checks


def verify_hypergraph(H: Hypergraph) -> list[CheckResult]:
    P = H.to_polymatroid()
    checks = verify_polymatroid(P)
    trees = H.tree_degree_vectors()
    checks.append(
        _result(
            "tree-degree-vectors-match-bases",
            trees == frozenset(P.bases()),
            f"{sorted(trees)} vs {sorted(P.bases())}",
        )
    )
    report = structure_report(H)
    checks.append(
        _result(
            "split-threshold-bridge",
            report.split_threshold == report.rank_drop_threshold,
            f"{report.split_threshold} vs {report.rank_drop_threshold}",
        )
    )
    checks.append(
        _result(
            "two-component-family-bridge",
            report.two_component == report.hyperplane_complements,
        )
    )
    checks.append(
        _result(
            "unique-cycle-family-bridge",
            report.unique_cycle == report.circuits,
        )
    )
    checks.append(
        _result(
            "double-cycle-threshold-bridge",
            report.double_cycle_threshold == report.deficiency_threshold,
            f"{report.double_cycle_threshold} vs {report.deficiency_threshold}",
        )
    )
    checks.append(
        _result(
            "degree-sum-deficiency-offset",
            report.full_deficiency == report.degree_sum_nullity + 1,
            f"{report.full_deficiency} vs {report.degree_sum_nullity}",
        )
    )
    checks.append(
        _result(
            "girth-binomial-prefix",
            all(row.matches for row in report.girth_rows),
            f"rows {[(row.k, row.interior_binomial, row.girth_reaches) for row in report.girth_rows]}",
        )
    )
    return checks
