"""Invariant suite run by ``verify``: every property the theory promises for
a balanced, strongly connected digraph (and the extra ones for cacti)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, laplacian, reachability_partition
from .errors import SizeGuardError
from .linalg import (
    complement_minor,
    determinant,
    format_rational,
    inverse,
    is_moore_penrose,
)
from .oracle import check_guard, enumerate_simple_paths
from .resistance import ResistanceReport, analyze, edge_to_ends, two_forest_count


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    kind: str = "theorem"  # "theorem", "conjecture" or "identity"

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tag = f" [{self.kind}]" if self.kind != "theorem" else ""
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}{tag}{extra}"


def check_moore_penrose(rep: ResistanceReport) -> Check:
    return Check("moore-penrose conditions", is_moore_penrose(rep.L, rep.L_pinv), kind="identity")


def check_nonnegative(rep: ResistanceReport) -> Check:
    bad = [(i + 1, j + 1) for i, row in enumerate(rep.R) for j, r in enumerate(row) if r < 0]
    return Check("resistance nonnegative", not bad, f"first bad pair {bad[0]}" if bad else "")


def check_triangle(rep: ResistanceReport) -> Check:
    R, n = rep.R, rep.n
    for i in range(n):
        for k in range(n):
            for j in range(n):
                if R[i][j] > R[i][k] + R[k][j]:
                    return Check("triangle inequality", False, f"i={i+1} k={k+1} j={j+1}")
    return Check("triangle inequality", True)


def check_equal_cofactors(rep: ResistanceReport) -> Check:
    L, n = rep.L, rep.n
    if n == 1:
        return Check("equal cofactors", True, kind="identity")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = determinant(complement_minor(L, {i}, {j})) * (-1) ** (i + j)
            if c != rep.kappa:
                return Check("equal cofactors", False, f"cofactor ({i},{j}) = {c}", "identity")
    return Check("equal cofactors", True, kind="identity")


def check_pair_sums(rep: ResistanceReport) -> Check:
    """r_ij + r_ji = 2 det L[{i,j}^c,{i,j}^c] / kappa for every pair."""
    G, R = rep.graph, rep.R
    for i in range(1, rep.n + 1):
        for j in range(i + 1, rep.n + 1):
            lhs = R[i - 1][j - 1] + R[j - 1][i - 1]
            rhs = Fraction(2 * two_forest_count(G, i, j), rep.kappa)
            if lhs != rhs:
                return Check("pair resistance sum", False, f"pair ({i},{j}): {lhs} != {rhs}", "identity")
    return Check("pair resistance sum", True, kind="identity")


def check_edge_minor_bound(rep: ResistanceReport) -> Check:
    G = rep.graph
    for i, j in G.sorted_edges():
        forests = two_forest_count(G, i, j)
        if forests > rep.kappa:
            return Check("edge minor <= kappa", False, f"edge ({i},{j}): {forests} > {rep.kappa}")
    return Check("edge minor <= kappa", True)


def check_degree_one_edges(rep: ResistanceReport) -> Check:
    G = rep.graph
    tested = 0
    for i, j in G.sorted_edges():
        if G.outdegree(i) == 1 or G.outdegree(j) == 1:
            tested += 1
            if rep.R[i - 1][j - 1] > 1:
                return Check("degree-1 edge resistance <= 1", False, f"edge ({i},{j})")
    return Check("degree-1 edge resistance <= 1", True, f"{tested} edges")


def check_r_le_d(rep: ResistanceReport) -> Check:
    kind = "theorem" if rep.is_cactus else "conjecture"
    if rep.violations:
        i, j, r, d = rep.violations[0]
        detail = f"{len(rep.violations)} violations, first r_{i}{j} = {format_rational(r)} > {d}"
        return Check("r <= d", False, detail, kind)
    return Check("r <= d", True, kind=kind)


def check_partitions(rep: ResistanceReport) -> Check:
    G = rep.graph
    for i, j in G.sorted_edges():
        part = reachability_partition(G, i, j)
        if not part.covers(G.n):
            return Check("edge partition", False, f"edge ({i},{j}) does not partition V")
        if not part.forward <= part.co_reach:
            return Check("edge partition", False, f"edge ({i},{j}): forward set not in co-reach")
    return Check("edge partition", True)


def inverse_row_pattern(G: Digraph, i: int, j: int, kappa: int) -> str | None:
    """Check the first row and column of ``C = L'[{n}^c,{n}^c]^-1`` for edge (i, j).

    ``L'`` is the Laplacian after relabeling i -> 1, j -> n. Returns None when
    ``c_1k = 1/kappa`` exactly on the forward set (0 elsewhere) and
    ``c_k1 >= 1/kappa`` on the forward set, else a description of the failure.
    """
    perm = edge_to_ends(G.n, i, j)
    H = G.relabel(perm)
    n = H.n
    C = inverse(complement_minor(laplacian(H), {n}, {n}))
    forward = reachability_partition(H, 1, n).forward
    unit = Fraction(1, kappa)
    for k in range(2, n):
        want = unit if k in forward else 0
        if C[0][k - 1] != want:
            return f"c_1{k} = {C[0][k - 1]}, expected {want}"
        if k in forward and C[k - 1][0] < unit:
            return f"c_{k}1 = {C[k - 1][0]} < 1/{kappa}"
    if any(x < 0 for row in C for x in row):
        return "inverse has a negative entry"
    return None


def check_inverse_rows(rep: ResistanceReport) -> Check:
    for i, j in rep.graph.sorted_edges():
        problem = inverse_row_pattern(rep.graph, i, j, rep.kappa)
        if problem:
            return Check("inverse row pattern", False, f"edge ({i},{j}): {problem}")
    return Check("inverse row pattern", True)


def check_unique_paths(rep: ResistanceReport) -> Check | None:
    G = rep.graph
    try:
        check_guard(G)
    except SizeGuardError:
        return None
    for i in G.vertices:
        for j in G.vertices:
            if i == j:
                continue
            paths = enumerate_simple_paths(G, i, j)
            if len(paths) != 1 or len(paths[0]) - 1 != rep.D[i - 1][j - 1]:
                return Check("unique paths", False, f"{len(paths)} paths from {i} to {j}")
    return Check("unique paths", True)


def run_checks(G: Digraph, report: ResistanceReport | None = None) -> list[Check]:
    rep = report if report is not None else analyze(G)
    checks = [
        check_moore_penrose(rep),
        check_nonnegative(rep),
        check_triangle(rep),
        check_equal_cofactors(rep),
        check_pair_sums(rep),
        check_edge_minor_bound(rep),
        check_degree_one_edges(rep),
    ]
    if rep.is_cactus:
        checks += [check_partitions(rep), check_inverse_rows(rep)]
        paths = check_unique_paths(rep)
        if paths is not None:
            checks.append(paths)
    checks.append(check_r_le_d(rep))
    return checks
