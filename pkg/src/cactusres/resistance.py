"""Resistance distances of balanced, strongly connected digraphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .digraph import (
    Digraph,
    distance_matrix,
    is_directed_cactus,
    laplacian,
    require_balanced,
    require_strongly_connected,
)
from .errors import GraphError, IdentityMismatchError
from .linalg import MAX_DIM, complement_minor, determinant, format_rational, moore_penrose_laplacian


def require_analyzable(G: Digraph) -> None:
    require_balanced(G)
    require_strongly_connected(G)


def kappa(G: Digraph) -> int:
    """Number of spanning trees rooted at any vertex.

    Evaluated as the principal minor at vertex n and re-checked at vertex 1.
    """
    require_analyzable(G)
    if G.n == 1:
        return 1
    L = laplacian(G)
    at_last = determinant(complement_minor(L, {G.n}, {G.n}))
    at_first = determinant(complement_minor(L, {1}, {1}))
    if at_last != at_first:
        raise IdentityMismatchError(
            f"principal minors differ: {at_last} at vertex {G.n}, {at_first} at vertex 1"
        )
    return int(at_last)


def resistance_from_pinv(P) -> list[list[Fraction]]:
    n = len(P)
    return [[P[i][i] + P[j][j] - 2 * P[i][j] for j in range(n)] for i in range(n)]


def resistance_matrix(G: Digraph, limit: int | None = MAX_DIM) -> list[list[Fraction]]:
    require_analyzable(G)
    return resistance_from_pinv(moore_penrose_laplacian(laplacian(G), limit=limit))


def _distinct(G: Digraph, i: int, j: int) -> None:
    G.check_vertex(i)
    G.check_vertex(j)
    if i == j:
        raise GraphError(f"expected two distinct vertices, got {i} twice")


def two_forest_count(G: Digraph, i: int, j: int) -> int:
    """``det L[{i,j}^c, {i,j}^c]``: forests of two trees rooted at i and j."""
    _distinct(G, i, j)
    return int(determinant(complement_minor(laplacian(G), {i, j}, {i, j})))


def pair_resistance_sum(G: Digraph, i: int, j: int) -> Fraction:
    """``r_ij + r_ji`` obtained from a single two-vertex minor."""
    _distinct(G, i, j)
    return Fraction(2 * two_forest_count(G, i, j), kappa(G))


def anchor_last(n: int, anchor: int) -> dict[int, int]:
    """Permutation moving ``anchor`` to ``n`` and keeping the others in order."""
    rest = [v for v in range(1, n + 1) if v != anchor]
    perm = {v: k for k, v in enumerate(rest, start=1)}
    perm[anchor] = n
    return perm


def edge_to_ends(n: int, i: int, j: int) -> dict[int, int]:
    """Permutation sending ``i`` to 1 and ``j`` to ``n``, others in order."""
    rest = [v for v in range(1, n + 1) if v not in (i, j)]
    perm = {v: k for k, v in enumerate(rest, start=2)}
    perm[i] = 1
    perm[j] = n
    return perm


def anchored_forest_count(G: Digraph, anchor: int, i: int, j: int) -> int:
    """Forests with one tree rooted at ``anchor`` and one rooted at ``j`` containing ``i``.

    The anchor is first relabeled to ``n``; the count is then
    ``(-1)^(i'+j') det L'[{n,i'}^c, {n,j'}^c]``.
    """
    for v in (anchor, i, j):
        G.check_vertex(v)
    if anchor in (i, j):
        raise GraphError(f"anchor {anchor} collides with i={i} or j={j}")
    perm = anchor_last(G.n, anchor)
    H = G.relabel(perm)
    ii, jj = perm[i], perm[j]
    minor = complement_minor(laplacian(H), {H.n, ii}, {H.n, jj})
    value = determinant(minor)
    return int(value if (ii + jj) % 2 == 0 else -value)


@dataclass
class ResistanceReport:
    graph: Digraph
    L: list[list[int]]
    L_pinv: list[list[Fraction]]
    R: list[list[Fraction]]
    D: list[list[int]]
    kappa: int
    is_cactus: bool
    violations: list[tuple[int, int, Fraction, int]] = field(default_factory=list)

    @property
    def r_le_d(self) -> bool:
        return not self.violations

    @property
    def n(self) -> int:
        return self.graph.n

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kappa": str(self.kappa),
            "cactus": self.is_cactus,
            "r_le_d": self.r_le_d,
            "R": [[format_rational(x) for x in row] for row in self.R],
            "D": [list(row) for row in self.D],
            "violations": [
                {"i": i, "j": j, "r": format_rational(r), "d": d}
                for i, j, r, d in self.violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def analyze(G: Digraph, limit: int | None = MAX_DIM) -> ResistanceReport:
    require_analyzable(G)
    L = laplacian(G)
    P = moore_penrose_laplacian(L, limit=limit)
    R = resistance_from_pinv(P)
    D = distance_matrix(G)
    violations = [
        (i + 1, j + 1, R[i][j], D[i][j])
        for i in range(G.n)
        for j in range(G.n)
        if R[i][j] > D[i][j]
    ]
    return ResistanceReport(
        graph=G,
        L=L,
        L_pinv=P,
        R=R,
        D=D,
        kappa=kappa(G),
        is_cactus=is_directed_cactus(G),
        violations=violations,
    )
