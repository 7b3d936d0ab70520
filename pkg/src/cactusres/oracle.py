"""Brute-force enumeration used as ground truth for the determinant formulas.

Forests are enumerated by letting every non-root vertex pick one incoming
edge and discarding the choices that close a directed cycle. Nothing here
touches a determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .digraph import Digraph, is_strongly_connected
from .errors import GraphError, PreconditionError, SizeGuardError

MAX_VERTICES = 10
MAX_EDGE_RATIO = 3
MAX_DELTA = 3


def check_guard(G: Digraph) -> None:
    if G.n > MAX_VERTICES:
        raise SizeGuardError(f"oracle enumeration is limited to n <= {MAX_VERTICES}, got {G.n}")
    if len(G.edges) > MAX_EDGE_RATIO * G.n:
        raise SizeGuardError(
            f"oracle enumeration is limited to |E| <= {MAX_EDGE_RATIO}n, got {len(G.edges)}"
        )


@dataclass(frozen=True)
class ForestConstraint:
    """Spanning forests with one tree per vertex of ``delta2``.

    Every vertex of ``delta2`` roots its tree and every tree holds exactly one
    vertex of ``delta1``.
    """

    delta1: frozenset
    delta2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "delta1", frozenset(self.delta1))
        object.__setattr__(self, "delta2", frozenset(self.delta2))
        if not self.delta1 or len(self.delta1) != len(self.delta2):
            raise PreconditionError(
                f"constraint sets must be nonempty and equal in size, "
                f"got {sorted(self.delta1)} and {sorted(self.delta2)}"
            )

    def validate(self, G: Digraph) -> None:
        for v in self.delta1 | self.delta2:
            G.check_vertex(v)

    @property
    def alpha1(self) -> int:
        return sum(self.delta1)

    @property
    def alpha2(self) -> int:
        return sum(self.delta2)


@lru_cache(maxsize=512)
def _forests(G: Digraph, roots: frozenset) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All spanning forests whose roots are exactly ``roots``.

    Each entry is ``(parent, label)`` indexed by vertex (index 0 unused):
    ``parent[v]`` is the tail of the edge entering v (0 for roots) and
    ``label[v]`` is the root of v's tree.
    """
    n = G.n
    free = [v for v in G.vertices if v not in roots]
    choices = [G.in_neighbors(v) for v in free]
    if any(not c for c in choices):
        return ()
    out = []
    for pick in product(*choices):
        parent = [0] * (n + 1)
        for v, p in zip(free, pick):
            parent[v] = p
        label = [0] * (n + 1)
        for r in roots:
            label[r] = r
        ok = True
        for v in free:
            if label[v]:
                continue
            path = []
            w = v
            while not label[w]:
                if w in path:
                    ok = False
                    break
                path.append(w)
                w = parent[w]
            if not ok:
                break
            for u in path:
                label[u] = label[w]
        if ok:
            out.append((tuple(parent), tuple(label)))
    return tuple(out)


def _edges_of(parent: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((p, v) for v, p in enumerate(parent) if p))


def enumerate_rooted_spanning_trees(G: Digraph, root: int) -> tuple[int, list[tuple]]:
    """Count and list the spanning trees rooted at ``root`` (edges point away from it)."""
    check_guard(G)
    G.check_vertex(root)
    trees = sorted(_edges_of(parent) for parent, _ in _forests(G, frozenset({root})))
    return len(trees), trees


def _matches(label: tuple[int, ...], constraint: ForestConstraint) -> bool:
    hits = [label[v] for v in constraint.delta1]
    return len(set(hits)) == len(hits)


def enumerate_constrained_forests(G: Digraph, constraint: ForestConstraint) -> list[tuple]:
    check_guard(G)
    constraint.validate(G)
    return sorted(
        _edges_of(parent)
        for parent, label in _forests(G, constraint.delta2)
        if _matches(label, constraint)
    )


def enumerate_two_tree_forests(G: Digraph, constraint: ForestConstraint) -> int:
    """Number of two-tree spanning forests meeting ``constraint``."""
    if len(constraint.delta1) != 2:
        raise PreconditionError("two-tree forests need |delta1| = |delta2| = 2")
    return len(enumerate_constrained_forests(G, constraint))


def two_tree_count(G: Digraph, i: int, j: int) -> int:
    """Forests of two trees rooted at ``i`` and ``j``."""
    return enumerate_two_tree_forests(G, ForestConstraint({i, j}, {i, j}))


def anchored_tree_count(G: Digraph, anchor: int, i: int, j: int) -> int:
    """Forests of a tree rooted at ``anchor`` plus a tree rooted at ``j`` containing ``i``."""
    return enumerate_two_tree_forests(G, ForestConstraint({anchor, i}, {anchor, j}))


def _inversions(pi: dict[int, int]) -> int:
    keys = sorted(pi)
    return sum(1 for a, b in combinations(keys, 2) if pi[a] > pi[b])


def all_minors_signed_sum(G: Digraph, constraint: ForestConstraint) -> int:
    """Signed forest sum of the all-minors matrix-tree theorem.

    Each qualifying forest contributes ``(-1)^inv(pi)`` where ``pi`` sends a
    ``delta1`` vertex to the root of its tree; the total carries the sign
    ``(-1)^(sum(delta1) + sum(delta2))``.
    """
    check_guard(G)
    constraint.validate(G)
    if len(constraint.delta1) > MAX_DELTA:
        raise PreconditionError(f"constraint sets are limited to size {MAX_DELTA}")
    total = 0
    for _, label in _forests(G, constraint.delta2):
        if not _matches(label, constraint):
            continue
        pi = {v: label[v] for v in constraint.delta1}
        total += -1 if _inversions(pi) % 2 else 1
    sign = -1 if (constraint.alpha1 + constraint.alpha2) % 2 else 1
    return sign * total


def enumerate_simple_paths(G: Digraph, i: int, j: int) -> list[tuple[int, ...]]:
    """Every simple directed path from ``i`` to ``j``, as vertex tuples, in DFS order."""
    check_guard(G)
    G.check_vertex(i)
    G.check_vertex(j)
    if i == j:
        raise GraphError("simple paths need distinct endpoints")
    paths: list[tuple[int, ...]] = []
    path = [i]
    on_path = {i}

    def extend(u):
        for w in G.out_neighbors(u):
            if w == j:
                paths.append(tuple(path) + (j,))
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(w)
                path.pop()
                on_path.discard(w)

    extend(i)
    return paths


def directed_cycles_through(G: Digraph, u: int, v: int) -> list[tuple[int, ...]]:
    """Directed cycles containing edge ``u -> v``, each as the vertex tuple starting at u."""
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return [(u,) + p[:-1] for p in enumerate_simple_paths(G, v, u)]


def is_cactus_by_enumeration(G: Digraph) -> bool:
    """Definitional check: strongly connected and each edge on exactly one directed cycle."""
    if not is_strongly_connected(G):
        return False
    return all(len(directed_cycles_through(G, u, v)) == 1 for u, v in G.edges)
