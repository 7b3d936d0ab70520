"""Simple digraphs on vertices ``1..n``: parsing, structural predicates,
BFS distances, reachability partitions and the out-degree Laplacian."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import (
    DuplicateEdgeError,
    EdgeCountError,
    GraphError,
    MalformedLineError,
    NotBalancedError,
    NotStronglyConnectedError,
    SelfLoopError,
    VertexRangeError,
)


@dataclass(frozen=True)
class Digraph:
    """A simple digraph. ``edges`` holds ordered pairs ``(u, v)`` meaning u -> v.

    A digon is just the two edges ``(u, v)`` and ``(v, u)``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 1..{self.n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        edges = list(edges)
        if len(set(edges)) != len(edges):
            raise GraphError("duplicate edge")
        return cls(n, frozenset(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            out[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in out.items()}

    @cached_property
    def _in(self) -> dict[int, tuple[int, ...]]:
        inn: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            inn[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in inn.items()}

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def outdegree(self, v: int) -> int:
        return len(self._out[v])

    def indegree(self, v: int) -> int:
        return len(self._in[v])

    def degree(self, v: int) -> int:
        """Common in/out degree of a balanced vertex."""
        if self.indegree(v) != self.outdegree(v):
            raise NotBalancedError(v, self.indegree(v), self.outdegree(v))
        return self.outdegree(v)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: dict[int, int]) -> "Digraph":
        """Return the isomorphic copy with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(self.vertices) or sorted(perm.values()) != list(self.vertices):
            raise GraphError("relabeling must be a permutation of 1..n")
        return Digraph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphError(f"vertex {v!r} outside 1..{self.n}")

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={self.sorted_edges()})"


def parse_edge_list(text: str) -> Digraph:
    """Parse the ``n m`` header + ``m`` lines of ``u v`` edge-list format.

    Lines starting with ``#`` and blank lines are skipped; LF and CRLF both work.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_is_decimal(p) for p in parts):
            raise MalformedLineError(lineno, f"expected two decimal integers, got {raw!r}")
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if a < 1:
                raise MalformedLineError(lineno, f"vertex count must be positive, got {a}")
            header = (a, b, lineno)
            continue
        n, m, _ = header
        if len(edges) == m:
            raise EdgeCountError(lineno, f"more than the {m} edges declared in the header")
        if not (1 <= a <= n and 1 <= b <= n):
            raise VertexRangeError(lineno, f"edge ({a}, {b}) has a vertex outside 1..{n}")
        if a == b:
            raise SelfLoopError(lineno, f"self-loop at vertex {a}")
        if (a, b) in seen:
            raise DuplicateEdgeError(
                lineno, f"edge ({a}, {b}) already given on line {seen[(a, b)]}"
            )
        seen[(a, b)] = lineno
        edges.append((a, b))
    if header is None:
        raise MalformedLineError(max(last_line, 1), "missing 'n m' header")
    n, m, hline = header
    if len(edges) != m:
        raise EdgeCountError(hline, f"header declares {m} edges but {len(edges)} were given")
    return Digraph(n, frozenset(edges))


def _is_decimal(token: str) -> bool:
    return token.isascii() and token.lstrip("+-").isdigit()


def format_edge_list(G: Digraph) -> str:
    lines = [f"{G.n} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def is_balanced(G: Digraph) -> bool:
    return all(G.indegree(v) == G.outdegree(v) for v in G.vertices)


def require_balanced(G: Digraph) -> None:
    for v in G.vertices:
        if G.indegree(v) != G.outdegree(v):
            raise NotBalancedError(v, G.indegree(v), G.outdegree(v))


def reachable(G: Digraph, source: int, avoid: int | None = None, reverse: bool = False) -> set[int]:
    """Vertices reachable from ``source`` (including it) without entering ``avoid``."""
    step = G.in_neighbors if reverse else G.out_neighbors
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in step(u):
            if w != avoid and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _bfs_lengths(G: Digraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.out_neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_strongly_connected(G: Digraph) -> bool:
    # strongly connected iff vertex 1 reaches everything in G and in the reverse of G
    return len(reachable(G, 1)) == G.n and len(reachable(G, 1, reverse=True)) == G.n


def require_strongly_connected(G: Digraph) -> None:
    forward = reachable(G, 1)
    if len(forward) < G.n:
        raise NotStronglyConnectedError(1, min(set(G.vertices) - forward))
    backward = reachable(G, 1, reverse=True)
    if len(backward) < G.n:
        raise NotStronglyConnectedError(min(set(G.vertices) - backward), 1)


def distance_matrix(G: Digraph) -> list[list[int]]:
    """Shortest directed path lengths; row ``i-1`` holds distances out of vertex ``i``."""
    D = []
    for i in G.vertices:
        dist = _bfs_lengths(G, i)
        if len(dist) < G.n:
            raise NotStronglyConnectedError(i, min(set(G.vertices) - set(dist)))
        D.append([dist[j] for j in G.vertices])
    return D


def laplacian(G: Digraph) -> list[list[int]]:
    """Out-degree Laplacian: ``l_ii = outdeg(i)``, ``l_ij = -1`` for each edge i -> j."""
    L = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        L[u - 1][v - 1] = -1
        L[u - 1][u - 1] += 1
    return L


def biconnected_blocks(G: Digraph) -> list[list[tuple[int, int]]]:
    """Blocks of the underlying undirected multigraph, as lists of directed edges.

    Both edges of a digon stay as parallel undirected edges, so a digon is
    its own block. Iterative Hopcroft-Tarjan on edge ids.
    """
    edge_list = G.sorted_edges()
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in G.vertices}
    for eid, (u, v) in enumerate(edge_list):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    for v in adj:
        adj[v].sort()

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[list[tuple[int, int]]] = []
    edge_stack: list[int] = []
    counter = 0
    for root in G.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # frames: (vertex, id of the tree edge used to enter it, neighbor iterator)
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent_eid, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == parent_eid:
                    continue
                if w not in disc:
                    edge_stack.append(eid)
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append(eid)
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    block = []
                    while True:
                        eid = edge_stack.pop()
                        block.append(edge_list[eid])
                        if eid == parent_eid:
                            break
                    blocks.append(sorted(block))
    return blocks


def _is_directed_cycle_block(block: list[tuple[int, int]]) -> bool:
    outs: dict[int, int] = {}
    ins: dict[int, int] = {}
    for u, v in block:
        outs[u] = outs.get(u, 0) + 1
        ins[v] = ins.get(v, 0) + 1
    verts = set(outs) | set(ins)
    # a biconnected block with |E| == |V| is an undirected cycle
    if len(block) < 2 or len(block) != len(verts):
        return False
    return all(outs.get(v) == 1 and ins.get(v) == 1 for v in verts)


def is_directed_cactus(G: Digraph) -> bool:
    """Strongly connected and every block of the underlying multigraph is a directed cycle."""
    if not is_strongly_connected(G):
        return False
    return all(_is_directed_cycle_block(b) for b in biconnected_blocks(G))


@dataclass(frozen=True)
class VertexPartition:
    """Reachability sets around an ordered pair ``(i, j)``.

    ``forward``: reachable from i avoiding j; ``backward``: reachable from j
    avoiding i; ``co_reach``: vertices reaching i avoiding j. None of the
    sets contains i or j.
    """

    pair: tuple[int, int]
    forward: frozenset
    backward: frozenset
    co_reach: frozenset

    def covers(self, n: int) -> bool:
        i, j = self.pair
        return (
            not (self.forward & self.backward)
            and {i, j} | self.forward | self.backward == set(range(1, n + 1))
        )


def reachability_partition(G: Digraph, i: int, j: int) -> VertexPartition:
    G.check_vertex(i)
    G.check_vertex(j)
    if i == j:
        raise GraphError("reachability partition needs two distinct vertices")
    pair = {i, j}
    return VertexPartition(
        pair=(i, j),
        forward=frozenset(reachable(G, i, avoid=j) - pair),
        backward=frozenset(reachable(G, j, avoid=i) - pair),
        co_reach=frozenset(reachable(G, i, avoid=j, reverse=True) - pair),
    )
