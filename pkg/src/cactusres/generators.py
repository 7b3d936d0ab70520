"""Seeded graph generators.

Randomness comes from ``random.Random`` (MT19937) seeded with the 64-bit
``GenSpec.seed``; only ``randint``/``shuffle``/``sample`` are used, so a
given seed gives the same graph on every platform for a given CPython.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .digraph import Digraph
from .errors import PreconditionError

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated graph.

    For cacti, ``cycle_count`` cycles of length ``2..max_cycle_len`` are
    glued together; ``n_target`` (optional) caps the vertex count. For
    balanced digraphs, ``n_target`` is the vertex count and ``overlays`` the
    number of extra cycles laid over the base Hamiltonian cycle.
    """

    seed: int = 0
    n_target: int | None = None
    cycle_count: int | None = None
    max_cycle_len: int = 4
    overlays: int = 0

    def __post_init__(self):
        if not 0 <= self.seed <= MAX_SEED:
            raise PreconditionError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.max_cycle_len < 2:
            raise PreconditionError("max_cycle_len must be at least 2")
        if self.overlays < 0:
            raise PreconditionError("overlays must be non-negative")


def directed_cycle(n: int) -> Digraph:
    """The directed cycle 1 -> 2 -> ... -> n -> 1."""
    if n <= 1:
        raise PreconditionError(f"a directed cycle needs n > 1, got {n}")
    return Digraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def random_directed_cactus(spec: GenSpec) -> Digraph:
    if spec.cycle_count is None or spec.cycle_count < 1:
        raise PreconditionError("cactus generation needs cycle_count >= 1")
    cap = spec.n_target
    if cap is not None and cap < 2:
        raise PreconditionError("n_target for a cactus must be at least 2")
    rng = random.Random(spec.seed)

    first = rng.randint(2, spec.max_cycle_len)
    if cap is not None:
        first = min(first, cap)
    edges = {(i, i % first + 1) for i in range(1, first + 1)}
    n = first
    for _ in range(spec.cycle_count - 1):
        length = rng.randint(2, spec.max_cycle_len)
        if cap is not None:
            length = min(length, cap - n + 1)
            if length < 2:
                break
        hub = rng.randint(1, n)
        cycle = [hub] + list(range(n + 1, n + length))
        n += length - 1
        edges.update(zip(cycle, cycle[1:] + cycle[:1]))
    return Digraph(n, frozenset(edges))


def random_balanced_digraph(spec: GenSpec, max_attempts: int | None = None) -> Digraph:
    """Base cycle 1 -> ... -> n -> 1 plus edge-disjoint random overlay cycles.

    An overlay that would repeat an existing edge is redrawn; after
    ``max_attempts`` draws the graph is returned with fewer overlays.
    """
    n = spec.n_target
    if n is None or n < 2:
        raise PreconditionError("balanced generation needs n_target >= 2")
    rng = random.Random(spec.seed)
    edges = set(directed_cycle(n).edges)
    if max_attempts is None:
        max_attempts = 20 * spec.overlays
    placed = attempts = 0
    while placed < spec.overlays and attempts < max_attempts:
        attempts += 1
        k = rng.randint(2, n)
        cycle = rng.sample(range(1, n + 1), k)
        new = list(zip(cycle, cycle[1:] + cycle[:1]))
        if any(e in edges for e in new):
            continue
        edges.update(new)
        placed += 1
    return Digraph(n, frozenset(edges))


def derive_seeds(seed: int, count: int) -> list[int]:
    """``count`` 64-bit seeds derived from one master seed."""
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]
