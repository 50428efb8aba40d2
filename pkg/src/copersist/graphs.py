"""Finite simple graphs, their edge and cover ideals, and odd-cycle structure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .core import BudgetExceededError, MonomialIdeal, MonomialPrime, Ring, intersect

GRAPH_BUDGET = 16


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate vertices in {vs}")
        es = set()
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise ValueError(f"edge {pair} does not have two endpoints")
            a, b = pair
            if a == b:
                raise ValueError(f"loop at {a}")
            for v in pair:
                if v not in vs:
                    raise KeyError(f"edge endpoint {v!r} is not a vertex")
            es.add(frozenset(pair))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))

    @property
    def ring(self) -> Ring:
        return Ring(self.vertices)

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as vertex-ordered pairs, sorted by position."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))

    def neighbors(self, v: str) -> set[str]:
        return {u for e in self.edges if v in e for u in e if u != v}

    def adjacency(self) -> dict[str, set[str]]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edge_list():
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            for u in adj[todo.pop()]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == len(self.vertices)

    def induced(self, subset: Iterable[str]) -> SimpleGraph:
        keep = set(subset)
        return SimpleGraph([v for v in self.vertices if v in keep], [e for e in self.edges if e <= keep])

    def __str__(self):
        es = ", ".join(f"{a}-{b}" for a, b in self.edge_list())
        return f"graph {','.join(self.vertices)}; edges ({es})"


def cycle(n: int, prefix: str = "x", start: int = 1) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = [f"{prefix}{i}" for i in range(start, start + n)]
    return SimpleGraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n: int, prefix: str = "x", start: int = 1) -> SimpleGraph:
    """Path on n vertices."""
    if n < 1:
        raise ValueError("a path needs a vertex")
    vs = [f"{prefix}{i}" for i in range(start, start + n)]
    return SimpleGraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def _need_edges(G: SimpleGraph):
    if not G.edges:
        raise ValueError("graph has no edges")


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    _need_edges(G)
    R = G.ring
    return MonomialIdeal(R, [R.var(a) * R.var(b) for a, b in G.edge_list()])


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    """Intersection of the primes (x_i, x_j) over the edges."""
    _need_edges(G)
    R = G.ring
    return intersect(*(MonomialPrime(R, e).ideal() for e in G.edge_list()))


def minimal_vertex_covers(G: SimpleGraph, budget: int = 20) -> list[tuple[str, ...]]:
    """Brute-force enumeration of minimal vertex covers, for cross-checking."""
    n = len(G.vertices)
    if n > budget:
        raise BudgetExceededError(f"{n} vertices exceeds the cover enumeration budget {budget}")
    edges = G.edge_list()
    covers = []
    for mask in range(1 << n):
        chosen = {v for i, v in enumerate(G.vertices) if mask >> i & 1}
        if all(a in chosen or b in chosen for a, b in edges):
            covers.append(chosen)
    minimal = [c for c in covers if not any(d < c for d in covers)]
    out = [tuple(v for v in G.vertices if v in c) for c in minimal]
    pos = {v: i for i, v in enumerate(G.vertices)}
    return sorted(out, key=lambda c: (len(c), [pos[v] for v in c]))


@dataclass
class BipartiteResult:
    bipartite: bool
    coloring: dict[str, int] = field(default_factory=dict)
    odd_cycle: tuple[str, ...] = ()

    def __bool__(self):
        return self.bipartite


def is_bipartite(G: SimpleGraph) -> BipartiteResult:
    """BFS 2-coloring; on failure returns an odd closed walk that is a cycle."""
    adj = G.adjacency()
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for root in G.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        todo = deque([root])
        while todo:
            v = todo.popleft()
            for u in sorted(adj[v], key=G.vertices.index):
                if u not in color:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    todo.append(u)
                elif color[u] == color[v]:
                    return BipartiteResult(False, odd_cycle=_tree_cycle(parent, u, v))
    return BipartiteResult(True, coloring=color)


def _tree_cycle(parent, u, v) -> tuple[str, ...]:
    # u and v are adjacent with equal depth parity; join their tree paths
    up = [u]
    while parent[up[-1]] is not None:
        up.append(parent[up[-1]])
    vp = [v]
    while parent[vp[-1]] is not None:
        vp.append(parent[vp[-1]])
    common = set(up) & set(vp)
    left = []
    for w in up:
        left.append(w)
        if w in common:
            break
    right = []
    for w in vp:
        if w in common:
            break
        right.append(w)
    return tuple(left + right[::-1])


def _is_cycle(G: SimpleGraph, subset: tuple[str, ...], adj) -> bool:
    s = set(subset)
    if any(len(adj[v] & s) != 2 for v in subset):
        return False
    # 2-regular: a cycle iff connected
    seen = {subset[0]}
    todo = [subset[0]]
    while todo:
        for u in adj[todo.pop()] & s:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(s)


def induced_odd_cycles(G: SimpleGraph, max_size: int | None = None, budget: int = GRAPH_BUDGET) -> list[tuple[str, ...]]:
    """Vertex sets of odd size >= 3 inducing a cycle, by size then vertex position."""
    n = len(G.vertices)
    if n > budget:
        raise BudgetExceededError(f"{n} vertices exceeds the enumeration budget {budget}")
    adj = G.adjacency()
    # vertices of degree < 2 never lie on a cycle
    usable = [v for v in G.vertices if len(adj[v]) >= 2]
    top = n if max_size is None else min(n, max_size)
    out = []
    for size in range(3, top + 1, 2):
        for subset in combinations(usable, size):
            if _is_cycle(G, subset, adj):
                out.append(subset)
    return out


@dataclass
class AlmostBipartiteResult:
    almost_bipartite: bool
    odd_cycles: list[tuple[str, ...]] = field(default_factory=list)
    note: str | None = None

    def __bool__(self):
        return self.almost_bipartite


def is_almost_bipartite(G: SimpleGraph, budget: int = GRAPH_BUDGET) -> AlmostBipartiteResult:
    """Connected with exactly one induced odd cycle."""
    cycles = induced_odd_cycles(G, budget=budget)
    if not G.is_connected():
        return AlmostBipartiteResult(False, cycles, "graph is disconnected; almost bipartite is only defined for connected graphs")
    return AlmostBipartiteResult(len(cycles) == 1, cycles)


def closed_neighborhood(G: SimpleGraph, subset: Iterable[str]) -> set[str]:
    s = set(subset)
    adj = G.adjacency()
    return s.union(*(adj[v] for v in s))


def hochster_configurations(G: SimpleGraph, k: int | None = None, budget: int = GRAPH_BUDGET):
    """Pairs of induced odd cycles, neither touching the other's neighborhood.

    Cycles of sizes 2r+1 and 2s+1 give order k = r + s + 1; pass k to keep
    only that order. Returns (k, C1, C2) triples with C1 before C2.
    """
    cycles = induced_odd_cycles(G, budget=budget)
    out = []
    for c1, c2 in combinations(cycles, 2):
        if set(c1) & closed_neighborhood(G, c2):
            continue
        order = (len(c1) - 1) // 2 + (len(c2) - 1) // 2 + 1
        if k is None or order == k:
            out.append((order, c1, c2))
    return out
