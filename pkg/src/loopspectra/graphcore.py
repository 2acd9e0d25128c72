"""Simple graphs, loop sets, named families, and structural predicates.

Vertices are the integers ``0..n-1``.  A looped graph is a simple graph
together with the subset of vertices carrying a self-loop; the loop set is
kept separate from the edge set (a loop raises the vertex degree by 2 but
contributes a single diagonal 1 to the adjacency matrix).
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[Edge]) -> frozenset[Edge]:
    out: set[Edge] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"pair ({u},{v}) is a loop; loops live in the loop set")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge] = ()) -> "SimpleGraph":
        return SimpleGraph(n, frozenset((u, v) for u, v in edges))

    @cached_property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency_sets)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def complement(self) -> "SimpleGraph":
        comp = frozenset(
            (u, v) for u, v in combinations(range(self.n), 2) if (u, v) not in self.edges
        )
        return SimpleGraph(self.n, comp)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise ValueError("induced vertex out of range")
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return SimpleGraph(len(keep), edges)


@dataclass(frozen=True)
class LoopedGraph:
    """A simple base graph plus the set of vertices carrying a self-loop."""

    base: SimpleGraph
    loops: frozenset[int]

    def __post_init__(self) -> None:
        loops = frozenset(int(v) for v in self.loops)
        for v in loops:
            if not 0 <= v < self.base.n:
                raise ValueError(f"loop at vertex {v} out of range for {self.base.n} vertices")
        object.__setattr__(self, "loops", loops)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def sigma(self) -> int:
        return len(self.loops)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degrees in the looped graph: a loop adds 2."""
        return tuple(
            d + 2 if v in self.loops else d for v, d in enumerate(self.base.degrees)
        )

    def induced(self, vertices: Iterable[int]) -> "LoopedGraph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub = self.base.induced(keep)
        return LoopedGraph(sub, frozenset(index[v] for v in self.loops if v in index))


def make_looped(base: SimpleGraph, loops: Iterable[int] = ()) -> LoopedGraph:
    """Attach a self-loop at each vertex in ``loops``."""
    return LoopedGraph(base, frozenset(loops))


def canonical_key(gs: LoopedGraph) -> str:
    """Deterministic text key for hashing and witness digests."""
    edges = ",".join(f"{u}-{v}" for u, v in sorted(gs.base.edges))
    loops = ",".join(str(v) for v in sorted(gs.loops))
    return f"{gs.n}|{edges}|{loops}"


def instance_digest(gs: LoopedGraph) -> str:
    return hashlib.sha256(canonical_key(gs).encode("ascii")).hexdigest()[:12]


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    m: int
    sigma: int
    degrees_base: tuple[int, ...]
    degrees_looped: tuple[int, ...]
    max_degree: int
    min_degree: int
    average_degree: Fraction


def degree_summary(gs: LoopedGraph) -> DegreeSummary:
    if gs.n == 0:
        raise ValueError("degree summary needs at least one vertex")
    degs = gs.base.degrees
    return DegreeSummary(
        n=gs.n,
        m=gs.m,
        sigma=gs.sigma,
        degrees_base=degs,
        degrees_looped=gs.degrees,
        max_degree=max(degs),
        min_degree=min(degs),
        average_degree=Fraction(2 * gs.m, gs.n),
    )


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Iterable[int]) -> SimpleGraph:
    """Complete multipartite graph; parts occupy consecutive vertex ranges."""
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    n = offsets[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(offsets[a], offsets[a + 1]):
                for v in range(offsets[b], offsets[b + 1]):
                    edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


def family(name: str, **params) -> LoopedGraph:
    """Construct a named looped-graph family.

    Supported names (case-insensitive): ``kn_sigma`` (n, sigma),
    ``kn_hat`` (n), ``edgeless_full_loop`` (n), ``multipartite``
    (sizes, loops=()), ``kkxp`` (k, p, loops=()), ``k32_s``.
    """
    key = name.lower()
    if key == "kn_sigma":
        n, sigma = int(params.pop("n")), int(params.pop("sigma"))
        _no_extra(params)
        if n < 1 or not 0 <= sigma <= n:
            raise ValueError(f"kn_sigma needs 1 <= n and 0 <= sigma <= n, got n={n} sigma={sigma}")
        return make_looped(complete_graph(n), range(sigma))
    if key == "kn_hat":
        n = int(params.pop("n"))
        _no_extra(params)
        if n < 1:
            raise ValueError("kn_hat needs n >= 1")
        return make_looped(complete_graph(n), range(n))
    if key == "edgeless_full_loop":
        n = int(params.pop("n"))
        _no_extra(params)
        if n < 1:
            raise ValueError("edgeless_full_loop needs n >= 1")
        return make_looped(empty_graph(n), range(n))
    if key == "multipartite":
        sizes = params.pop("sizes")
        loops = params.pop("loops", ())
        _no_extra(params)
        return make_looped(complete_multipartite(sizes), loops)
    if key == "kkxp":
        k, p = int(params.pop("k")), int(params.pop("p"))
        loops = params.pop("loops", ())
        _no_extra(params)
        if k < 1 or p < 1:
            raise ValueError("kkxp needs k >= 1 and p >= 1")
        return make_looped(complete_multipartite([p] * k), loops)
    if key == "k32_s":
        _no_extra(params)
        return make_looped(complete_multipartite([3, 2]), range(3))
    raise ValueError(f"unknown family {name!r}")


def _no_extra(params: dict) -> None:
    if params:
        raise ValueError(f"unexpected family parameters: {sorted(params)}")


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def is_connected(g: SimpleGraph) -> bool:
    """True iff a single BFS from vertex 0 reaches every vertex."""
    if g.n < 1:
        raise ValueError("connectivity needs at least one vertex")
    seen = {0}
    queue = deque([0])
    adj = g.adjacency_sets
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def _check_subset(g: SimpleGraph, s: Iterable[int]) -> list[int]:
    verts = sorted(set(int(v) for v in s))
    if verts and not (0 <= verts[0] and verts[-1] < g.n):
        raise ValueError("vertex set not contained in the graph")
    return verts


def is_independent_set(g: SimpleGraph, s: Iterable[int]) -> bool:
    """Pairwise non-adjacency; empty sets and singletons count."""
    verts = _check_subset(g, s)
    return all(not g.has_edge(u, v) for u, v in combinations(verts, 2))


def is_clique(g: SimpleGraph, s: Iterable[int]) -> bool:
    """Pairwise adjacency; empty sets and singletons count."""
    verts = _check_subset(g, s)
    return all(g.has_edge(u, v) for u, v in combinations(verts, 2))


def is_bipartite(g: SimpleGraph) -> bool:
    color: dict[int, int] = {}
    adj = g.adjacency_sets
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _components(g: SimpleGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    adj = g.adjacency_sets
    for start in range(g.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def multipartite_parts(g: SimpleGraph) -> Optional[tuple[int, ...]]:
    """Part sizes if g is complete multipartite, else None.

    g is complete multipartite exactly when every connected component of its
    complement is a clique; the components are the parts.
    """
    comp = g.complement()
    parts = []
    for verts in _components(comp):
        k = len(verts)
        need = k * (k - 1) // 2
        have = sum(1 for u, v in combinations(verts, 2) if comp.has_edge(u, v))
        if have != need:
            return None
        parts.append(k)
    return tuple(sorted(parts))


def detect_regular_complete_multipartite(g: SimpleGraph) -> Optional[tuple[int, int]]:
    """(k, p) if g is the complete multipartite graph with k parts of size p."""
    parts = multipartite_parts(g)
    if parts is None or not parts:
        return None
    if len(set(parts)) != 1:
        return None
    return (len(parts), parts[0])


@dataclass(frozen=True)
class DegreeClassification:
    """Degree structure of the base graph relative to the loop set."""

    regular: bool
    bidegreed: bool          # degrees take exactly the two values k, k+1
    k: Optional[int]
    s_aligned: bool          # loop set == vertices of degree k (degenerately for regular graphs)
    bipartite: bool


def classify_bidegreed(gs: LoopedGraph) -> DegreeClassification:
    """Classify whether base degrees split as k on the loop set, k+1 off it.

    A regular graph qualifies only degenerately: with every vertex looped
    (k = r) or no vertex looped (k = r - 1), matching how the equality
    families of the radius bounds partition degrees by loop membership.
    """
    degs = gs.base.degrees
    values = sorted(set(degs))
    bip = is_bipartite(gs.base)
    if not values:
        return DegreeClassification(True, False, None, False, bip)
    regular = len(values) == 1
    bidegreed = len(values) == 2 and values[1] - values[0] == 1
    k: Optional[int] = None
    aligned = False
    if bidegreed:
        k = values[0]
        aligned = gs.loops == frozenset(v for v, d in enumerate(degs) if d == k)
    elif regular:
        r = values[0]
        if gs.sigma == gs.n and gs.n > 0:
            k, aligned = r, True
        elif gs.sigma == 0 and r >= 1:
            k, aligned = r - 1, True
    return DegreeClassification(regular, bidegreed, k, aligned, bip)
