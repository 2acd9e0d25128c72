"""Derived objects: complements, line graphs, and the associated matrices.

Matrix layouts are deterministic: ordinary edges in lexicographic
sorted-pair order, then loops in ascending vertex order, so tests can
compare matrices bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .graphcore import LoopedGraph, SimpleGraph, make_looped


def adjacency(gs: LoopedGraph) -> np.ndarray:
    """0/1 symmetric adjacency matrix; diagonal 1 exactly on the loop set."""
    if gs.n < 1:
        raise ValueError("adjacency needs at least one vertex")
    a = np.zeros((gs.n, gs.n), dtype=np.int64)
    for u, v in gs.base.edges:
        a[u, v] = 1
        a[v, u] = 1
    for v in gs.loops:
        a[v, v] = 1
    return a


def complement(gs: LoopedGraph, flip_loop_set: bool = False) -> LoopedGraph:
    """Complement of the base graph, loops unchanged.

    ``flip_loop_set=True`` selects the rival convention that also moves the
    loop set to its complement.  The default keeps the loop set, which is an
    involution and degenerates to the classical complement when no loops are
    present.
    """
    base = gs.base.complement()
    if flip_loop_set:
        return LoopedGraph(base, frozenset(range(gs.n)) - gs.loops)
    return LoopedGraph(base, gs.loops)


@dataclass(frozen=True)
class LoopedLineGraph:
    """Line graph of a looped graph.

    Vertices are the m ordinary edges (in canonical order) followed by the
    sigma loops; every loop-vertex carries a loop and the loop-vertices form
    an independent set.
    """

    graph: LoopedGraph
    edge_vertices: tuple[tuple[int, int], ...]
    loop_vertices: tuple[int, ...]


def line_graph(gs: LoopedGraph) -> LoopedLineGraph:
    """Vertices = edges + loops; adjacency = sharing exactly one endpoint.

    The loop at vertex v becomes a looped vertex adjacent to every edge
    incident with v; two loop-vertices are never adjacent.
    """
    edges = sorted(gs.base.edges)
    loops = sorted(gs.loops)
    m, s = len(edges), len(loops)
    total = m + s
    if total == 0:
        raise ValueError("line graph of a graph with no edges and no loops is empty")
    out_edges: list[tuple[int, int]] = []
    if m:
        earr = np.asarray(edges, dtype=np.int64)
        shared = (
            (earr[:, None, 0] == earr[None, :, 0])
            | (earr[:, None, 0] == earr[None, :, 1])
            | (earr[:, None, 1] == earr[None, :, 0])
            | (earr[:, None, 1] == earr[None, :, 1])
        )
        np.fill_diagonal(shared, False)
        for i, j in np.argwhere(np.triu(shared, 1)):
            out_edges.append((int(i), int(j)))
        for li, v in enumerate(loops):
            for j in np.flatnonzero((earr[:, 0] == v) | (earr[:, 1] == v)):
                out_edges.append((int(j), m + li))
    base = SimpleGraph.from_edges(total, out_edges)
    looped = make_looped(base, range(m, total))
    return LoopedLineGraph(looped, tuple(edges), tuple(loops))


def incidence(gs: LoopedGraph) -> np.ndarray:
    """Vertex-by-(edges then loops) 0/1 incidence matrix.

    Ordinary-edge columns carry two 1s, loop columns a single 1.
    """
    edges = sorted(gs.base.edges)
    loops = sorted(gs.loops)
    b = np.zeros((gs.n, len(edges) + len(loops)), dtype=np.int64)
    for j, (u, v) in enumerate(edges):
        b[u, j] = 1
        b[v, j] = 1
    for j, v in enumerate(loops):
        b[v, len(edges) + j] = 1
    return b


def signless_laplacian(gs: LoopedGraph) -> np.ndarray:
    """Off-diagonal adjacency of the base graph; diagonal d(v)+1 on the loop set."""
    q = adjacency(make_looped(gs.base, ()))
    for v in range(gs.n):
        q[v, v] = gs.base.degrees[v] + (1 if v in gs.loops else 0)
    return q


def ng_energy_aux_matrix(n: int, sigma: int) -> np.ndarray:
    """All-ones matrix shifted by the loop pattern: J + 2*I_S - (1 + 2*sigma/n)*I.

    This is the sum of the two centered adjacency matrices of a looped graph
    and its complement; it depends only on n and sigma.  Entries are exact
    Fractions with denominator n: off-diagonal 1, diagonal 2 - 2*sigma/n on
    the first sigma slots and -2*sigma/n elsewhere.
    """
    if n < 2 or not 0 <= sigma <= n:
        raise ValueError("need n >= 2 and 0 <= sigma <= n")
    mat = np.full((n, n), Fraction(1), dtype=object)
    on = Fraction(2 * (n - sigma), n)
    off = Fraction(-2 * sigma, n)
    for i in range(n):
        mat[i, i] = on if i < sigma else off
    return mat


def quotient_2block(mat: np.ndarray, s: Iterable[int]) -> np.ndarray:
    """2x2 quotient matrix of the partition (s, rest) of the row index set.

    Every block must have constant row sums (an equitable partition), checked
    exactly; entries are returned as Fractions.
    """
    a = np.asarray(mat)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    part1 = sorted(set(int(v) for v in s))
    if part1 and not (0 <= part1[0] and part1[-1] < n):
        raise ValueError("partition indices out of range")
    part2 = sorted(set(range(n)) - set(part1))
    if not part1 or not part2:
        raise ValueError("both partition classes must be nonempty")
    out = np.empty((2, 2), dtype=object)
    for bi, rows in enumerate((part1, part2)):
        for bj, cols in enumerate((part1, part2)):
            sums = [sum((Fraction(a[r, c]) for c in cols), Fraction(0)) for r in rows]
            if any(x != sums[0] for x in sums):
                raise ValueError(f"block ({bi},{bj}) does not have constant row sums")
            out[bi, bj] = sums[0]
    return out
