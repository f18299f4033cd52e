"""Multigraphs joining consecutive high-multiplicity points along each line.

Vertices are the points of multiplicity >= 3 (referred to by their point id
in the IncidenceData).  Each line contributes a path through its vertices for
a chosen per-line ordering; different orderings give different graphs, but
the vertex set, the per-line edge counts, and connectivity never change.
Reversing one line's ordering reproduces the same edge multiset, so orderings
are always enumerated modulo reversal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Mapping, NamedTuple

from .errors import BadOrderingError
from .incidence import IncidenceData


class FanEdge(NamedTuple):
    line: int
    u: int
    v: int


@dataclass(frozen=True)
class FanGraph:
    """One choice of per-line orderings and the resulting edge multiset."""

    vertices: tuple[int, ...]
    orderings: dict[int, tuple[int, ...]]
    edges: tuple[FanEdge, ...]

    def edge_multiset(self) -> tuple[FanEdge, ...]:
        return tuple(sorted(self.edges))

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> list of (edge index, opposite vertex)."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices}
        for idx, e in enumerate(self.edges):
            adj[e.u].append((idx, e.v))
            adj[e.v].append((idx, e.u))
        return adj


def line_vertex_sets(inc: IncidenceData) -> dict[int, tuple[int, ...]]:
    """line index -> ids of its multiplicity >= 3 points, in id order."""
    sets: dict[int, list[int]] = {i: [] for i in range(inc.n_lines)}
    for pid in inc.point_ids(3):
        for line in inc.points[pid].lines:
            sets[line].append(pid)
    return {i: tuple(v) for i, v in sets.items()}


def build_fan_graph(
    inc: IncidenceData, ordering: Mapping[int, Iterable[int]] | None = None
) -> FanGraph:
    """Build the graph for the canonical (lexicographic) orderings, or for an
    explicit per-line permutation; lines missing from `ordering` stay
    canonical."""
    svecs = line_vertex_sets(inc)
    chosen: dict[int, tuple[int, ...]] = {}
    if ordering is not None:
        for line, perm in ordering.items():
            if line not in svecs or not svecs[line]:
                raise BadOrderingError(f"line {line} carries no graph vertices")
            perm = tuple(perm)
            if sorted(perm) != sorted(svecs[line]):
                raise BadOrderingError(
                    f"ordering for line {line} is not a permutation of its vertices"
                )
            chosen[line] = perm
    vertices = inc.point_ids(3)
    edges: list[FanEdge] = []
    for line in range(inc.n_lines):
        pts = chosen.get(line, svecs[line])
        for a, b in zip(pts, pts[1:]):
            edges.append(FanEdge(line, min(a, b), max(a, b)))
    orderings = {line: chosen.get(line, svecs[line]) for line in svecs if svecs[line]}
    return FanGraph(vertices, orderings, tuple(edges))


@dataclass(frozen=True)
class FanFamily:
    graphs: tuple[FanGraph, ...]
    truncated: bool
    total: int


def family_size(inc: IncidenceData) -> int:
    """Number of distinct graphs: product over lines of |S_i|!/2 (for |S_i| >= 2)."""
    total = 1
    for pts in line_vertex_sets(inc).values():
        if len(pts) >= 2:
            total *= math.factorial(len(pts)) // 2
    return total


def enumerate_fan_graphs(inc: IncidenceData, max_count: int = 10000) -> FanFamily:
    """All graphs for all per-line orderings modulo reversal, truncated (with a
    flag) once max_count graphs have been produced."""
    if max_count < 1:
        raise ValueError("max_count must be at least 1")
    svecs = line_vertex_sets(inc)
    lines = [i for i in sorted(svecs) if len(svecs[i]) >= 2]
    per_line: list[list[tuple[int, ...]]] = []
    for i in lines:
        pts = svecs[i]
        if len(pts) == 2:
            per_line.append([pts])
        else:
            # reversal classes: keep the representative with first < last
            per_line.append([p for p in permutations(pts) if p[0] < p[-1]])
    total = family_size(inc)
    graphs = []
    for combo in product(*per_line):
        if len(graphs) >= max_count:
            return FanFamily(tuple(graphs), True, total)
        graphs.append(build_fan_graph(inc, dict(zip(lines, combo))))
    return FanFamily(tuple(graphs), False, total)


def is_connected(g: FanGraph) -> bool:
    """Multigraph connectivity; graphs with at most one vertex count as connected."""
    if len(g.vertices) <= 1:
        return True
    adj = g.adjacency()
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for _, w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def connected_vertex_components(g: FanGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for _, w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps


def bridge_edges(g: FanGraph) -> list[FanEdge]:
    """All bridges of the multigraph, in edge order.

    Parallel edges traverse by edge index, so an edge with a parallel
    companion is never reported.
    """
    adj = g.adjacency()
    pre: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = 0
    bridges: set[int] = set()
    for root in g.vertices:
        if root in pre:
            continue
        # iterative DFS; each frame remembers the edge index used to enter
        stack: list[tuple[int, int, Iterable]] = [(root, -1, iter(adj[root]))]
        pre[root] = low[root] = counter
        counter += 1
        while stack:
            v, in_edge, it = stack[-1]
            advanced = False
            for eidx, w in it:
                if eidx == in_edge:
                    continue
                if w not in pre:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eidx, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], pre[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > pre[parent]:
                    bridges.add(in_edge)
    return [g.edges[i] for i in sorted(bridges)]


def lemma_multipt_witness(inc: IncidenceData) -> int | None:
    """A line carrying no multiplicity >= 3 point, in an arrangement of at
    least three lines; None otherwise."""
    if inc.n_lines < 3:
        return None
    svecs = line_vertex_sets(inc)
    for i in range(inc.n_lines):
        if not svecs[i]:
            return i
    return None


def m3_components_excluding(inc: IncidenceData, line: int) -> list[tuple[int, ...]]:
    """Components of the hypergraph on multiplicity >= 3 points whose
    hyperedges are the vertex sets of every line except `line`.

    Each line's edges form a path spanning exactly its vertices, so for every
    choice of orderings this equals reachability once `line`'s edges are
    removed.
    """
    svecs = line_vertex_sets(inc)
    parent = {pid: pid for pid in inc.point_ids(3)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h, pts in svecs.items():
        if h == line or len(pts) < 2:
            continue
        anchor = find(pts[0])
        for p in pts[1:]:
            parent[find(p)] = anchor
    comps: dict[int, list[int]] = {}
    for pid in parent:
        comps.setdefault(find(pid), []).append(pid)
    out = [tuple(sorted(c)) for c in comps.values()]
    out.sort()
    return out


def norepeats_witness(inc: IncidenceData) -> tuple[int, int, int] | None:
    """A line L with two of its vertices in different components once L's
    edges are removed, as (L, v, w); None if no line separates two of its own
    vertices.

    For such a pair, any circuit through a v-w edge on L must re-enter L, in
    every choice of orderings.
    """
    svecs = line_vertex_sets(inc)
    for line in range(inc.n_lines):
        pts = svecs[line]
        if len(pts) < 2:
            continue
        comps = m3_components_excluding(inc, line)
        comp_of = {pid: k for k, comp in enumerate(comps) for pid in comp}
        for a_idx in range(len(pts)):
            for b_idx in range(a_idx + 1, len(pts)):
                v, w = sorted((pts[a_idx], pts[b_idx]))
                if comp_of[v] != comp_of[w]:
                    return (line, v, w)
    return None


def to_dot(inc: IncidenceData, g: FanGraph) -> str:
    """Graphviz text: vertices labeled by point coordinates, edges by line label."""
    labels = inc.arrangement.labels()
    out = ["graph fan {"]
    for v in g.vertices:
        out.append(f'  p{v} [label="{inc.points[v].point}"];')
    for e in g.edges:
        out.append(f'  p{e.u} -- p{e.v} [label="{labels[e.line]}"];')
    out.append("}")
    return "\n".join(out) + "\n"
