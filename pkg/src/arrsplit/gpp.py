"""Existence of a decone with a general position partition.

A cross pair of lines (one from each part) survives in general position
exactly when the two lines share no point of multiplicity >= 3 of the full
projective arrangement: a pair meeting ON the chosen infinity line L becomes
parallel, but then L and the pair already form a triple point.  The predicate
therefore reduces to disconnectedness of the sharing graph below, which
`gpp_oracle` re-derives by brute force from the definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLargeError, TooSmallError
from .fangraph import (
    FanGraph,
    bridge_edges,
    build_fan_graph,
    connected_vertex_components,
    is_connected,
    lemma_multipt_witness,
    line_vertex_sets,
    m3_components_excluding,
    norepeats_witness,
)
from .incidence import (
    IncidenceData,
    decone,
    decone_index,
    is_general_position_partition,
)


@dataclass(frozen=True)
class GppWitness:
    """A deconing line and a bipartition of the remaining lines (original
    arrangement indices) whose images are in general position."""

    infinity_line: int
    part1: tuple[int, ...]
    part2: tuple[int, ...]


@dataclass(frozen=True)
class SharingGraph:
    """Lines (minus one excluded index) joined whenever they share a point of
    multiplicity >= 3 of the full arrangement."""

    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def components(self) -> list[tuple[int, ...]]:
        adj: dict[int, set[int]] = {v: set() for v in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for start in self.nodes:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        comps.sort()
        return comps


def sharing_graph(inc: IncidenceData, exclude: int) -> SharingGraph:
    """The excluded line still forces adjacency: a triple point it shares with
    two other lines marks that cross pair as degenerate."""
    n = inc.n_lines
    if n < 2:
        raise TooSmallError("sharing graph needs at least two lines")
    if not 0 <= exclude < n:
        raise IndexError(f"line index {exclude} out of range for {n} lines")
    nodes = tuple(i for i in range(n) if i != exclude)
    edges = set()
    for rec in inc.points:
        if rec.multiplicity < 3:
            continue
        members = [i for i in rec.lines if i != exclude]
        for a_idx in range(len(members)):
            for b_idx in range(a_idx + 1, len(members)):
                edges.add((members[a_idx], members[b_idx]))
    return SharingGraph(nodes, frozenset(edges))


def gpp_witness_at(inc: IncidenceData, infinity_line: int) -> GppWitness | None:
    """Witness deconing at a specific line, or None; part1 is the sharing
    graph component with the least line index."""
    comps = sharing_graph(inc, infinity_line).components()
    if len(comps) < 2:
        return None
    part1 = comps[0]
    part2 = tuple(sorted(i for comp in comps[1:] for i in comp))
    return GppWitness(infinity_line, part1, part2)


def has_gpp_decone(inc: IncidenceData) -> GppWitness | None:
    """First witness in line-index order, or None when no decone admits a
    general position partition."""
    if inc.n_lines < 3:
        raise TooSmallError("needs at least three lines")
    for line in range(inc.n_lines):
        w = gpp_witness_at(inc, line)
        if w is not None:
            return w
    return None


def witness_is_valid(inc: IncidenceData, w: GppWitness) -> bool:
    """Check a witness against the definition on the actual decone."""
    aff = decone(inc.arrangement, w.infinity_line)
    p1 = [decone_index(i, w.infinity_line) for i in w.part1]
    p2 = [decone_index(i, w.infinity_line) for i in w.part2]
    return is_general_position_partition(aff, p1, p2)


def gpp_oracle(inc: IncidenceData, max_lines: int = 12) -> GppWitness | None:
    """Exhaustive search over every infinity line and every bipartition of the
    rest, testing the definition directly on the decone."""
    n = inc.n_lines
    if n > max_lines:
        raise TooLargeError(f"{n} lines exceeds the exhaustive bound {max_lines}")
    if n < 3:
        raise TooSmallError("needs at least three lines")
    for line in range(n):
        aff = decone(inc.arrangement, line)
        rest = [i for i in range(n) if i != line]
        first, others = rest[0], rest[1:]
        for mask in range(2 ** len(others) - 1):
            part1 = [first] + [o for k, o in enumerate(others) if mask >> k & 1]
            part2 = [o for k, o in enumerate(others) if not mask >> k & 1]
            p1 = [decone_index(i, line) for i in part1]
            p2 = [decone_index(i, line) for i in part2]
            if is_general_position_partition(aff, p1, p2):
                return GppWitness(line, tuple(part1), tuple(part2))
    return None


@dataclass(frozen=True)
class LemmaResult:
    name: str
    fires: bool
    witness: GppWitness | None = None
    detail: str = ""


@dataclass(frozen=True)
class CorollaryStatus:
    """Necessary conditions when no decone has a general position partition:
    the graph is connected, every edge lies in a simple circuit, and every
    line carries a vertex."""

    connected: bool
    every_edge_in_circuit: bool
    every_line_has_vertex: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.connected and self.every_edge_in_circuit and self.every_line_has_vertex
        )


@dataclass(frozen=True)
class LemmaPipelineReport:
    fan: FanGraph
    disconnected: LemmaResult
    multi_pt: LemmaResult
    simple: LemmaResult
    norepeats: LemmaResult
    corollary: CorollaryStatus

    def fired(self) -> list[LemmaResult]:
        return [
            r
            for r in (self.disconnected, self.multi_pt, self.simple, self.norepeats)
            if r.fires
        ]


def _lines_of_vertices(inc: IncidenceData, vertex_ids) -> set[int]:
    lines: set[int] = set()
    for pid in vertex_ids:
        lines.update(inc.points[pid].lines)
    return lines


def lemma_pipeline_report(inc: IncidenceData) -> LemmaPipelineReport:
    """Evaluate each sufficient criterion on the canonical graph, constructing
    the corresponding witness whenever one fires.

    Connectivity and the separating-line criterion are independent of the
    per-line orderings, so the canonical graph decides them for the whole
    family; bridges are reported for the canonical graph.
    """
    labels = inc.arrangement.labels()
    n = inc.n_lines
    all_lines = set(range(n))
    fan = build_fan_graph(inc)
    connected = is_connected(fan)
    bridges = bridge_edges(fan)
    svecs = line_vertex_sets(inc)
    lines_without_vertex = [i for i in range(n) if not svecs[i]]

    # disconnected graph: the lines of one component versus everything else
    if not connected:
        comp = connected_vertex_components(fan)[0]
        comp_lines = _lines_of_vertices(inc, comp)
        rest = sorted(all_lines - comp_lines)
        assert rest, "a component's lines cannot cover a disconnected graph"
        infinity = min(comp_lines)
        disconnected = LemmaResult(
            "disconnected",
            True,
            GppWitness(
                infinity, tuple(sorted(comp_lines - {infinity})), tuple(rest)
            ),
            "graph has %d components" % len(connected_vertex_components(fan)),
        )
    else:
        disconnected = LemmaResult("disconnected", False)

    # a line meeting everything in double points splits off as a singleton
    multi_line = lemma_multipt_witness(inc)
    if multi_line is not None:
        infinity = min(i for i in range(n) if i != multi_line)
        multi_pt = LemmaResult(
            "multi_pt",
            True,
            GppWitness(
                infinity,
                (multi_line,),
                tuple(sorted(all_lines - {infinity, multi_line})),
            ),
            f"line {labels[multi_line]} carries only double points",
        )
    else:
        multi_pt = LemmaResult("multi_pt", False)

    # bridge edge: the two sides of the bridge, deconed at the bridge's line
    if connected and not lines_without_vertex and bridges:
        e = bridges[0]
        eidx = fan.edges.index(e)
        trimmed = FanGraph(
            fan.vertices,
            fan.orderings,
            fan.edges[:eidx] + fan.edges[eidx + 1 :],
        )
        comps = connected_vertex_components(trimmed)
        side_u = next(c for c in comps if e.u in c)
        b_u = _lines_of_vertices(inc, side_u) - {e.line}
        b_w = all_lines - {e.line} - b_u
        assert b_w == _lines_of_vertices(
            inc, next(c for c in comps if e.v in c)
        ) - {e.line}, "bridge sides must split the remaining lines"
        simple = LemmaResult(
            "simple",
            True,
            GppWitness(e.line, tuple(sorted(b_u)), tuple(sorted(b_w))),
            f"edge on {labels[e.line]} lies in no simple circuit",
        )
    else:
        simple = LemmaResult("simple", False)

    # separating line: vertices v, w split once the line's own edges are gone
    nw = norepeats_witness(inc)
    if nw is not None:
        line, v, w = nw
        comps = m3_components_excluding(inc, line)
        side_v = next(c for c in comps if v in c)
        b_v = _lines_of_vertices(inc, side_v) - {line}
        b_w = all_lines - {line} - b_v
        norepeats = LemmaResult(
            "norepeats",
            True,
            GppWitness(line, tuple(sorted(b_v)), tuple(sorted(b_w))),
            f"line {labels[line]} separates {inc.points[v].point} from {inc.points[w].point}",
        )
    else:
        norepeats = LemmaResult("norepeats", False)

    corollary = CorollaryStatus(connected, not bridges, not lines_without_vertex)
    return LemmaPipelineReport(fan, disconnected, multi_pt, simple, norepeats, corollary)
