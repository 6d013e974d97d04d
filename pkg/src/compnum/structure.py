"""Structural analysis: holes, cliques, and the input-class hypotheses.

The toolkit targets graphs whose holes (chordless cycles of length >= 4)
are pairwise edge-disjoint and which carry at most one maximal clique that
is not a single edge.  This module enumerates the relevant structure,
checks those hypotheses, and implements the selection machinery the
recursive witness construction relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceededError, LemmaCondViolation, PreconditionError
from .graphs import (
    Cycle,
    Graph,
    canonical_edge,
    connected_components,
    cycle_key,
    edge_key,
    is_connected,
    shortest_path_avoiding,
    vertex_key,
)

DEFAULT_SEARCH_BUDGET = 10**6
DEFAULT_HOLE_CAP = 100_000

READINGS = ("literal", "restricted")


@dataclass(frozen=True)
class Hole:
    """A chordless cycle of length >= 4 inside some host graph."""

    cycle: Cycle

    @property
    def vertices(self) -> tuple:
        return self.cycle.vertices

    @property
    def length(self) -> int:
        return self.cycle.length

    @property
    def edge_set(self) -> frozenset:
        return self.cycle.edge_set

    def edges(self) -> list:
        return self.cycle.edges()

    def __contains__(self, v) -> bool:
        return v in self.cycle.vertices


def hole_key(h: Hole):
    return cycle_key(h.cycle)


@dataclass(frozen=True)
class Clique:
    """Complete vertex set, members sorted canonically."""

    members: tuple

    def __init__(self, members):
        raw = tuple(members)
        ms = tuple(sorted(set(raw), key=vertex_key))
        if len(ms) != len(raw):
            raise PreconditionError(f"clique members repeat: {raw!r}")
        object.__setattr__(self, "members", ms)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def non_edge(self) -> bool:
        """True when the clique has three or more vertices."""
        return len(self.members) >= 3

    @property
    def edge_set(self) -> frozenset:
        ms = self.members
        return frozenset(canonical_edge(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms)))

    def __contains__(self, v) -> bool:
        return v in self.members

    def __iter__(self):
        return iter(self.members)


def clique_key(c: Clique):
    return tuple(vertex_key(v) for v in c.members)


def enumerate_holes(g: Graph, *, max_nodes: int = DEFAULT_SEARCH_BUDGET, max_holes: int = DEFAULT_HOLE_CAP) -> list[Hole]:
    """All holes of g, canonically sorted.

    Extends simple induced paths anchored at the least vertex of each
    candidate hole; a path closes into a hole exactly when the next vertex
    is a neighbor of the anchor and of nothing else on the path.  Each hole
    is produced once, already in canonical orientation.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    holes: list[Hole] = []
    nodes = 0

    def extend(path: list, on_path: set, anchor, anchor_key):
        nonlocal nodes
        last = path[-1]
        internals = path[1:-1]
        for w in g.neighbors(last):
            if vertex_key(w) <= anchor_key or w in on_path:
                continue
            if w in adj[anchor]:
                # may only close, never pass through, or the anchor edge would chord
                if len(path) >= 3 and vertex_key(path[1]) < vertex_key(w):
                    if not any(w in adj[x] for x in internals):
                        holes.append(Hole(Cycle(tuple(path) + (w,))))
                        if len(holes) > max_holes:
                            raise BudgetExceededError(
                                f"hole cap {max_holes} exceeded", nodes=nodes
                            )
                continue
            if any(w in adj[x] for x in internals):
                continue
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceededError(f"hole search budget {max_nodes} exceeded", nodes=nodes)
            path.append(w)
            on_path.add(w)
            extend(path, on_path, anchor, anchor_key)
            path.pop()
            on_path.remove(w)

    for a in g.vertices:
        ka = vertex_key(a)
        for v1 in g.neighbors(a):
            if vertex_key(v1) <= ka:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceededError(f"hole search budget {max_nodes} exceeded", nodes=nodes)
            extend([a, v1], {a, v1}, a, ka)
    holes.sort(key=hole_key)
    return holes


def enumerate_maximal_cliques(g: Graph, *, max_nodes: int = DEFAULT_SEARCH_BUDGET) -> list[Clique]:
    """Maximal cliques via pivoted Bron-Kerbosch, canonically sorted."""
    adj = {v: frozenset(g.neighbors(v)) for v in g.vertices}
    out: list[Clique] = []
    nodes = 0

    def bk(r: set, p: set, x: set):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError(f"clique search budget {max_nodes} exceeded", nodes=nodes)
        if not p and not x:
            out.append(Clique(r))
            return
        pivot = max(sorted(p | x, key=vertex_key), key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot], key=vertex_key):
            bk(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if g.vertices:
        bk(set(), set(g.vertices), set())
    out.sort(key=clique_key)
    return out


def _mcs_order(g: Graph) -> list:
    """Maximum-cardinality-search visit order; ties go to the smallest key."""
    weight = {v: 0 for v in g.vertices}
    remaining = set(g.vertices)
    order = []
    while remaining:
        v = max(sorted(remaining, key=vertex_key), key=lambda u: weight[u])
        order.append(v)
        remaining.remove(v)
        for w in g.neighbors(v):
            if w in remaining:
                weight[w] += 1
    return order


def is_chordal(g: Graph):
    """(True, perfect elimination order) or (False, witnessing hole)."""
    peo = tuple(reversed(_mcs_order(g)))
    pos = {v: i for i, v in enumerate(peo)}
    ok = True
    for i, v in enumerate(peo):
        later = [u for u in g.neighbors(v) if pos[u] > i]
        if len(later) <= 1:
            continue
        u0 = min(later, key=lambda u: pos[u])
        rest = set(later) - {u0}
        if not rest <= set(g.neighbors(u0)):
            ok = False
            break
    if ok:
        return True, peo
    holes = enumerate_holes(g)
    if not holes:  # cannot happen: a failed elimination order implies a hole
        raise PreconditionError("elimination order failed on a hole-free graph")
    return False, holes[0]


WINDOW_DEGENERATE = "degenerate"
WINDOW_EQ_TWO = "equals_two"
WINDOW_INTERIOR = "interior"
WINDOW_EQ_H_PLUS_ONE = "equals_h_plus_one"
WINDOW_ABOVE = "above"


@dataclass
class HypothesisReport:
    """Everything the constructions need to know about an input graph."""

    holes: tuple
    h: int
    maximal_cliques: tuple
    omega: int
    K: Clique | None
    holes_pairwise_edge_disjoint: bool
    at_most_one_non_edge_maximal_clique: bool
    connected: bool
    omega_window: str

    @property
    def flags(self) -> dict:
        return {
            "holes_pairwise_edge_disjoint": self.holes_pairwise_edge_disjoint,
            "at_most_one_non_edge_maximal_clique": self.at_most_one_non_edge_maximal_clique,
            "connected": self.connected,
        }

    @property
    def passes(self) -> bool:
        return (
            self.holes_pairwise_edge_disjoint
            and self.at_most_one_non_edge_maximal_clique
            and self.connected
        )

    def to_json_dict(self) -> dict:
        return {
            "h": self.h,
            "omega": self.omega,
            "holes": [list(h.vertices) for h in self.holes],
            "maximal_cliques": [list(c.members) for c in self.maximal_cliques],
            "K": list(self.K.members) if self.K is not None else None,
            "flags": self.flags,
            "omega_window": self.omega_window,
            "passes": self.passes,
        }


def _omega_window(omega: int, h: int) -> str:
    if omega <= 1 or h == 0:
        return WINDOW_DEGENERATE
    if omega > h + 1:
        return WINDOW_ABOVE
    if omega == h + 1:
        return WINDOW_EQ_H_PLUS_ONE
    if omega == 2:
        return WINDOW_EQ_TWO
    return WINDOW_INTERIOR


def validate_hypotheses(g: Graph, *, max_nodes: int = DEFAULT_SEARCH_BUDGET) -> HypothesisReport:
    """Enumerate holes and maximal cliques and check the class hypotheses.

    Degenerate inputs are legal: a hole-free graph reports h = 0, and K is
    absent whenever the count of non-edge maximal cliques differs from one.
    """
    holes = tuple(enumerate_holes(g, max_nodes=max_nodes))
    cliques = tuple(enumerate_maximal_cliques(g, max_nodes=max_nodes))
    omega = max((c.size for c in cliques), default=0)
    non_edge = [c for c in cliques if c.non_edge]
    K = non_edge[0] if len(non_edge) == 1 else None
    disjoint = True
    for i in range(len(holes)):
        ei = holes[i].edge_set
        for j in range(i + 1, len(holes)):
            if ei & holes[j].edge_set:
                disjoint = False
                break
        if not disjoint:
            break
    return HypothesisReport(
        holes=holes,
        h=len(holes),
        maximal_cliques=cliques,
        omega=omega,
        K=K,
        holes_pairwise_edge_disjoint=disjoint,
        at_most_one_non_edge_maximal_clique=len(non_edge) <= 1,
        connected=is_connected(g),
        omega_window=_omega_window(omega, len(holes)),
    )


@dataclass
class ChordedCycleAnalysis:
    """Outcome of splitting a chorded cycle along one chord."""

    kind: str  # "triangle" | "two_holes"
    chord: tuple
    triangle: Clique | None = None
    holes: tuple | None = None

    @property
    def shared_edge(self) -> tuple | None:
        return self.chord if self.kind == "two_holes" else None


def _has_chord(g: Graph, c: Cycle) -> bool:
    vs = c.vertices
    es = c.edge_set
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            e = canonical_edge(vs[i], vs[j])
            if e in es:
                continue
            if e in g.edge_set:
                return True
    return False


def is_chordless_cycle(g: Graph, c: Cycle) -> bool:
    """True when c is a cycle of g with no chord."""
    return c.is_cycle_in(g) and not _has_chord(g, c)


def analyze_chorded_cycle(g: Graph, c: Cycle, chord) -> ChordedCycleAnalysis:
    """Split a chorded cycle into a triangle or two holes sharing the chord.

    Walks the two cycle sections between the chord endpoints; the shortest
    endpoint-to-endpoint path inside a section, taken together with the
    chord, is either a triangle (path of two edges) or a hole.  The result
    is re-checked structurally before being returned.
    """
    ce = canonical_edge(*chord)
    if not c.is_cycle_in(g):
        raise PreconditionError(f"{c!r} is not a cycle of the graph")
    if c.length < 4:
        raise PreconditionError("chord analysis needs a cycle of length >= 4")
    if ce not in g.edge_set:
        raise PreconditionError(f"chord {ce!r} is not an edge of the graph")
    vs = c.vertices
    pos = {v: i for i, v in enumerate(vs)}
    if ce[0] not in pos or ce[1] not in pos:
        raise PreconditionError(f"chord {ce!r} endpoints must lie on the cycle")
    i, j = sorted((pos[ce[0]], pos[ce[1]]))
    if j - i == 1 or (i == 0 and j == len(vs) - 1):
        raise PreconditionError(f"{ce!r} is a cycle edge, not a chord")
    sections = (vs[i : j + 1], vs[j:] + vs[: i + 1])
    paths = []
    for sec in sections:
        sub = g.subgraph(sec).remove_edge(*ce)
        p = shortest_path_avoiding(sub, sec[0], {sec[-1]})
        if p is None:  # the section itself is a path, so this cannot happen
            raise PreconditionError("cycle section lost its endpoints")
        paths.append(p)
    for p in paths:
        if p.length == 2:
            tri = Clique(p.vertices)
            for e in tri.edge_set:
                if e not in g.edge_set:
                    raise PreconditionError(f"triangle check failed on {e!r}")
            return ChordedCycleAnalysis(kind="triangle", chord=ce, triangle=tri)
    holes = []
    for p in paths:
        cyc = Cycle(p.vertices)
        if not is_chordless_cycle(g.subgraph(c.vertices), cyc):
            raise PreconditionError(f"section path {p!r} did not close into a hole")
        holes.append(Hole(cyc))
    shared = holes[0].edge_set & holes[1].edge_set
    if shared != {ce}:
        raise PreconditionError(f"holes share {sorted(shared, key=edge_key)!r}, expected only the chord")
    holes.sort(key=hole_key)
    return ChordedCycleAnalysis(kind="two_holes", chord=ce, holes=tuple(holes))


def is_hole_by_clique_criterion(report: HypothesisReport, c: Cycle) -> bool:
    """Clique-overlap test: a cycle is a hole iff it meets K in <= 2 vertices.

    Valid only on graphs passing the hypotheses with K present; the caller
    supplies the report so repeated queries reuse the enumeration.
    """
    if report.K is None:
        raise PreconditionError("criterion needs the designated clique K")
    if not report.passes:
        raise PreconditionError("criterion needs the hypothesis flags to pass")
    overlap = sum(1 for v in c.vertices if v in report.K)
    return overlap <= 2


def k_avoiding_path_exists(g: Graph, clique, v, hole: Hole, reading: str = "literal") -> bool:
    """Is there a clique-avoiding path from clique vertex v to the hole?

    A qualifying path has length >= 1, is not itself an edge of the clique,
    and uses no clique vertex internally.  Under the literal reading the far
    endpoint may be any hole vertex; the restricted reading additionally
    bars endpoints inside the clique.
    """
    if reading not in READINGS:
        raise PreconditionError(f"reading must be one of {READINGS}, got {reading!r}")
    kset = set(clique.members if isinstance(clique, Clique) else clique)
    if v not in kset:
        raise PreconditionError(f"{v!r} is not a clique vertex")
    targets = set(hole.vertices)
    # vertices reachable from v along paths whose internals avoid the clique
    reach: set = set()
    stack = [w for w in g.neighbors(v) if w not in kset]
    while stack:
        u = stack.pop()
        if u in reach:
            continue
        reach.add(u)
        for w in g.neighbors(u):
            if w not in kset and w not in reach:
                stack.append(w)
    if reach & targets:
        return True
    if reading == "literal":
        for x in targets & (kset - {v}):
            # a longer route may end on a clique vertex of the hole, but the
            # single clique edge itself never qualifies
            if set(g.neighbors(x)) & reach:
                return True
    return False


@dataclass
class AvoidanceGraph:
    """Bipartite contact profile between clique vertices and holes.

    multiplicity[(v, j)] = 2 when v is a cut vertex separating the rest of
    the clique from hole j, 1 when some clique-avoiding path reaches the
    hole anyway, 0 when no such path exists.  Diagnostic only; the vertex
    selector re-checks its conditions directly.
    """

    clique_vertices: tuple
    holes: tuple
    reading: str
    multiplicity: dict = field(default_factory=dict)

    def r(self, v, j: int) -> int:
        return self.multiplicity.get((v, j), 0)

    def vertex_degree(self, v) -> int:
        return sum(self.r(v, j) for j in range(len(self.holes)))

    def hole_degree(self, j: int) -> int:
        return sum(self.r(v, j) for v in self.clique_vertices)

    def vertex_degrees(self) -> dict:
        return {v: self.vertex_degree(v) for v in self.clique_vertices}

    def hole_degrees(self) -> dict:
        return {j: self.hole_degree(j) for j in range(len(self.holes))}


def build_avoidance_graph(g: Graph, report: HypothesisReport, reading: str = "restricted") -> AvoidanceGraph:
    """Multiplicity profile of clique-to-hole avoiding paths."""
    if reading not in READINGS:
        raise PreconditionError(f"reading must be one of {READINGS}, got {reading!r}")
    if report.K is None:
        raise PreconditionError("avoidance graph needs the designated clique K")
    K = report.K
    mult: dict = {}
    comp_cache: dict = {}
    for v in K.members:
        for j, hole in enumerate(report.holes):
            if not k_avoiding_path_exists(g, K, v, hole, reading):
                continue
            if v not in comp_cache:
                comps = connected_components(g.remove_vertex(v))
                where = {}
                for idx, comp in enumerate(comps):
                    for u in comp:
                        where[u] = idx
                comp_cache[v] = where
            where = comp_cache[v]
            k_rep = next(u for u in K.members if u != v)
            h_rep = next(u for u in hole.vertices if u != v)
            mult[(v, j)] = 2 if where[k_rep] != where[h_rep] else 1
    return AvoidanceGraph(
        clique_vertices=K.members,
        holes=report.holes,
        reading=reading,
        multiplicity=mult,
    )


def select_clique_vertex(g: Graph, report: HypothesisReport):
    """Pick the clique vertex the recursive construction peels off.

    Scans clique vertices in identifier order: first anyone with no
    clique-avoiding path to any hole (condition "a", literal reading), then
    anyone lying on exactly one hole and sharing one of its edges with the
    clique (condition "b").  Raises LemmaCondViolation with the instance
    attached when neither pass finds a vertex.
    """
    K = report.K
    if K is None:
        raise PreconditionError("selection needs the designated clique K")
    if not report.passes:
        raise PreconditionError("selection needs the hypothesis flags to pass")
    if report.omega != report.h + 1 or K.size != report.h + 1:
        raise PreconditionError(
            f"selection expects clique number h+1 (omega={report.omega}, h={report.h}, |K|={K.size})"
        )
    for v in K.members:
        if all(not k_avoiding_path_exists(g, K, v, hole, "literal") for hole in report.holes):
            return v, "a"
    k_edges = K.edge_set
    for v in K.members:
        containing = [hole for hole in report.holes if v in hole]
        if len(containing) != 1:
            continue
        hole = containing[0]
        if any(e in k_edges and v in e for e in hole.edges()):
            return v, "b"
    raise LemmaCondViolation(
        "no clique vertex satisfies condition (a) or (b)", graph=g, report=report
    )


def edge_removal_hole_report(g: Graph, report: HypothesisReport, e):
    """Holes of g - e and the ones not present in g, both sorted.

    Only defined for edges lying on some hole; useful for checking how the
    hole census shifts under single-edge removal.
    """
    ce = canonical_edge(*e)
    if not any(ce in hole.edge_set for hole in report.holes):
        raise PreconditionError(f"edge {ce!r} lies on no hole")
    after = enumerate_holes(g.remove_edge(*ce))
    before = set(report.holes)
    new = [h for h in after if h not in before]
    return after, new
