"""Witness constructions.

Every builder returns a Witness whose competition graph is the input graph
plus isolated added vertices, re-verified before it is handed back (switch
off with BuilderOptions.verify_each_step for speed).  The recursive
builders assert each structural claim they depend on and raise
ConstructionError carrying the offending graph when one fails, rather than
producing an unverified digraph.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .competition import (
    ORACLE_DEFAULT_BUDGET,
    Witness,
    competition_graph,
    exact_competition_number,
    is_acyclic,
    verify_witness,
)
from .errors import (
    ConstructionError,
    HypothesisAnomaly,
    PreconditionError,
    UnsupportedClassError,
)
from .graphs import (
    Digraph,
    Graph,
    canonical_edge,
    connected_components,
    edge_key,
    is_connected,
    vertex_key,
)
from .structure import (
    HypothesisReport,
    is_chordal,
    select_clique_vertex,
    validate_hypotheses,
)


class FreshNames:
    """Allocator of added-vertex identifiers, disjoint from a reserved set.

    One allocator is threaded through a whole construction tree so pasted
    pieces can never collide on names.
    """

    def __init__(self, reserved=(), prefix: str = "$k"):
        self._taken = {v for v in reserved if isinstance(v, str)}
        self._prefix = prefix
        self._next = 0

    def take(self, count: int) -> list[str]:
        out: list[str] = []
        while len(out) < count:
            name = f"{self._prefix}{self._next}"
            self._next += 1
            if name in self._taken:
                continue
            self._taken.add(name)
            out.append(name)
        return out

    def one(self) -> str:
        return self.take(1)[0]


@dataclass
class BuilderOptions:
    verify_each_step: bool = True
    seed: int = 0
    max_order_restarts: int = 32
    names: FreshNames | None = None


def _ensure_options(g: Graph, opts: BuilderOptions | None) -> BuilderOptions:
    if opts is None:
        opts = BuilderOptions()
    if opts.names is None:
        opts.names = FreshNames(g.vertices)
    return opts


def _check(g: Graph, w: Witness, opts: BuilderOptions, stage: str, expected_common_prey=None) -> Witness:
    if not opts.verify_each_step:
        return w
    rep = verify_witness(g, w, expected_common_prey)
    if not rep.passed:
        raise ConstructionError(f"{stage}: self-check failed: {rep.to_json_dict()}", graph=g)
    return w


def chordal_witness(g: Graph, opts: BuilderOptions | None = None) -> Witness:
    """One added vertex suffices for a chordal graph (none if edgeless).

    Walking a perfect elimination order, the clique of each vertex with its
    later neighbors preys on the previous vertex in the order; the first
    clique preys on the single added vertex.  All arcs point backwards in
    the order, and the covered pairs are exactly the edges.  The last two
    order positions are never preys, so the result always has two
    in-sourceless vertices when the graph has two.
    """
    opts = _ensure_options(g, opts)
    ok, cert = is_chordal(g)
    if not ok:
        raise PreconditionError(f"graph is not chordal; it contains the hole {list(cert.vertices)!r}")
    peo = list(cert)
    if g.m == 0:
        w = Witness(
            Digraph(g.vertices),
            base=g.vertices,
            added=[],
            trace=[{"step": "chordal", "peo": peo, "added": []}],
        )
        return _check(g, w, opts, "chordal")
    a = opts.names.one()
    pos = {v: i for i, v in enumerate(peo)}
    arcs = []
    for i, v in enumerate(peo):
        members = [v] + [u for u in g.neighbors(v) if pos[u] > i]
        if len(members) == 1:
            continue
        prey = a if i == 0 else peo[i - 1]
        arcs.extend((u, prey) for u in members)
    d = Digraph(tuple(g.vertices) + (a,), arcs)
    w = Witness(d, base=g.vertices, added=[a], trace=[{"step": "chordal", "peo": peo, "added": [a]}])
    return _check(g, w, opts, "chordal")


def _padded_tree_witness(g: Graph, opts: BuilderOptions) -> Witness:
    """Chordal witness, padded to one added vertex for edgeless trees."""
    w = chordal_witness(g, opts)
    if w.added:
        return w
    pad = opts.names.one()
    return Witness(
        w.digraph.with_vertices([pad]),
        base=w.base,
        added=[pad],
        trace=w.trace + [{"step": "pad", "added": [pad]}],
    )


def _find_triangle(g: Graph):
    for u, v in g.edges:
        common = set(g.neighbors(u)) & set(g.neighbors(v))
        if common:
            return (u, v, min(common, key=vertex_key))
    return None


def _bfs_order(g: Graph, root) -> list:
    seen = {root}
    order = [root]
    q = deque([root])
    while q:
        v = q.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                order.append(w)
                q.append(w)
    return order


def _dfs_order(g: Graph, root) -> list:
    seen = set()
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        for w in reversed(g.neighbors(v)):
            if w not in seen:
                stack.append(w)
    return order


def _shelling_order(g: Graph) -> list:
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    order = []
    while alive:
        v = min(sorted(alive, key=vertex_key), key=lambda u: deg[u])
        order.append(v)
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return order


def _order_ladder(g: Graph, opts: BuilderOptions):
    root = g.vertices[0]
    yield "reverse_bfs", list(reversed(_bfs_order(g, root)))
    yield "reverse_dfs", list(reversed(_dfs_order(g, root)))
    yield "min_degree_shelling", _shelling_order(g)
    rng = random.Random(opts.seed)
    for i in range(opts.max_order_restarts):
        order = list(g.vertices)
        rng.shuffle(order)
        yield f"shuffle_{i}", order


def _assign_prey_slots(g: Graph, order: list, k: int):
    """Distinct prey slot per edge, each below both endpoints of its edge.

    Slots 0..k-1 stand for the added vertices and slot k+i for order[i];
    an edge may take any free slot below k plus the position of its earlier
    endpoint.  Scheduling by rising limit with the lowest free slot finds
    an assignment whenever one exists for this order.
    """
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(g.edges, key=lambda e: min(pos[e[0]], pos[e[1]]))
    free = list(range(k + len(order)))
    assign = {}
    for e in edges:
        limit = k + min(pos[e[0]], pos[e[1]])
        if not free or free[0] >= limit:
            return None
        assign[e] = free.pop(0)
    return assign


def triangle_free_witness(g: Graph, opts: BuilderOptions | None = None) -> Witness:
    """Exact witness for a connected triangle-free graph: m - n + 2 added.

    With no triangles, every edge needs its own prey.  Preys are drawn from
    the added vertices and the early part of a vertex order, each edge
    taking a slot strictly before both endpoints, which keeps the digraph
    acyclic and the competition pairs exactly the edges.  A reversed
    breadth-first order always admits such an assignment; fallback orders
    are kept in the ladder anyway.
    """
    opts = _ensure_options(g, opts)
    if g.n < 2:
        raise PreconditionError("triangle-free construction needs at least two vertices")
    if not is_connected(g):
        raise PreconditionError("triangle-free construction needs a connected graph")
    tri = _find_triangle(g)
    if tri is not None:
        raise PreconditionError(f"graph contains the triangle {tri!r}")
    k = g.m - g.n + 2
    added = opts.names.take(k)
    for strategy, order in _order_ladder(g, opts):
        assign = _assign_prey_slots(g, order, k)
        if assign is None:
            continue
        slot_vertex = dict(enumerate(added))
        for i, v in enumerate(order):
            slot_vertex[k + i] = v
        arcs = []
        for e in sorted(assign, key=edge_key):
            prey = slot_vertex[assign[e]]
            arcs.append((e[0], prey))
            arcs.append((e[1], prey))
        d = Digraph(tuple(g.vertices) + tuple(added), arcs)
        w = Witness(
            d,
            base=g.vertices,
            added=added,
            trace=[{"step": "triangle_free", "strategy": strategy, "order": list(order), "added": list(added)}],
        )
        return _check(g, w, opts, f"triangle_free[{strategy}]")
    raise ConstructionError("no vertex order admitted a prey assignment", graph=g)


def paste(w1: Witness, w2: Witness, consumed, sources, opts: BuilderOptions | None = None) -> Witness:
    """Merge two witnesses by rerouting prey traffic across the seam.

    Vertices listed in consumed must be pure preys of the first digraph
    (no out-arcs, hence isolated in its competition graph); they are
    deleted and their incoming arcs are redirected onto the matching
    sources, which must have no in-arcs in the second digraph.  The result
    competes exactly like the disjoint union minus the consumed vertices.
    """
    if opts is None:
        opts = BuilderOptions()
    consumed = list(consumed)
    sources = list(sources)
    if len(consumed) != len(sources):
        raise PreconditionError(f"{len(consumed)} consumed vertices against {len(sources)} paste targets")
    if len(set(consumed)) != len(consumed) or len(set(sources)) != len(sources):
        raise PreconditionError("consumed vertices and paste targets must be distinct")
    d1, d2 = w1.digraph, w2.digraph
    overlap = set(d1.vertices) & set(d2.vertices)
    if overlap:
        raise PreconditionError(f"pasted digraphs share vertices {sorted(overlap, key=vertex_key)!r}")
    for v in consumed:
        if not d1.has_vertex(v):
            raise PreconditionError(f"consumed vertex {v!r} is not in the first digraph")
        if d1.out_neighbors(v):
            raise PreconditionError(
                f"consumed vertex {v!r} has out-arcs; it must be isolated in the first competition graph"
            )
    for s in sources:
        if not d2.has_vertex(s):
            raise PreconditionError(f"paste target {s!r} is not in the second digraph")
        if d2.in_neighbors(s):
            raise PreconditionError(f"paste target {s!r} already has in-arcs")
    gone = set(consumed)
    target = dict(zip(consumed, sources))
    arcs = [(u, target.get(v, v)) for u, v in d1.arcs]
    arcs.extend(d2.arcs)
    verts = [v for v in d1.vertices if v not in gone] + list(d2.vertices)
    d = Digraph(verts, arcs)
    w = Witness(
        d,
        base=[v for v in w1.base if v not in gone] + list(w2.base),
        added=[v for v in w1.added if v not in gone] + list(w2.added),
        trace=w1.trace + w2.trace + [{"step": "paste", "consumed": consumed, "sources": sources}],
    )
    if opts.verify_each_step:
        acyclic, cert = is_acyclic(d)
        if not acyclic:
            raise ConstructionError(f"paste produced a directed cycle {list(cert)!r}")
        want = set(competition_graph(d1).edges) | set(competition_graph(d2).edges)
        got = set(competition_graph(d).edges)
        if got != want:
            raise ConstructionError(
                f"paste changed the competition edges: gained {sorted(got - want, key=edge_key)!r}, "
                f"lost {sorted(want - got, key=edge_key)!r}"
            )
    return w


def _add_prey(w: Witness, base, members, prey, record: dict) -> Witness:
    d = w.digraph.with_vertices([prey]).with_arcs([(m, prey) for m in members])
    return Witness(d, base=base, added=list(w.added) + [prey], trace=w.trace + [record])


def _least_non_clique_hole_edge(report: HypothesisReport, clique):
    kset = clique.edge_set
    for hole in report.holes:
        cand = [e for e in hole.edges() if e not in kset]
        if cand:
            return min(cand, key=edge_key), hole
    raise ConstructionError("every hole edge lies in the designated clique")


def theorem1_witness(g: Graph, opts: BuilderOptions | None = None, clique=None) -> Witness:
    """Two added vertices for the tight case: clique number = holes + 1.

    The second added vertex is a common out-neighbor of the whole
    designated clique (for one hole, of the designated edge), which is what
    lets a peeled-off clique vertex rejoin by a single arc during the
    recursion.
    """
    opts = _ensure_options(g, opts)
    report = validate_hypotheses(g)
    if not report.passes:
        raise PreconditionError(f"hypothesis flags fail: {report.flags}")
    if report.h < 1:
        raise PreconditionError("construction needs at least one hole")
    if report.omega != report.h + 1:
        raise PreconditionError(
            f"clique number must exceed the hole count by one (omega={report.omega}, holes={report.h})"
        )
    if report.h == 1:
        return _one_hole_base(g, report, opts, clique)
    return _clique_peel_step(g, report, opts, clique)


def _one_hole_base(g: Graph, report: HypothesisReport, opts: BuilderOptions, clique) -> Witness:
    hole = report.holes[0]
    if g.m != g.n:
        raise HypothesisAnomaly(
            f"one-hole triangle-free graph must have m = n, got m={g.m}, n={g.n}", graph=g
        )
    if clique is None:
        e = min(hole.edges(), key=edge_key)
    else:
        mem = tuple(sorted(clique, key=vertex_key))
        if len(mem) != 2 or not g.has_edge(*mem):
            raise PreconditionError(
                f"designated clique {mem!r} must be an edge of the graph in the one-hole case"
            )
        e = canonical_edge(*mem)
    x, y = e
    if e in hole.edge_set:
        # cutting the cycle leaves a tree
        case = "on_hole"
        inner = chordal_witness(g.remove_edge(x, y), opts)
    elif g.degree(x) == 1 or g.degree(y) == 1:
        # the leaf rejoins as a pure prey slot of the witness for the rest
        case = "pendant"
        leaf = x if g.degree(x) == 1 else y
        rest = g.remove_vertex(leaf)
        wtf = triangle_free_witness(rest, opts)
        inner = Witness(
            wtf.digraph.relabel({wtf.added[0]: leaf}),
            base=g.vertices,
            added=list(wtf.added[1:]),
            trace=wtf.trace + [{"step": "pendant_rename", "slot": wtf.added[0], "vertex": leaf}],
        )
        inner = _check(g.remove_edge(x, y), inner, opts, "pendant_rename")
    else:
        # a bridge between the unicyclic part and a proper tree
        case = "bridge"
        parts = connected_components(g.remove_edge(x, y))
        if len(parts) != 2:
            raise ConstructionError(
                f"removing the designated edge left {len(parts)} components, expected 2", graph=g
            )
        if hole.vertices[0] in set(parts[0]):
            hole_part, tree_part = parts
        else:
            tree_part, hole_part = parts
        hole_set = set(hole_part)
        if not set(hole.vertices) <= hole_set:
            raise ConstructionError("the hole straddles both sides of the designated edge", graph=g)
        gh = g.subgraph(hole_part)
        gt = g.subgraph(tree_part)
        if gt.m != gt.n - 1:
            raise ConstructionError("the far side of the designated edge is not a tree", graph=gt)
        wh = triangle_free_witness(gh, opts)
        wt = chordal_witness(gt, opts)
        srcs = wt.digraph.sources()
        if len(srcs) < 2:
            raise ConstructionError("tree witness exposes fewer than two in-sourceless vertices", graph=gt)
        inner = paste(wh, wt, consumed=list(wh.added), sources=list(srcs[:2]), opts=opts)
    i2 = opts.names.one()
    w = _add_prey(
        inner,
        base=g.vertices,
        members=(x, y),
        prey=i2,
        record={"step": "one_hole_base", "case": case, "edge": [x, y], "common_prey": i2},
    )
    return _check(g, w, opts, f"one_hole_base[{case}]", expected_common_prey=((x, y), i2))


def _check_peeled(peeled: Graph, rep: HypothesisReport, want_h: int, want_omega: int, sub) -> None:
    if not rep.passes:
        raise ConstructionError(f"peeled graph lost a hypothesis flag: {rep.flags}", graph=peeled)
    if rep.h != want_h:
        raise ConstructionError(
            f"peel changed the hole count to {rep.h}, expected {want_h}", graph=peeled
        )
    if rep.omega != want_omega:
        raise ConstructionError(
            f"peel changed the clique number to {rep.omega}, expected {want_omega}", graph=peeled
        )
    if want_omega >= 3:
        if rep.K is None or rep.K.members != sub:
            raise ConstructionError(
                f"peeled graph does not expose {list(sub)!r} as its non-edge maximal clique", graph=peeled
            )
    elif not peeled.has_edge(*sub):
        raise ConstructionError(f"designated edge {list(sub)!r} vanished during the peel", graph=peeled)


def _clique_peel_step(g: Graph, report: HypothesisReport, opts: BuilderOptions, clique) -> Witness:
    K = report.K
    if K is None:
        raise PreconditionError("no designated clique: the graph must have one non-edge maximal clique")
    if clique is not None:
        mem = tuple(sorted(clique, key=vertex_key))
        if mem != K.members:
            raise PreconditionError(
                f"designated clique {mem!r} is not the non-edge maximal clique {K.members!r}"
            )
    v1, cond = select_clique_vertex(g, report)
    sub = tuple(u for u in K.members if u != v1)
    clique_edges = [canonical_edge(v1, u) for u in sub]
    if cond == "b":
        # v1 sits on exactly one hole and shares one of its edges with the
        # clique; dropping v1's clique edges removes that hole alone
        g2 = g.remove_edges(clique_edges)
        rep2 = validate_hypotheses(g2)
        _check_peeled(g2, rep2, report.h - 1, report.omega - 1, sub)
        w2 = theorem1_witness(g2, opts, clique=sub)
        i2 = w2.added[-1]
        w = Witness(
            w2.digraph.with_arcs([(v1, i2)]),
            base=g.vertices,
            added=w2.added,
            trace=w2.trace
            + [
                {
                    "step": "clique_peel_on_hole",
                    "vertex": v1,
                    "removed": [list(e) for e in clique_edges],
                    "common_prey": i2,
                }
            ],
        )
        return _check(g, w, opts, "clique_peel_on_hole", expected_common_prey=(K.members, i2))
    # condition (a): no clique-avoiding path from v1 reaches any hole, so
    # cutting one hole edge plus v1's clique edges splits off v1's side as
    # a hole-free tree
    e, hole = _least_non_clique_hole_edge(report, K)
    u, wv = e
    gp = g.remove_edges([e] + clique_edges)
    parts = connected_components(gp)
    if len(parts) != 2:
        raise ConstructionError(
            f"peel left {len(parts)} components, expected 2", graph=gp
        )
    if v1 in set(parts[0]):
        v1_part, main_part = parts
    else:
        main_part, v1_part = parts
    main_set = set(main_part)
    g1 = gp.subgraph(v1_part)
    if g1.m != g1.n - 1:
        raise ConstructionError("the split-off side is not a tree", graph=g1)
    if not ({u, wv} <= main_set and set(sub) <= main_set):
        raise ConstructionError(
            "cut hole edge or peeled clique landed on the wrong side of the split", graph=gp
        )
    g2 = gp.subgraph(main_part)
    rep2 = validate_hypotheses(g2)
    _check_peeled(g2, rep2, report.h - 1, report.omega - 1, sub)
    w2 = theorem1_witness(g2, opts, clique=sub)
    wt = _padded_tree_witness(g1, opts)
    srcs = wt.digraph.sources()
    if len(srcs) < 2:
        raise ConstructionError("tree witness exposes fewer than two in-sourceless vertices", graph=g1)
    x_src, y_src = srcs[0], srcs[1]
    merged = paste(w2, wt, consumed=[w2.added[0]], sources=[x_src], opts=opts)
    i2 = w2.added[-1]
    d = merged.digraph.with_arcs([(v1, i2), (u, y_src), (wv, y_src)])
    w = Witness(
        d,
        base=g.vertices,
        added=[wt.added[0], i2],
        trace=merged.trace
        + [
            {
                "step": "clique_peel_split",
                "vertex": v1,
                "removed": [list(ed) for ed in [e] + clique_edges],
                "restored_edge": [u, wv],
                "restore_prey": y_src,
                "common_prey": i2,
            }
        ],
    )
    return _check(g, w, opts, "clique_peel_split", expected_common_prey=(K.members, i2))


def theorem2_witness(g: Graph, opts: BuilderOptions | None = None) -> Witness:
    """At most h - omega + 3 added vertices across the whole window.

    Hole edges outside the designated clique are peeled one at a time until
    the clique number reaches holes + 1 (tight case) or the graph is
    triangle-free (one prey per edge); each peeled edge then returns with a
    dedicated fresh prey.
    """
    opts = _ensure_options(g, opts)
    report = validate_hypotheses(g)
    if not report.passes:
        raise PreconditionError(f"hypothesis flags fail: {report.flags}")
    if not 2 <= report.omega <= report.h + 1:
        raise PreconditionError(
            f"clique number must lie between 2 and holes+1 (omega={report.omega}, holes={report.h})"
        )
    cur, cur_rep = g, report
    peeled: list[tuple] = []
    peel_trace: list[dict] = []
    while True:
        if cur_rep.omega == cur_rep.h + 1:
            base_w = theorem1_witness(cur, opts)
            break
        if cur_rep.omega == 2:
            if cur.m != cur.n + cur_rep.h - 1:
                raise HypothesisAnomaly(
                    f"edge-count identity failed: m={cur.m}, n={cur.n}, holes={cur_rep.h}", graph=cur
                )
            base_w = triangle_free_witness(cur, opts)
            break
        K = cur_rep.K
        if K is None:
            raise PreconditionError(
                "no designated clique: the graph must have one non-edge maximal clique"
            )
        e, hole = _least_non_clique_hole_edge(cur_rep, K)
        nxt = cur.remove_edge(*e)
        nxt_rep = validate_hypotheses(nxt)
        if not nxt_rep.passes:
            raise ConstructionError(f"hole-edge peel lost a hypothesis flag: {nxt_rep.flags}", graph=nxt)
        if nxt_rep.h != cur_rep.h - 1:
            raise ConstructionError(
                f"hole-edge peel changed the hole count to {nxt_rep.h}, expected {cur_rep.h - 1}",
                graph=nxt,
            )
        if nxt_rep.omega != cur_rep.omega or nxt_rep.K is None or nxt_rep.K.members != K.members:
            raise ConstructionError("hole-edge peel disturbed the designated clique", graph=nxt)
        peeled.append(e)
        peel_trace.append({"step": "hole_edge_peel", "edge": list(e), "hole": list(hole.vertices)})
        cur, cur_rep = nxt, nxt_rep
    w = Witness(
        base_w.digraph,
        base=base_w.base,
        added=base_w.added,
        trace=peel_trace + base_w.trace,
    )
    for e in reversed(peeled):
        prey = opts.names.one()
        w = _add_prey(
            w,
            base=w.base,
            members=e,
            prey=prey,
            record={"step": "hole_edge_restore", "edge": list(e), "prey": prey},
        )
    return _check(g, w, opts, "theorem2")


def auto_witness(
    g: Graph,
    opts: BuilderOptions | None = None,
    *,
    oracle_fallback: bool = False,
    oracle_budget: int = ORACLE_DEFAULT_BUDGET,
    oracle_max_k: int | None = None,
) -> Witness:
    """Dispatch to the cheapest construction that covers the input.

    Edgeless graphs need nothing, chordal graphs one added vertex,
    connected triangle-free graphs get the exact edge-per-prey witness, and
    graphs meeting the class hypotheses the peeling construction.  Anything
    else raises UnsupportedClassError unless the exact-search fallback is
    switched on (and fits in its budget).
    """
    opts = _ensure_options(g, opts)
    if g.m == 0:
        w = Witness(Digraph(g.vertices), base=g.vertices, added=[], trace=[{"step": "edgeless"}])
        return _check(g, w, opts, "edgeless")
    chordal, _ = is_chordal(g)
    if chordal:
        return chordal_witness(g, opts)
    if _find_triangle(g) is None and is_connected(g):
        return triangle_free_witness(g, opts)
    report = validate_hypotheses(g)
    if report.passes and 2 <= report.omega <= report.h + 1:
        return theorem2_witness(g, opts)
    if oracle_fallback:
        res = exact_competition_number(g, oracle_max_k, budget=oracle_budget)
        if res.witness is not None:
            return _check(g, res.witness, opts, "oracle")
        raise UnsupportedClassError(
            f"exact search gave no witness (lower bound {res.lower}, nodes {res.nodes})"
        )
    raise UnsupportedClassError(
        "graph fits no supported construction class "
        f"(omega={report.omega}, holes={report.h}, flags={report.flags})"
    )
