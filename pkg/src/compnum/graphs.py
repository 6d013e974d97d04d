"""Immutable graph and digraph types with deterministic ordering.

Vertex identifiers are opaque small integers or strings.  Every container
in this module sorts by a mixed-type key, never by hash, so enumeration
order is reproducible across runs and machines.  All derived objects
(subgraphs, edge removals, arc additions) are fresh instances; nothing
mutates in place.
"""

from __future__ import annotations

import json

from .errors import (
    DuplicateEdgeError,
    DuplicateVertexError,
    GraphValidationError,
    PreconditionError,
    SelfLoopError,
    UndeclaredEndpointError,
    VertexTypeError,
)

Vertex = int | str


def vertex_key(v: Vertex):
    """Sort key giving a total order over mixed int/str identifiers."""
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise VertexTypeError(f"vertex identifiers must be int or str, got {v!r}")
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, v)


def canonical_edge(u: Vertex, v: Vertex) -> tuple[Vertex, Vertex]:
    """Unordered pair as a tuple with the smaller endpoint first."""
    ku, kv = vertex_key(u), vertex_key(v)
    if ku == kv:
        raise SelfLoopError(f"self-loop at {u!r}")
    if ku < kv:
        return (u, v)
    return (v, u)


def edge_key(e):
    return (vertex_key(e[0]), vertex_key(e[1]))


def _check_vertices(vertices):
    seen = set()
    out = []
    for v in vertices:
        vertex_key(v)
        if v in seen:
            raise DuplicateVertexError(f"duplicate vertex {v!r}")
        seen.add(v)
        out.append(v)
    out.sort(key=vertex_key)
    return tuple(out), seen


class Graph:
    """Simple undirected graph. Immutable once constructed."""

    __slots__ = ("vertices", "edges", "_adj", "_edge_set")

    def __init__(self, vertices=(), edges=()):
        vs, vset = _check_vertices(vertices)
        adj: dict[Vertex, list] = {v: [] for v in vs}
        eset = set()
        for e in edges:
            u, v = e
            if u not in vset:
                raise UndeclaredEndpointError(f"edge {tuple(e)!r} uses undeclared vertex {u!r}")
            if v not in vset:
                raise UndeclaredEndpointError(f"edge {tuple(e)!r} uses undeclared vertex {v!r}")
            if u == v:
                raise SelfLoopError(f"self-loop at {u!r}")
            ce = canonical_edge(u, v)
            if ce in eset:
                raise DuplicateEdgeError(f"duplicate edge {ce!r}")
            eset.add(ce)
            adj[u].append(v)
            adj[v].append(u)
        self.vertices = vs
        self.edges = tuple(sorted(eset, key=edge_key))
        self._adj = {v: tuple(sorted(ns, key=vertex_key)) for v, ns in adj.items()}
        self._edge_set = frozenset(eset)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def has_edge(self, u, v) -> bool:
        return canonical_edge(u, v) in self._edge_set

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    def neighbors(self, v) -> tuple:
        try:
            return self._adj[v]
        except KeyError:
            raise PreconditionError(f"vertex {v!r} not in graph") from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def remove_edge(self, u, v) -> "Graph":
        ce = canonical_edge(u, v)
        if ce not in self._edge_set:
            raise PreconditionError(f"edge {ce!r} not in graph")
        return Graph(self.vertices, [e for e in self.edges if e != ce])

    def remove_edges(self, edges) -> "Graph":
        drop = {canonical_edge(*e) for e in edges}
        missing = drop - self._edge_set
        if missing:
            raise PreconditionError(f"edges not in graph: {sorted(missing, key=edge_key)!r}")
        return Graph(self.vertices, [e for e in self.edges if e not in drop])

    def remove_vertex(self, v) -> "Graph":
        if v not in self._adj:
            raise PreconditionError(f"vertex {v!r} not in graph")
        return Graph(
            [u for u in self.vertices if u != v],
            [e for e in self.edges if v not in e],
        )

    def subgraph(self, vertices) -> "Graph":
        keep = set(vertices)
        missing = keep - set(self.vertices)
        if missing:
            raise PreconditionError(f"vertices not in graph: {sorted(missing, key=vertex_key)!r}")
        return Graph(
            [v for v in self.vertices if v in keep],
            [e for e in self.edges if e[0] in keep and e[1] in keep],
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, obj) -> "Graph":
        if not isinstance(obj, dict):
            raise GraphValidationError("graph JSON must be an object")
        if set(obj) != {"vertices", "edges"}:
            raise GraphValidationError(
                f"graph JSON must have exactly 'vertices' and 'edges', got {sorted(obj)!r}")
        edges = obj["edges"]
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise GraphValidationError("graph JSON 'edges' must be a list of 2-element lists")
        return cls(obj["vertices"], [tuple(e) for e in edges])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_dict(json.loads(text))

    def to_dot(self, name="G") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f"  {_dot_id(v)};")
        for u, v in self.edges:
            lines.append(f"  {_dot_id(u)} -- {_dot_id(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(vertices, edges) -> Graph:
    """Validated construction from vertex and edge lists.

    Rejects duplicate vertices, self-loops, duplicate edges, and edges with
    undeclared endpoints, each with a distinct error naming the offender.
    """
    return Graph(vertices, edges)


def _dot_id(v) -> str:
    return json.dumps(str(v))


class Digraph:
    """Simple directed graph (no self-loops, no parallel arcs). Immutable."""

    __slots__ = ("vertices", "arcs", "_out", "_in", "_arc_set")

    def __init__(self, vertices=(), arcs=()):
        vs, vset = _check_vertices(vertices)
        out: dict[Vertex, list] = {v: [] for v in vs}
        inn: dict[Vertex, list] = {v: [] for v in vs}
        aset = set()
        for a in arcs:
            u, v = a
            if u not in vset:
                raise UndeclaredEndpointError(f"arc {tuple(a)!r} uses undeclared vertex {u!r}")
            if v not in vset:
                raise UndeclaredEndpointError(f"arc {tuple(a)!r} uses undeclared vertex {v!r}")
            if u == v:
                raise SelfLoopError(f"self-loop arc at {u!r}")
            if (u, v) in aset:
                raise DuplicateEdgeError(f"duplicate arc {(u, v)!r}")
            aset.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self.vertices = vs
        self.arcs = tuple(sorted(aset, key=edge_key))
        self._out = {v: tuple(sorted(ns, key=vertex_key)) for v, ns in out.items()}
        self._in = {v: tuple(sorted(ns, key=vertex_key)) for v, ns in inn.items()}
        self._arc_set = frozenset(aset)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_vertex(self, v) -> bool:
        return v in self._out

    def has_arc(self, u, v) -> bool:
        return (u, v) in self._arc_set

    def out_neighbors(self, v) -> tuple:
        try:
            return self._out[v]
        except KeyError:
            raise PreconditionError(f"vertex {v!r} not in digraph") from None

    def in_neighbors(self, v) -> tuple:
        try:
            return self._in[v]
        except KeyError:
            raise PreconditionError(f"vertex {v!r} not in digraph") from None

    def sources(self) -> tuple:
        """Vertices with no incoming arc, sorted."""
        return tuple(v for v in self.vertices if not self._in[v])

    def with_vertices(self, new_vertices) -> "Digraph":
        return Digraph(tuple(self.vertices) + tuple(new_vertices), self.arcs)

    def with_arcs(self, new_arcs) -> "Digraph":
        return Digraph(self.vertices, tuple(self.arcs) + tuple(tuple(a) for a in new_arcs))

    def without_vertices(self, drop) -> "Digraph":
        gone = set(drop)
        return Digraph(
            [v for v in self.vertices if v not in gone],
            [a for a in self.arcs if a[0] not in gone and a[1] not in gone],
        )

    def relabel(self, mapping: dict) -> "Digraph":
        def sub(v):
            return mapping.get(v, v)

        return Digraph([sub(v) for v in self.vertices], [(sub(u), sub(v)) for u, v in self.arcs])

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "arcs": [list(a) for a in self.arcs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, obj) -> "Digraph":
        if not isinstance(obj, dict):
            raise GraphValidationError("digraph JSON must be an object")
        if set(obj) != {"vertices", "arcs"}:
            raise GraphValidationError(
                f"digraph JSON must have exactly 'vertices' and 'arcs', got {sorted(obj)!r}")
        arcs = obj["arcs"]
        if not isinstance(arcs, list) or any(not isinstance(a, list) or len(a) != 2 for a in arcs):
            raise GraphValidationError("digraph JSON 'arcs' must be a list of 2-element lists")
        return cls(obj["vertices"], [tuple(a) for a in arcs])

    @classmethod
    def from_json(cls, text: str) -> "Digraph":
        return cls.from_json_dict(json.loads(text))

    def to_dot(self, name="D") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f"  {_dot_id(v)};")
        for u, v in self.arcs:
            lines.append(f"  {_dot_id(u)} -> {_dot_id(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class Path:
    """Open vertex sequence; consecutive entries are the implied edges."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vs = tuple(vertices)
        if not vs:
            raise GraphValidationError("path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise GraphValidationError(f"path vertices repeat: {vs!r}")
        self.vertices = vs

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.vertices) - 1

    def edges(self) -> list:
        return [canonical_edge(self.vertices[i], self.vertices[i + 1]) for i in range(self.length)]

    def is_path_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(("Path", self.vertices))

    def __repr__(self):
        return f"Path{self.vertices!r}"


class Cycle:
    """Closed vertex sequence stored in canonical form.

    Canonical form starts at the smallest vertex and proceeds toward its
    smaller neighbor, so rotations and reflections of the same cycle
    compare equal.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise GraphValidationError(f"cycle needs at least 3 vertices, got {vs!r}")
        if len(set(vs)) != len(vs):
            raise GraphValidationError(f"cycle vertices repeat: {vs!r}")
        keys = [vertex_key(v) for v in vs]
        i = keys.index(min(keys))
        fwd = vs[i:] + vs[:i]
        bwd = (fwd[0],) + tuple(reversed(fwd[1:]))
        self.vertices = min(fwd, bwd, key=lambda seq: tuple(vertex_key(v) for v in seq))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list:
        vs = self.vertices
        return [canonical_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def is_cycle_in(self, g: Graph) -> bool:
        vs = self.vertices
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __contains__(self, v):
        return v in self.vertices

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(("Cycle", self.vertices))

    def __repr__(self):
        return f"Cycle{self.vertices!r}"


def cycle_key(c: Cycle):
    return tuple(vertex_key(v) for v in c.vertices)


def connected_components(g: Graph) -> list[tuple]:
    """Vertex sets of the components, each sorted, listed by smallest member."""
    seen = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp, key=vertex_key)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def cut_vertices(g: Graph) -> tuple:
    """Articulation points via iterative lowlink DFS, sorted."""
    disc: dict[Vertex, int] = {}
    low: dict[Vertex, int] = {}
    parent: dict[Vertex, Vertex | None] = {}
    cuts = set()
    for root in g.vertices:
        if root in disc:
            continue
        parent[root] = None
        disc[root] = low[root] = len(disc)
        root_children = 0
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            pushed = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    disc[w] = low[w] = len(disc)
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(g.neighbors(w))))
                    pushed = True
                    break
                if w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not pushed:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u != root and low[v] >= disc[u]:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
    return tuple(sorted(cuts, key=vertex_key))


def bridges(g: Graph) -> tuple:
    """Cut edges via the same lowlink pass, sorted canonically."""
    disc: dict[Vertex, int] = {}
    low: dict[Vertex, int] = {}
    parent: dict[Vertex, Vertex | None] = {}
    out = []
    for root in g.vertices:
        if root in disc:
            continue
        parent[root] = None
        disc[root] = low[root] = len(disc)
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            pushed = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    disc[w] = low[w] = len(disc)
                    stack.append((w, iter(g.neighbors(w))))
                    pushed = True
                    break
                if w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not pushed:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.append(canonical_edge(u, v))
        # root handled like any other vertex for bridge purposes
    return tuple(sorted(out, key=edge_key))


def is_cut_edge(g: Graph, e) -> bool:
    """True iff removing e increases the number of components."""
    ce = canonical_edge(*e)
    if ce not in g.edge_set:
        raise PreconditionError(f"edge {ce!r} not in graph")
    return ce in set(bridges(g))


def shortest_path_avoiding(g: Graph, source, targets, forbidden_internal=frozenset()) -> Path | None:
    """Shortest path from source to any target, internals off-limits.

    Endpoints are exempt from the internal-vertex ban.  Among all shortest
    paths, returns the lexicographically smallest vertex sequence; returns
    None if no such path exists.
    """
    targets = set(targets)
    forbidden = set(forbidden_internal)
    if not g.has_vertex(source):
        raise PreconditionError(f"source {source!r} not in graph")
    for t in targets:
        if not g.has_vertex(t):
            raise PreconditionError(f"target {t!r} not in graph")
    if source in forbidden:
        raise PreconditionError(f"source {source!r} is forbidden as internal; cannot start there")
    if not targets:
        return None
    if source in targets:
        return Path((source,))

    # distance-to-nearest-target, walking backward through allowed internals
    rdist = {t: 0 for t in targets}
    frontier = list(targets)
    d = 0
    while frontier:
        nxt = []
        for w in frontier:
            for u in g.neighbors(w):
                if u in rdist or u in forbidden:
                    continue
                rdist[u] = d + 1
                nxt.append(u)
        d += 1
        frontier = nxt
    if source not in rdist or source in targets:
        return None if source not in rdist else Path((source,))
    remaining = rdist[source]
    seq = [source]
    u = source
    while remaining > 0:
        chosen = None
        for w in g.neighbors(u):  # sorted, so first hit is lexicographically least
            if remaining == 1:
                if w in targets:
                    chosen = w
                    break
            else:
                if w not in forbidden and w not in targets and rdist.get(w) == remaining - 1:
                    chosen = w
                    break
        if chosen is None:  # unreachable if rdist is consistent
            return None
        seq.append(chosen)
        u = chosen
        remaining -= 1
    return Path(tuple(seq))
