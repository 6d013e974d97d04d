"""Competition graphs, witness verification, and the exact oracle.

A witness is an acyclic digraph whose competition graph is the input graph
plus k isolated added vertices; it certifies that k extra vertices suffice.
The oracle searches edge clique covers with injective prey assignments to
pin the exact minimum at desk scale, reporting a proven bracket instead of
an answer when its budget runs out.
"""

from __future__ import annotations

import graphlib
import json
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphValidationError, PreconditionError
from .graphs import Digraph, Graph, canonical_edge, edge_key, vertex_key

ORACLE_VERTEX_CAP = 10
ORACLE_DEFAULT_BUDGET = 5_000_000


def competition_graph(d: Digraph) -> Graph:
    """Graph on V(d) joining vertices that share an out-neighbor."""
    edges = set()
    for v in d.vertices:
        preds = d.in_neighbors(v)
        for a, b in combinations(preds, 2):
            edges.add(canonical_edge(a, b))
    return Graph(d.vertices, sorted(edges, key=edge_key))


def is_acyclic(d: Digraph):
    """(True, topological order) or (False, directed cycle)."""
    ts = graphlib.TopologicalSorter()
    for v in d.vertices:
        ts.add(v)
    for u, v in d.arcs:
        ts.add(v, u)
    try:
        return True, tuple(ts.static_order())
    except graphlib.CycleError as err:
        cyc = tuple(err.args[1])
        return False, cyc[:-1]  # closing repeat stripped


def fresh_names(reserved, count: int, prefix: str = "$k") -> list[str]:
    """count new identifiers from the reserved added-vertex namespace."""
    taken = {v for v in reserved if isinstance(v, str)}
    out: list[str] = []
    i = 0
    while len(out) < count:
        name = f"{prefix}{i}"
        i += 1
        if name in taken:
            continue
        taken.add(name)
        out.append(name)
    return out


class Witness:
    """Acyclic digraph together with its base/added vertex split.

    The added list keeps construction order (it is meaningful: builders put
    the common-prey vertex last); base vertices are stored sorted.  The
    trace is a JSON-ready list of construction step records.
    """

    __slots__ = ("digraph", "base", "added", "trace")

    def __init__(self, digraph: Digraph, base, added, trace=None):
        base_t = tuple(sorted(base, key=vertex_key))
        added_t = tuple(added)
        bset, aset = set(base_t), set(added_t)
        if len(aset) != len(added_t):
            raise GraphValidationError(f"added vertices repeat: {added_t!r}")
        if bset & aset:
            raise GraphValidationError(f"base and added overlap: {sorted(bset & aset, key=vertex_key)!r}")
        if bset | aset != set(digraph.vertices):
            raise GraphValidationError("base plus added must equal the digraph vertex set")
        self.digraph = digraph
        self.base = base_t
        self.added = added_t
        self.trace = list(trace) if trace else []

    @property
    def k(self) -> int:
        return len(self.added)

    def __eq__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented
        return (
            self.digraph == other.digraph
            and self.base == other.base
            and self.added == other.added
            and self.trace == other.trace
        )

    def __repr__(self):
        return f"Witness(base={len(self.base)}, added={list(self.added)!r})"

    def to_json_dict(self) -> dict:
        return {
            "digraph": self.digraph.to_json_dict(),
            "base": list(self.base),
            "added": list(self.added),
            "trace": self.trace,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, obj) -> "Witness":
        if not isinstance(obj, dict):
            raise GraphValidationError("witness JSON must be an object")
        if set(obj) != {"digraph", "base", "added", "trace"}:
            raise GraphValidationError(
                "witness JSON must have exactly 'digraph', 'base', 'added', "
                f"and 'trace', got {sorted(obj)!r}")
        return cls(
            Digraph.from_json_dict(obj["digraph"]),
            obj["base"],
            obj["added"],
            obj["trace"],
        )

    @classmethod
    def from_json(cls, text: str) -> "Witness":
        return cls.from_json_dict(json.loads(text))


@dataclass
class VerificationReport:
    """Itemized outcome of checking a witness against a graph."""

    acyclic: bool
    missing_edges: tuple
    extra_edges: tuple
    added_isolated: bool
    added_violations: tuple
    common_prey: tuple | None = None  # (members, vertex, ok)

    @property
    def competition_graph_matches(self) -> bool:
        return not self.missing_edges and not self.extra_edges and self.added_isolated

    @property
    def passed(self) -> bool:
        ok = self.acyclic and self.competition_graph_matches
        if self.common_prey is not None:
            ok = ok and self.common_prey[2]
        return ok

    def to_json_dict(self) -> dict:
        d = {
            "acyclic": self.acyclic,
            "competition_graph_matches": self.competition_graph_matches,
            "missing_edges": [list(e) for e in self.missing_edges],
            "extra_edges": [list(e) for e in self.extra_edges],
            "added_isolated": self.added_isolated,
            "added_violations": [list(e) for e in self.added_violations],
            "passed": self.passed,
        }
        if self.common_prey is not None:
            members, vertex, ok = self.common_prey
            d["common_prey"] = {"clique": list(members), "vertex": vertex, "ok": ok}
        return d


def verify_witness(g: Graph, w: Witness, expected_common_prey=None) -> VerificationReport:
    """Check acyclicity and the exact competition-graph identity.

    expected_common_prey, when given, is a (members, vertex) pair; the
    check demands an arc from every member to that vertex.  A vertex of
    None asks for any added vertex all members feed into (the builders put
    that vertex last, so the scan runs back to front).
    """
    if w.base != g.vertices:
        raise PreconditionError(
            f"witness base {list(w.base)!r} does not match graph vertices {list(g.vertices)!r}"
        )
    acyclic, _ = is_acyclic(w.digraph)
    comp = competition_graph(w.digraph)
    bset = set(w.base)
    comp_base_edges = {e for e in comp.edges if e[0] in bset and e[1] in bset}
    missing = tuple(sorted(set(g.edges) - comp_base_edges, key=edge_key))
    extra = tuple(sorted(comp_base_edges - set(g.edges), key=edge_key))
    violations = tuple(
        sorted(
            (e for e in comp.edges if e[0] not in bset or e[1] not in bset),
            key=edge_key,
        )
    )
    common = None
    if expected_common_prey is not None:
        members, vertex = expected_common_prey
        members = tuple(members.members) if hasattr(members, "members") else tuple(members)
        if vertex is None:
            vertex = next(
                (
                    a
                    for a in reversed(w.added)
                    if all(w.digraph.has_arc(u, a) for u in members)
                ),
                None,
            )
        ok = (
            vertex is not None
            and w.digraph.has_vertex(vertex)
            and all(w.digraph.has_arc(u, vertex) for u in members)
        )
        common = (members, vertex, ok)
    return VerificationReport(
        acyclic=acyclic,
        missing_edges=missing,
        extra_edges=extra,
        added_isolated=not violations,
        added_violations=violations,
        common_prey=common,
    )


@dataclass
class OracleResult:
    """Exact value when the search completed, a proven bracket otherwise.

    lower is always proven; upper is None until some witness was found.
    exhausted marks a budget stop (as opposed to max_k running out).
    """

    exact: int | None
    lower: int
    upper: int | None
    witness: Witness | None
    nodes: int
    exhausted: bool

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def to_json_dict(self) -> dict:
        return {
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "exhausted": self.exhausted,
        }


class _Exhausted(Exception):
    pass


def _all_cliques(g: Graph) -> list[tuple]:
    """Every clique of size >= 2, sorted canonically."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    out: list[tuple] = []

    def grow(base: tuple, cands: list):
        for i, v in enumerate(cands):
            nxt = base + (v,)
            if len(nxt) >= 2:
                out.append(nxt)
            grow(nxt, [u for u in cands[i + 1 :] if u in adj[v]])

    grow((), list(g.vertices))
    out.sort(key=lambda c: tuple(vertex_key(v) for v in c))
    return out


def exact_competition_number(
    g: Graph,
    max_k: int | None = None,
    *,
    budget: int = ORACLE_DEFAULT_BUDGET,
    vertex_cap: int = ORACLE_VERTEX_CAP,
) -> OracleResult:
    """Smallest k for which some witness exists, by iterative deepening.

    Searches edge clique covers: every uncovered edge is covered by some
    clique of g, each chosen clique gets a distinct prey outside itself,
    and the member-to-prey arcs must stay acyclic.  Added prey slots are
    interchangeable, so only the lowest unused one is ever tried.  On
    budget exhaustion the result is a bracket, never a guess.
    """
    if g.n > vertex_cap:
        raise PreconditionError(f"oracle capped at {vertex_cap} vertices, got {g.n}")
    if max_k is None:
        max_k = g.m  # one dedicated added prey per edge always works
    verts = list(g.vertices)
    vidx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    edges = list(g.edges)
    eidx = {e: i for i, e in enumerate(edges)}
    full = (1 << len(edges)) - 1
    cliques = _all_cliques(g)
    cl_vmask = [sum(1 << vidx[v] for v in c) for c in cliques]
    cl_emask = [
        sum(1 << eidx[canonical_edge(a, b)] for a, b in combinations(c, 2)) for c in cliques
    ]
    cands: list[list[int]] = []
    for e in edges:
        cs = [ci for ci, c in enumerate(cliques) if e[0] in c and e[1] in c]
        cs.sort(key=lambda ci: (-len(cliques[ci]), tuple(vertex_key(v) for v in cliques[ci])))
        cands.append(cs)
    max_pairs = max((len(c) * (len(c) - 1) // 2 for c in cliques), default=1)
    nodes = 0

    def feasible(k: int):
        nonlocal nodes
        total = n + k
        chosen: list[tuple[int, int]] = []

        def search(covered: int, reach: list[int], prey_used: int, added_used: int):
            nonlocal nodes
            if covered == full:
                return True
            uncov = bin(full & ~covered).count("1")
            free_slots = total - bin(prey_used).count("1")
            if free_slots * max_pairs < uncov:
                return False
            rem = full & ~covered
            e = (rem & -rem).bit_length() - 1  # lowest uncovered edge index
            for ci in cands[e]:
                mmask = cl_vmask[ci]
                prey_options = list(range(n))
                if added_used < k:
                    prey_options.append(n + added_used)
                for p in prey_options:
                    if prey_used >> p & 1:
                        continue
                    if p < n and mmask >> p & 1:
                        continue
                    if reach[p] & mmask:
                        continue  # some member already reachable from p
                    nodes += 1
                    if nodes > budget:
                        raise _Exhausted
                    new_reach = reach.copy()
                    rp = new_reach[p]
                    for v in range(total):
                        if new_reach[v] & mmask:
                            new_reach[v] |= rp
                    chosen.append((ci, p))
                    if search(
                        covered | cl_emask[ci],
                        new_reach,
                        prey_used | (1 << p),
                        added_used + (1 if p >= n else 0),
                    ):
                        return True
                    chosen.pop()
            return False

        reach0 = [1 << v for v in range(total)]
        if search(0, reach0, 0, 0):
            return list(chosen)
        return None

    found_k = None
    assignment = None
    exhausted = False
    k = 0
    while k <= max_k:
        try:
            res = feasible(k)
        except _Exhausted:
            exhausted = True
            break
        if res is not None:
            found_k = k
            assignment = res
            break
        k += 1

    if found_k is None:
        lower = k  # every value below k is refuted
        return OracleResult(
            exact=None, lower=lower, upper=None, witness=None, nodes=nodes, exhausted=exhausted
        )

    added = fresh_names(g.vertices, found_k)
    slot_name = {i: v for i, v in enumerate(verts)}
    for j, name in enumerate(added):
        slot_name[n + j] = name
    arcs = []
    for ci, p in assignment:
        prey = slot_name[p]
        for member in cliques[ci]:
            arcs.append((member, prey))
    d = Digraph(tuple(verts) + tuple(added), sorted(set(arcs), key=edge_key))
    w = Witness(d, base=g.vertices, added=added, trace=[{"step": "oracle", "k": found_k}])
    return OracleResult(
        exact=found_k,
        lower=found_k,
        upper=found_k,
        witness=w,
        nodes=nodes,
        exhausted=False,
    )
