"""Instance generators for the supported graph classes.

Every generated graph is re-validated against the census it was built to
have (hole set, clique number, class flags) before being returned, so a
construction bug here surfaces as GenerationError instead of leaking bad
fixtures into experiments.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import GenerationError, PreconditionError
from .graphs import Cycle, Graph, canonical_edge
from .structure import validate_hypotheses


def _post_validate(g: Graph, *, h: int, omega: int, core, holes, what: str) -> Graph:
    rep = validate_hypotheses(g)
    problems = []
    if rep.h != h:
        problems.append(f"hole count {rep.h}, wanted {h}")
    got = sorted(hole.vertices for hole in rep.holes)
    want = sorted(c.vertices for c in holes)
    if got != want:
        problems.append(f"hole set {got!r}, wanted {want!r}")
    if rep.omega != omega:
        problems.append(f"clique number {rep.omega}, wanted {omega}")
    if not rep.passes:
        problems.append(f"flags {rep.flags}")
    if omega >= 3 and (rep.K is None or rep.K.members != tuple(core)):
        problems.append(f"designated clique {rep.K!r}, wanted {tuple(core)!r}")
    if problems:
        raise GenerationError(f"{what} instance failed validation: " + "; ".join(problems))
    return g


def gen_flower(h: int, lengths=None) -> Graph:
    """Clique on h+1 vertices with one hole hung on each spine edge.

    Hole j closes through the clique edge (j, j+1) with lengths[j]-2 fresh
    chain vertices, so the clique number is h+1, the holes are pairwise
    edge-disjoint, and every hole meets the clique in exactly one edge.
    """
    if h < 1:
        raise PreconditionError("a flower needs at least one hole")
    if lengths is None:
        lengths = (4,) * h
    lengths = tuple(int(x) for x in lengths)
    if len(lengths) != h:
        raise PreconditionError(f"{h} holes need {h} lengths, got {len(lengths)}")
    if any(x < 4 for x in lengths):
        raise PreconditionError("hole lengths must be at least 4")
    core = list(range(1, h + 2))
    vertices = list(core)
    edges = [canonical_edge(a, b) for a, b in combinations(core, 2)]
    holes = []
    nxt = h + 2
    for j in range(h):
        chain = list(range(nxt, nxt + lengths[j] - 2))
        nxt += lengths[j] - 2
        vertices.extend(chain)
        ring = [j + 1] + chain + [j + 2]
        edges.extend(canonical_edge(ring[i], ring[i + 1]) for i in range(len(ring) - 1))
        holes.append(Cycle(ring))
    g = Graph(vertices, edges)
    return _post_validate(g, h=h, omega=h + 1, core=core, holes=holes, what="flower")


@dataclass(frozen=True)
class FamilySpec:
    """Plan for one clique-with-attached-holes instance.

    attachments[j] places hole j: ("edge", i) rides the i-th clique edge in
    canonical order, ("pendant", v) touches the clique only at vertex v.
    A clique number of 2 with no edge attachment collapses the core to a
    single vertex, so an all-pendant plan gives vertex-glued cycles.
    """

    omega: int
    h: int
    hole_lengths: tuple
    attachments: tuple
    seed: int | None = None


def gen_family(spec: FamilySpec) -> Graph:
    if spec.omega < 2:
        raise PreconditionError("clique number below 2 leaves nothing to attach to")
    if spec.h < 1:
        raise PreconditionError("the family needs at least one hole")
    lengths = tuple(int(x) for x in spec.hole_lengths)
    if len(lengths) != spec.h or len(spec.attachments) != spec.h:
        raise PreconditionError(
            f"{spec.h} holes need {spec.h} lengths and attachments, "
            f"got {len(lengths)} and {len(spec.attachments)}"
        )
    if any(x < 4 for x in lengths):
        raise PreconditionError("hole lengths must be at least 4")
    edge_refs = [ref for kind, ref in spec.attachments if kind == "edge"]
    if spec.omega == 2 and not edge_refs:
        core = [1]
    else:
        core = list(range(1, spec.omega + 1))
    core_edges = [canonical_edge(a, b) for a, b in combinations(core, 2)]
    if len(set(edge_refs)) != len(edge_refs):
        raise PreconditionError("each clique edge can carry at most one hole")
    vertices = list(core)
    edges = list(core_edges)
    holes = []
    nxt = max(core) + 1
    for j, (kind, ref) in enumerate(spec.attachments):
        if kind == "edge":
            if not isinstance(ref, int) or not 0 <= ref < len(core_edges):
                raise PreconditionError(f"attachment {j}: no clique edge with index {ref!r}")
            a, b = core_edges[ref]
            chain = list(range(nxt, nxt + lengths[j] - 2))
            nxt += lengths[j] - 2
            ring = [a] + chain + [b]
            close = []  # the ring closes through the existing clique edge
        elif kind == "pendant":
            if ref not in core:
                raise PreconditionError(f"attachment {j}: {ref!r} is not a core vertex")
            chain = list(range(nxt, nxt + lengths[j] - 1))
            nxt += lengths[j] - 1
            ring = [ref] + chain
            close = [canonical_edge(ring[-1], ring[0])]
        else:
            raise PreconditionError(f"attachment {j}: unknown kind {kind!r}")
        vertices.extend(chain)
        edges.extend(canonical_edge(ring[i], ring[i + 1]) for i in range(len(ring) - 1))
        edges.extend(close)
        holes.append(Cycle(ring))
    seen = set()
    for e in edges:
        if e in seen:
            raise PreconditionError(f"attachment plan repeats the edge {e!r}")
        seen.add(e)
    g = Graph(vertices, edges)
    return _post_validate(g, h=spec.h, omega=spec.omega, core=core, holes=holes, what="family")


def default_family_spec(omega: int, h: int, lengths=None, seed: int = 0) -> FamilySpec:
    """Deterministic random attachment plan for the given window point."""
    if omega < 2:
        raise PreconditionError("clique number below 2 leaves nothing to attach to")
    if h < 1:
        raise PreconditionError("the family needs at least one hole")
    if lengths is None:
        lengths = (4,) * h
    lengths = tuple(int(x) for x in lengths)
    if len(lengths) != h:
        raise PreconditionError(f"{h} holes need {h} lengths, got {len(lengths)}")
    rng = random.Random(seed)
    attachments: list[tuple] = []
    if omega == 2:
        if rng.random() < 0.5:
            rider = rng.randrange(h)
            for j in range(h):
                if j == rider:
                    attachments.append(("edge", 0))
                else:
                    attachments.append(("pendant", rng.choice((1, 2))))
        else:
            attachments.extend(("pendant", 1) for _ in range(h))
    else:
        core = list(range(1, omega + 1))
        slots = list(range(len(list(combinations(core, 2)))))
        rng.shuffle(slots)
        for _ in range(h):
            if slots and rng.random() < 0.7:
                attachments.append(("edge", slots.pop()))
            else:
                attachments.append(("pendant", rng.choice(core)))
    return FamilySpec(
        omega=omega, h=h, hole_lengths=lengths, attachments=tuple(attachments), seed=seed
    )


def _prufer_decode(seq, n: int):
    """Edges of the labeled tree on 1..n encoded by the sequence."""
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(canonical_edge(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append(canonical_edge(a, b))
    return edges


def gen_triangle_free_random(n: int, extra: int, seed: int = 0) -> Graph:
    """Random labeled tree plus extra edges that close no triangle.

    Drawn deterministically from the seed; raises GenerationError when no
    admissible extra edge remains, so callers can retry with other seeds.
    """
    if n < 2:
        raise PreconditionError("need at least two vertices")
    if extra < 0:
        raise PreconditionError("extra edge count cannot be negative")
    rng = random.Random(seed)
    if n == 2:
        edges = [(1, 2)]
    else:
        seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
        edges = _prufer_decode(seq, n)
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for _ in range(extra):
        cand = [
            (u, v)
            for u, v in combinations(range(1, n + 1), 2)
            if v not in adj[u] and not adj[u] & adj[v]
        ]
        if not cand:
            raise GenerationError(
                f"no triangle-free edge can be added (n={n}, edges={len(edges)})"
            )
        u, v = cand[rng.randrange(len(cand))]
        edges.append((u, v))
        adj[u].add(v)
        adj[v].add(u)
    return Graph(range(1, n + 1), edges)
