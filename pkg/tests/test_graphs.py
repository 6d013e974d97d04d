import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
import compnum as cn
from compnum import (
    Cycle,
    Digraph,
    Graph,
    GraphValidationError,
    Path,
    PreconditionError,
    VertexTypeError,
    canonical_edge,
    vertex_key,
)
from compnum.errors import (
    DuplicateEdgeError,
    DuplicateVertexError,
    SelfLoopError,
    UndeclaredEndpointError,
)
from conftest import complete_graph, cycle_graph, path_graph


# ---------------------------------------------------------------------------
# vertex and edge keys


def test_vertex_key_orders_ints_before_strings():
    assert vertex_key(3) < vertex_key("a")
    assert vertex_key(-1) < vertex_key(0)
    assert vertex_key("a") < vertex_key("b")
    assert sorted([1, "b", 2, "a", -5], key=vertex_key) == [-5, 1, 2, "a", "b"]


@pytest.mark.parametrize("bad", [True, False, 1.5, None, (1,)])
def test_vertex_key_rejects_non_int_non_str(bad):
    with pytest.raises(VertexTypeError):
        vertex_key(bad)


def test_canonical_edge_sorts_endpoints():
    assert canonical_edge(2, 1) == (1, 2)
    assert canonical_edge("b", "a") == ("a", "b")
    assert canonical_edge("a", 7) == (7, "a")


def test_canonical_edge_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        canonical_edge(1, 1)


# ---------------------------------------------------------------------------
# Graph construction and validation


def test_graph_sorts_vertices_and_edges():
    g = Graph([3, 1, 2], [(3, 1), (2, 3)])
    assert g.vertices == (1, 2, 3)
    assert g.edges == ((1, 3), (2, 3))
    assert g.n == 3 and g.m == 2


def test_graph_validation_errors():
    with pytest.raises(DuplicateVertexError):
        Graph([1, 1], [])
    with pytest.raises(DuplicateEdgeError):
        Graph([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(SelfLoopError):
        Graph([1], [(1, 1)])
    with pytest.raises(UndeclaredEndpointError):
        Graph([1, 2], [(1, 3)])
    with pytest.raises(VertexTypeError):
        Graph([True], [])


def test_graph_accessors():
    g = Graph([1, 2, 3, "x"], [(1, 2), (2, 3), (2, "x")])
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)
    assert g.neighbors(2) == (1, 3, "x")
    assert g.degree(2) == 3 and g.degree("x") == 1
    assert g.has_vertex("x") and not g.has_vertex("y")


def test_graph_functional_updates_leave_original_intact():
    g = cycle_graph(4)
    h = g.remove_edge(1, 2)
    assert g.m == 4 and h.m == 3 and not h.has_edge(1, 2)
    h2 = g.remove_edges([(1, 2), (3, 4)])
    assert h2.m == 2
    h3 = g.remove_vertex(1)
    assert h3.vertices == (2, 3, 4) and h3.m == 2
    h4 = g.subgraph([1, 2, 3])
    assert h4.edges == ((1, 2), (2, 3))
    with pytest.raises(PreconditionError):
        g.remove_edge(1, 3)
    with pytest.raises(PreconditionError):
        g.remove_vertex(9)


def test_graph_equality_and_hash():
    a = Graph([1, 2], [(1, 2)])
    b = Graph([2, 1], [(2, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph([1, 2], [])


def test_graph_json_round_trip_is_bit_exact():
    g = Graph([2, 1, "v"], [(1, 2), (2, "v")])
    text = g.to_json()
    again = Graph.from_json(text)
    assert again == g
    assert again.to_json() == text
    obj = json.loads(text)
    assert set(obj) == {"vertices", "edges"}


def test_graph_from_json_rejects_malformed():
    with pytest.raises(GraphValidationError):
        Graph.from_json_dict({"vertices": [1, 2]})
    with pytest.raises(GraphValidationError):
        Graph.from_json_dict({"vertices": [1], "edges": [], "extra": 1})
    with pytest.raises(GraphValidationError):
        Graph.from_json_dict({"vertices": [1, 2], "edges": [[1, 2, 3]]})


def test_graph_to_dot_shape():
    g = Graph([1, "a"], [(1, "a")])
    dot = g.to_dot()
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert '"1" -- "a";' in dot


# ---------------------------------------------------------------------------
# Digraph


def test_digraph_basics():
    d = Digraph([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
    assert d.out_neighbors(1) == (2, 3)
    assert d.in_neighbors(3) == (1, 2)
    assert d.sources() == (1,)
    assert d.has_arc(1, 2) and not d.has_arc(2, 1)


def test_digraph_validation():
    with pytest.raises(UndeclaredEndpointError):
        Digraph([1], [(1, 2)])
    with pytest.raises(SelfLoopError):
        Digraph([1], [(1, 1)])
    with pytest.raises(DuplicateEdgeError):
        Digraph([1, 2], [(1, 2), (1, 2)])


def test_digraph_functional_updates():
    d = Digraph([1, 2], [(1, 2)])
    d2 = d.with_vertices([3]).with_arcs([(3, 1)])
    assert d2.sources() == (3,) and d.n == 2
    d3 = d2.without_vertices([2])
    assert d3.has_vertex(1) and not d3.has_vertex(2)
    assert not d3.arcs == d2.arcs


def test_digraph_relabel():
    d = Digraph([1, 2, 3], [(1, 2), (2, 3)])
    r = d.relabel({1: "a"})
    assert r.has_arc("a", 2) and not r.has_vertex(1)
    with pytest.raises(GraphValidationError):
        d.relabel({1: 2})  # collides with existing vertex


def test_digraph_json_round_trip():
    d = Digraph([1, "a"], [(1, "a")])
    text = d.to_json()
    assert Digraph.from_json(text) == d
    assert Digraph.from_json(text).to_json() == text
    assert '"1" -> "a";' in d.to_dot()


# ---------------------------------------------------------------------------
# Path and Cycle


def test_path_basics():
    p = Path([1, 2, 3])
    assert p.length == 2
    assert p.edges() == [(1, 2), (2, 3)]
    assert p.is_path_in(path_graph(3))
    assert not p.is_path_in(Graph([1, 2, 3], [(1, 2)]))
    with pytest.raises(GraphValidationError):
        Path([])
    with pytest.raises(GraphValidationError):
        Path([1, 2, 1])


def test_cycle_canonical_form():
    base = Cycle([1, 2, 3, 4])
    for rot in range(4):
        seq = [1, 2, 3, 4][rot:] + [1, 2, 3, 4][:rot]
        assert Cycle(seq) == base
        assert Cycle(list(reversed(seq))) == base
    assert base.vertices == (1, 2, 3, 4)
    # orientation picks the smaller second vertex
    assert Cycle([1, 4, 3, 2]).vertices == (1, 2, 3, 4)
    assert Cycle([3, 5, 1, 2]).vertices[0] == 1


def test_cycle_validation_and_membership():
    with pytest.raises(GraphValidationError):
        Cycle([1, 2])
    with pytest.raises(GraphValidationError):
        Cycle([1, 2, 3, 1])
    c = Cycle([2, 3, 4, 5])
    assert 3 in c and 1 not in c
    assert c.edge_set == {(2, 3), (3, 4), (4, 5), (2, 5)}
    assert c.is_cycle_in(cycle_graph(5)) is False
    assert Cycle([1, 2, 3]).is_cycle_in(complete_graph(3))


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 7))), st.integers(0, 5), st.booleans())
def test_cycle_rotation_reflection_invariance(seq, rot, flip):
    moved = list(seq[rot:]) + list(seq[:rot])
    if flip:
        moved = list(reversed(moved))
    assert Cycle(moved) == Cycle(seq)
    assert cn.cycle_key(Cycle(moved)) == cn.cycle_key(Cycle(seq))


# ---------------------------------------------------------------------------
# connectivity helpers vs deletion-based oracles


def test_connected_components_basic():
    g = Graph([1, 2, 3, 4, 5], [(1, 2), (3, 4)])
    comps = cn.connected_components(g)
    assert sorted(tuple(sorted(c)) for c in comps) == [(1, 2), (3, 4), (5,)]
    assert not cn.is_connected(g)
    assert cn.is_connected(cycle_graph(4))
    assert cn.is_connected(Graph([7], []))


@pytest.mark.parametrize("seed", range(40))
def test_cut_vertices_and_bridges_match_deletion_oracle(seed):
    g = bf.random_graph(seed, n_lo=3, n_hi=8, p_lo=0.15, p_hi=0.5)
    assert sorted(cn.cut_vertices(g)) == sorted(bf.cut_vertices_by_deletion(g))
    assert sorted(cn.bridges(g)) == sorted(bf.bridges_by_deletion(g))
    for e in g.edges:
        assert cn.is_cut_edge(g, e) == (e in bf.bridges_by_deletion(g))


def test_cut_vertices_named_cases():
    assert cn.cut_vertices(path_graph(5)) == (2, 3, 4)
    assert cn.cut_vertices(cycle_graph(5)) == ()
    assert cn.bridges(path_graph(3)) == ((1, 2), (2, 3))
    assert cn.bridges(cycle_graph(4)) == ()


# ---------------------------------------------------------------------------
# shortest_path_avoiding vs exhaustive search


def _oracle_best_path(g, source, targets, forbidden):
    best = None
    for t in targets:
        if t == source:
            return (source,)
        for p in bf.all_simple_paths(g, source, t, forbidden_internal=forbidden):
            key = (len(p), [vertex_key(v) for v in p])
            if best is None or key < (len(best), [vertex_key(v) for v in best]):
                best = p
    return best


@pytest.mark.parametrize("seed", range(30))
def test_shortest_path_avoiding_matches_exhaustive(seed):
    import random

    rng = random.Random(seed + 1000)
    g = bf.random_graph(seed, n_lo=4, n_hi=7, p_lo=0.2, p_hi=0.6)
    verts = list(g.vertices)
    source = rng.choice(verts)
    targets = set(rng.sample(verts, rng.randint(1, 3)))
    forbidden = set(rng.sample(verts, rng.randint(0, 2))) - {source}
    got = cn.shortest_path_avoiding(g, source, targets, forbidden)
    want = _oracle_best_path(g, source, targets, forbidden)
    if want is None:
        assert got is None
    else:
        assert got is not None
        assert got.vertices == tuple(want)


def test_shortest_path_avoiding_edge_cases():
    g = path_graph(4)
    p = cn.shortest_path_avoiding(g, 1, {4})
    assert p.vertices == (1, 2, 3, 4)
    assert cn.shortest_path_avoiding(g, 1, {4}, {2}) is None
    assert cn.shortest_path_avoiding(g, 1, {1}).vertices == (1,)
    assert cn.shortest_path_avoiding(g, 1, set()) is None
    with pytest.raises(PreconditionError):
        cn.shortest_path_avoiding(g, 9, {1})
    with pytest.raises(PreconditionError):
        cn.shortest_path_avoiding(g, 1, {4}, {1})
