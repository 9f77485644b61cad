import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treebased import (build_network, decompose, export_dot, find_subdivision_tree,
                       gadget_with_profile, parse_edge_list, parse_enewick, write_edge_list)
from treebased.errors import (DegreeViolation, DuplicateArc, NegativeWeight, NetworkSyntaxError,
                              UnpairedHybridTag)

from conftest import PROFILE_MIXED, SMALL_EL, networks


def test_edge_list_example():
    n = parse_edge_list(SMALL_EL)
    assert n.num_arcs == 5
    assert n.indegree(n.vertex("b")) == 2


def test_edge_list_comments_tabs_and_weights():
    n = parse_edge_list("# header\n\nr\tx1   0.5\n")
    assert n.weights == (0.5,)


def test_edge_list_negative_weight():
    with pytest.raises(NegativeWeight):
        parse_edge_list("r x1 -1")


@pytest.mark.parametrize("text, line", [
    ("r a\nr b\nr a\n", 3),
    ("r x1\nr x1 x2 x3\n", 2),
    ("r x1\nr x2 abc\n", 2),
    ("r a\nr b\n# c\na x -2\nb y\n", 4),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises((NetworkSyntaxError, DuplicateArc, NegativeWeight)) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_write_minimal():
    assert write_edge_list(build_network([("r", "x1")])) == "r x1\n"


def test_weight_round_trip_shortest_decimal():
    for w in (0.1, 1 / 3, 1e-300, 123456789.125, 0.0, 5e-324):
        n = build_network([("r", "x1", w)])
        text = write_edge_list(n)
        assert text == f"r x1 {w!r}\n"
        assert parse_edge_list(text).weights[0] == w


def test_round_trip_fixture():
    n = gadget_with_profile(PROFILE_MIXED)
    assert parse_edge_list(write_edge_list(n)) == n


@settings(max_examples=60, deadline=None)
@given(networks(), st.integers(0, 2 ** 32 - 1))
def test_round_trip_property(net, seed):
    rng = random.Random(seed)
    recs = [(*net.arc_names(a), rng.random() * 10 ** rng.randint(-5, 5))
            if rng.random() < 0.5 else net.arc_names(a) for a in range(net.num_arcs)]
    n = build_network(recs)
    back = parse_edge_list(write_edge_list(n))
    assert back == n
    assert back.weights == n.weights


def test_enewick_hybrid_merge():
    n = parse_enewick("((x1,(x2)#H1),(#H1,x3));")
    assert n.num_reticulations == 1
    assert {n.names[v] for v in n.leaves} == {"x1", "x2", "x3"}
    h = n.vertex("H1")
    assert n.indegree(h) == 2 and n.outdegree(h) == 1


def test_enewick_tree():
    n = parse_enewick("(x1,x2);")
    assert n.num_arcs == 2 and n.num_reticulations == 0


def test_enewick_unpaired():
    with pytest.raises(UnpairedHybridTag) as info:
        parse_enewick("((x2)#H1,x1);")
    assert info.value.tag == 1


def test_enewick_lengths_become_weights():
    n = parse_enewick("((a:1.5,(b:0.25)#H1:0.1)u,(#H1:2,c));")
    w = {n.arc_names(i): n.weights[i] for i in range(n.num_arcs)}
    assert w[("u", "a")] == 1.5
    assert w[("u", "H1")] == 0.1
    assert w[("H1", "b")] == 0.25
    assert n.names[n.root] not in {"a", "b", "c", "u", "H1"}


def test_enewick_named_hybrid_and_fresh_names():
    n = parse_enewick("((v1,(x)h#H2),(h#H2,v2));")
    assert "h" in n.index
    # generated internal names skip the labels already taken
    assert len(set(n.names)) == n.num_vertices


@pytest.mark.parametrize("text", [
    "(x1,x1);", "(x1,x2)", "((x1,x2);", "(x1,x2));", "(x1,,x2);", "(x1,x2#);",
    "(x1:abc,x2);", "(x1,x2); junk", "((a)#H1,(b)#H1);", "(,x);",
])
def test_enewick_syntax_errors(text):
    with pytest.raises(NetworkSyntaxError) as info:
        parse_enewick(text)
    assert info.value.position is not None


def test_enewick_degree_violation_after_merge():
    # the hybrid has no child list anywhere, so it would be a leaf with two parents
    with pytest.raises(DegreeViolation):
        parse_enewick("((x1,#H1),(#H1,x3));")


def test_enewick_deep_caterpillar():
    depth = 5000
    text = "(" * depth + "x0" + "".join(f",x{i})" for i in range(1, depth + 1)) + ";"
    n = parse_enewick(text)
    assert len(n.leaves) == depth + 1


def test_enewick_and_edge_list_agree():
    a = parse_enewick("((x1,(x2)#H1),(#H1,x3));")
    b = parse_edge_list(write_edge_list(a))
    assert a == b


def test_dot_minimal():
    text = export_dot(build_network([("r", "x1")]))
    assert text.startswith("digraph")
    assert text.count("->") == 1
    assert text.count("[shape=") == 2


def test_dot_trail_overlay():
    n = gadget_with_profile(PROFILE_MIXED)
    text = export_dot(n, decompose(n))
    assert text.count("color=\"#") == n.num_arcs
    assert export_dot(n, decompose(n)) == text


def test_dot_tree_overlay():
    n = gadget_with_profile(PROFILE_MIXED)
    text = export_dot(n, find_subdivision_tree(n))
    assert text.count("style=bold") == n.num_vertices - 1


def test_dot_quotes_names():
    n = build_network([('r"', "x\\1")])
    assert '"r\\""' in export_dot(n)
