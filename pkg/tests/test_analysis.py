import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treebased import (brute_force_admissible_sets, build_network, count, decompose, deviation,
                       enumerate_k, enumerate_trees, find_subdivision_tree, gadget_with_profile,
                       is_admissible_global, is_admissible_local, is_tree_based, open_cursor,
                       optimize, path_partition_from_tree, random_network, sample_uniform,
                       verify_subdivision_tree)
from treebased.errors import InvalidTree, KExceedsCount, NotTreeBased

from conftest import PROFILE_5040, PROFILE_MIXED, PROFILE_ONE_W, networks, partition_ok

M6_ONLY = [("M-fence", 6), ("M-fence", 2), ("M-fence", 2), ("N-fence", 1), ("N-fence", 1)]


def test_small_network_counts(small_net):
    assert count(small_net) == 2
    trees = list(enumerate_trees(small_net))
    assert len(trees) == 2 and len({t.arcs for t in trees}) == 2


def test_tree_is_its_own_subdivision_tree():
    net = random_network(6, 0, 3)
    assert is_tree_based(net)
    assert find_subdivision_tree(net).arcs == tuple(range(net.num_arcs))
    cur = open_cursor(net)
    assert cur.next() is not None and cur.next() is None and cur.next() is None


def test_one_w_fence():
    net = gadget_with_profile(PROFILE_ONE_W)
    assert not is_tree_based(net)
    with pytest.raises(NotTreeBased) as info:
        find_subdivision_tree(net)
    assert len(info.value.witnesses) == 1
    assert brute_force_admissible_sets(net) == []
    rep = deviation(net)
    assert rep.delta == rep.w_fence_count == rep.leaf_index == rep.path_index == 1
    assert count(net) == 0
    assert list(enumerate_trees(net)) == []
    with pytest.raises(NotTreeBased):
        optimize(net)
    with pytest.raises(NotTreeBased):
        sample_uniform(net, 1, 3)


def test_count_5040():
    assert count(gadget_with_profile(PROFILE_5040)) == 5040


def test_count_big_is_exact():
    # 4^30 exceeds 64 bits: count must stay an exact integer
    net = gadget_with_profile([("M-fence", 2)] * 3 + [("M-fence", 8)] * 30 + [("N-fence", 1)] * 90)
    assert count(net) == 4 ** 30


def test_m6_stream_patterns():
    net = gadget_with_profile(M6_ONLY)
    d = decompose(net)
    m6 = next(t for t in d.trails if t.size == 6)
    seen = []
    for tree in enumerate_trees(d):
        s = tree.arc_set()
        seen.append(tuple(int(a in s) for a in m6.arcs))
    assert seen == [(1, 1, 0, 1, 0, 1), (1, 0, 1, 1, 0, 1), (1, 0, 1, 0, 1, 1)]


def test_enumerate_k():
    net = gadget_with_profile(PROFILE_MIXED)
    assert enumerate_k(net, 0) == []
    assert enumerate_k(net, 1)[0].arcs == find_subdivision_tree(net).arcs
    assert [t.arcs for t in enumerate_k(net, 6)] == [t.arcs for t in enumerate_trees(net)]
    with pytest.raises(KExceedsCount):
        enumerate_k(net, 7)


def test_odometer_order():
    net = gadget_with_profile(PROFILE_MIXED)
    sel = [t.selection for t in enumerate_trees(net)]
    assert sel == sorted(sel)
    assert len(set(sel)) == 6


def test_optimize_defaults_and_zero_weights(small_net):
    tree, score = optimize(small_net, [0.0] * 5)
    assert score == 0.0 and tree.arcs == find_subdivision_tree(small_net).arcs
    with pytest.raises(ValueError):
        optimize(small_net, [1.0] * 4)
    with pytest.raises(ValueError):
        optimize(small_net, [-1.0] * 5)
    with pytest.raises(ValueError):
        optimize(small_net, [1.0] * 5, "sideways")


def test_optimize_uses_network_weights():
    from treebased import parse_edge_list
    net = parse_edge_list("r a 0\nr b 0\na x1 0\na b 3\nb x2 0\n")
    tree, score = optimize(net)
    assert score == 3.0 and 3 in tree.arcs
    tree, score = optimize(net, direction="min")
    assert score == 0.0


def test_sample_determinism_and_alpha_one():
    net = gadget_with_profile(PROFILE_MIXED)
    assert sample_uniform(net, 42, 50) == sample_uniform(net, 42, 50)
    assert sample_uniform(net, 42, 50) != sample_uniform(net, 43, 50)
    tree_net = random_network(5, 0, 1)
    draws = sample_uniform(tree_net, 9, 20)
    assert len({t.arcs for t in draws}) == 1
    with pytest.raises(ValueError):
        sample_uniform(net, -1, 1)
    with pytest.raises(ValueError):
        sample_uniform(net, 2 ** 64, 1)
    assert sample_uniform(net, 2 ** 64 - 1, 0) == []


def test_verify_rejects():
    net = build_network([("r", "a"), ("r", "b"), ("a", "x1"), ("a", "b"), ("b", "x2")])
    tree = find_subdivision_tree(net)
    assert verify_subdivision_tree(net, tree)
    leaf_arc = net.in_arcs(net.vertex("x1"))[0]
    assert not verify_subdivision_tree(net, [a for a in tree.arcs if a != leaf_arc])
    assert not verify_subdivision_tree(net, range(net.num_arcs))
    assert not verify_subdivision_tree(net, [0, 0, 1, 2])
    assert not verify_subdivision_tree(net, [99])
    assert not is_admissible_global(net, [])
    with pytest.raises(InvalidTree):
        path_partition_from_tree(net, range(net.num_arcs))


def test_cherry_partition():
    net = random_network(2, 0, 0)
    pp = path_partition_from_tree(net, find_subdivision_tree(net))
    assert len(pp) == 2 and partition_ok(net, pp)


@settings(max_examples=150, deadline=None)
@given(networks(max_leaves=5, max_ret=4))
def test_enumeration_equals_oracle(net):
    if net.num_arcs > 20:
        return
    fam = brute_force_admissible_sets(net)
    trees = list(enumerate_trees(net))
    assert {t.arc_set() for t in trees} == set(fam)
    assert len({t.arc_set() for t in trees}) == len(trees) == count(net) == len(fam)
    assert is_tree_based(net) == bool(fam)
    d = decompose(net)
    for tree in trees:
        assert verify_subdivision_tree(net, tree)
        assert is_admissible_global(net, tree)
        s = tree.arc_set()
        local = all(is_admissible_local(t, [int(a in s) for a in t.arcs]) for t in d.trails)
        assert local
        assert partition_ok(net, path_partition_from_tree(net, tree))


@settings(max_examples=80, deadline=None)
@given(networks(max_leaves=4, max_ret=3), st.integers(0, 2 ** 32 - 1))
def test_global_equals_conjunction_of_local(net, seed):
    # random subsets, not just admissible ones
    rng = random.Random(seed)
    d = decompose(net)
    for _ in range(50):
        s = {a for a in range(net.num_arcs) if rng.random() < 0.6}
        local = all(is_admissible_local(t, [int(a in s) for a in t.arcs]) for t in d.trails)
        assert is_admissible_global(net, s) == local


@settings(max_examples=100, deadline=None)
@given(networks(max_leaves=5, max_ret=4), st.integers(0, 2 ** 32 - 1))
def test_optimize_equals_exhaustive(net, seed):
    if not is_tree_based(net) or count(net) > 5000:
        return
    rng = random.Random(seed)
    ws = [rng.random() for _ in range(net.num_arcs)]
    scores = [t.score(ws) for t in enumerate_trees(net)]
    for direction, ext in (("max", max), ("min", min)):
        tree, score = optimize(net, ws, direction)
        assert abs(score - ext(scores)) <= 1e-9
        assert tree.score(ws) == score
        assert verify_subdivision_tree(net, tree)


def test_cursor_iteration_protocol(small_net):
    cur = open_cursor(small_net)
    assert [t.arcs for t in cur] == [t.arcs for t in enumerate_trees(small_net)]
    assert cur.next() is None
