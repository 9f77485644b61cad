import pytest

from treebased import (attach_leaf, count, decompose, deviation, deviation_via_matching,
                       gadget_with_profile, is_tree_based, random_network)
from treebased.decompose import KINDS, N_FENCE, W_FENCE
from treebased.errors import InfeasibleParameters, UnknownArc, Unrealizable

from conftest import PROFILE_5040, PROFILE_MIXED, PROFILE_ONE_W


def test_cherry():
    net = random_network(2, 0, 5)
    assert sorted(net.arc_names(a) for a in range(2)) == [("r", "x1"), ("r", "x2")]


@pytest.mark.parametrize("n, r", [(5, 3), (1, 2), (1, 5), (3, 4), (8, 0), (2, 9)])
@pytest.mark.parametrize("tb", [None, True, False])
def test_identities_and_counts(n, r, tb):
    try:
        net = random_network(n, r, 17, tb)
    except InfeasibleParameters:
        assert tb is False
        return
    assert net.is_binary
    assert len(net.leaves) == n and net.num_reticulations == r
    assert net.num_vertices == 2 * n + 2 * r - 1
    assert net.num_arcs == 2 * n + 3 * r - 2
    if tb is not None:
        assert is_tree_based(net) == tb


def test_example_arc_count():
    assert random_network(5, 3, 0).num_arcs == 17


def test_same_seed_same_network():
    assert random_network(6, 4, 99) == random_network(6, 4, 99)
    assert random_network(6, 4, 99) != random_network(6, 4, 100)


@pytest.mark.parametrize("n, r", [(0, 1), (1, 0), (1, 1), (3, -1)])
def test_infeasible(n, r):
    with pytest.raises(InfeasibleParameters):
        random_network(n, r, 0)


def test_too_few_reticulations_for_w_fence():
    # no binary network with r < 3 has a W-fence; sample many seeds
    for n in range(2, 6):
        for r in range(3):
            assert all(is_tree_based(random_network(n, r, s)) for s in range(100))
            with pytest.raises(InfeasibleParameters):
                random_network(n, r, 0, tree_based=False)


def test_mixed_corpus_has_both_kinds():
    kinds = {is_tree_based(random_network(4, 4, s)) for s in range(60)}
    assert kinds == {True, False}


@pytest.mark.parametrize("profile", [PROFILE_5040, PROFILE_ONE_W, PROFILE_MIXED,
                                     [("N-fence", 1)], [("M-fence", 2)],
                                     [("M-fence", 2), ("M-fence", 2), ("crown", 4)] +
                                     [("N-fence", 1)] * 2])
def test_gadget_profile_round_trip(profile):
    net = gadget_with_profile(profile)
    assert decompose(net).profile() == sorted(profile)
    # arcs are emitted trail by trail, so the trails come out in profile order
    assert [(t.kind, t.size) for t in decompose(net).trails] == list(profile)


def test_gadget_5040():
    net = gadget_with_profile(PROFILE_5040)
    assert count(net) == 5040
    assert len(net.leaves) == 8 and net.num_reticulations == 21


@pytest.mark.parametrize("profile", [[], [("M-fence", 3)], [("crown", 2)], [("N-fence", 2)],
                                     [("W-fence", 2)], [("spiral", 4)]])
def test_unrealizable(profile):
    with pytest.raises(Unrealizable):
        gadget_with_profile(profile)


def test_attach_leaf_on_w_fence():
    net = gadget_with_profile(PROFILE_ONE_W)
    d = decompose(net)
    fence = d.trails[d.w_fences[0]]
    for a in fence.arcs:
        new = attach_leaf(net, a)
        assert deviation(new).delta == 0
        assert deviation_via_matching(new) == 0
        assert len(new.leaves) == len(net.leaves) + 1
        assert new.num_arcs == net.num_arcs + 2
        assert new.weights[a] == net.weights[a]


def test_attach_on_several_w_fences():
    for seed in range(200):
        net = random_network(4, 6, seed, tree_based=False)
        d = decompose(net)
        if len(d.w_fences) >= 2:
            break
    delta = deviation(net).delta
    for i in d.w_fences:
        a = d.trails[i].arcs[0]
        before = deviation(net).delta
        net = attach_leaf(net, a)
        assert deviation(net).delta == before - 1
    assert delta >= 2 and is_tree_based(net)


def test_attach_on_n_fence_keeps_delta():
    for seed in range(50):
        net = random_network(4, 5, seed)
        d = decompose(net)
        for t in d.trails:
            if t.kind == N_FENCE:
                assert deviation(attach_leaf(net, t.arcs[0])).delta == deviation(d).delta


def test_attach_leaf_names_and_errors():
    net = random_network(3, 1, 0)
    new = attach_leaf(net, 0, leaf_name="new_leaf")
    assert "new_leaf" in new.index and "w1" in new.index
    with pytest.raises(UnknownArc):
        attach_leaf(net, net.num_arcs)


def test_kinds_constant():
    assert W_FENCE in KINDS and len(KINDS) == 4
