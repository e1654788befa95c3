import random

import pytest

from bondage_bounds.domination import (
    domination_number,
    has_dominating_set_of_size,
    is_dominating,
)
from bondage_bounds.graph_core import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    max_degree,
    path_graph,
    petersen_graph,
    remove_edges,
)

from graphgen import random_graph
from oracles import brute_gamma


def test_is_dominating_examples():
    assert is_dominating(cycle_graph(4), {0, 2})
    assert is_dominating(complete_graph(5), {0})
    assert not is_dominating(path_graph(4), {0})


def test_is_dominating_rejects_bad_ids():
    with pytest.raises(IndexError):
        is_dominating(path_graph(3), {5})


@pytest.mark.parametrize("n", range(1, 8))
def test_complete(n):
    assert domination_number(complete_graph(n))[0] == 1


def test_c6_and_petersen_against_brute_force():
    for g, expected in ((cycle_graph(6), 2), (petersen_graph(), 3)):
        assert brute_gamma(g.n, g.edges()) == expected
        gamma, witness = domination_number(g)
        assert gamma == expected
        assert witness.size == gamma
        assert is_dominating(g, witness.members)


@pytest.mark.parametrize("n", [0, 1, 4])
def test_edgeless(n):
    assert domination_number(empty_graph(n))[0] == n


def test_witness_is_deterministic():
    g = petersen_graph()
    assert domination_number(g) == domination_number(g)


def test_matches_brute_force_on_atlas(atlas):
    for g in atlas:
        gamma, witness = domination_number(g)
        assert gamma == brute_gamma(g.n, g.edges())
        assert list(witness.members) == sorted(witness.members)
        assert is_dominating(g, witness.members)


def test_has_dominating_set_of_size(atlas):
    for g in atlas[::7]:
        gamma = domination_number(g)[0]
        assert has_dominating_set_of_size(g, gamma)
        assert not has_dominating_set_of_size(g, gamma - 1)


def test_disjoint_union_is_additive():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 7), 0.4)
        h = random_graph(rng, rng.randrange(1, 7), 0.4)
        assert domination_number(disjoint_union(g, h))[0] == domination_number(g)[0] + domination_number(h)[0]


def test_edge_removal_raises_by_at_most_one(atlas):
    for g in atlas:
        gamma = domination_number(g)[0]
        for e in g.edges():
            assert domination_number(remove_edges(g, [e]))[0] in (gamma, gamma + 1)


def test_trivial_bounds(atlas):
    for g in atlas:
        gamma = domination_number(g)[0]
        assert -(-g.n // (max_degree(g) + 1)) <= gamma <= g.n
