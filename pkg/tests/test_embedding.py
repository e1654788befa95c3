import random
from fractions import Fraction

import networkx as nx
import pytest

from bondage_bounds.embedding import (
    DegenerateFaceError,
    EmbeddingError,
    RotationBudgetExceeded,
    RotationSystem,
    all_rotation_systems,
    curvature_sum,
    curvatures,
    default_rotation,
    edge_curvature,
    euler_characteristic,
    format_rotation,
    max_euler_characteristic,
    orbit_faces,
    parse_rotation,
    planar_k4_rotation,
    random_rotation,
    rotation_count,
    small_face_edges,
    trace_faces,
)
from bondage_bounds.graph_core import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    relabel,
    star_graph,
)

from graphgen import random_connected_graph


def _switch(rot, v):
    """Local switch at v: reverse its rotation and flip every incident signature."""
    order = list(rot.order)
    order[v] = tuple(reversed(order[v]))
    flipped = {(min(v, u), max(v, u)) for u in rot.order[v]}
    return RotationSystem(tuple(order), rot.negative ^ flipped)


class TestTraceFaces:
    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_path_single_face(self, n):
        rng = random.Random(n)
        g = path_graph(n)
        faces = trace_faces(g, random_rotation(g, rng))
        assert faces.degrees == (2 * (n - 1),)

    def test_triangle(self):
        assert sorted(trace_faces(cycle_graph(3), default_rotation(cycle_graph(3))).degrees) == [3, 3]

    def test_k4_planar(self):
        faces = trace_faces(complete_graph(4), planar_k4_rotation())
        assert faces.degrees == (3, 3, 3, 3)

    def test_single_vertex(self):
        assert len(trace_faces(path_graph(1), default_rotation(path_graph(1)))) == 1

    def test_disconnected_rejected(self):
        g = disjoint_union(cycle_graph(3), cycle_graph(3))
        with pytest.raises(EmbeddingError):
            trace_faces(g, default_rotation(g))

    @pytest.mark.parametrize(
        "rot",
        [
            RotationSystem(((1, 2), (0, 2), (0,))),
            RotationSystem(((1, 2), (0, 2), (0, 1, 1))),
            RotationSystem(((1, 2), (0, 2))),
            RotationSystem(((1, 2), (0, 2), (0, 1)), frozenset({(0, 5)})),
        ],
    )
    def test_malformed_rotation(self, rot):
        with pytest.raises(EmbeddingError):
            trace_faces(cycle_graph(3), rot)

    def test_random_invariants(self):
        rng = random.Random(17)
        for _ in range(300):
            g = random_connected_graph(rng, rng.randrange(2, 11), rng.random())
            rot = random_rotation(g, rng, signatures=rng.random() < 0.5)
            faces = trace_faces(g, rot)
            assert sum(faces.degrees) == 2 * g.m
            counts = {}
            for walk in faces.faces:
                for u, v in walk:
                    e = (min(u, v), max(u, v))
                    counts[e] = counts.get(e, 0) + 1
            assert counts == {e: 2 for e in g.edges()}
            chi = euler_characteristic(g, rot)
            assert chi <= 2
            if rot.is_orientable_labelling:
                assert chi % 2 == 0

    def test_walks_are_closed(self):
        rng = random.Random(4)
        for _ in range(100):
            g = random_connected_graph(rng, rng.randrange(2, 9), 0.5)
            for walk in trace_faces(g, random_rotation(g, rng, True)).faces:
                for (_, b), (c, _) in zip(walk, walk[1:] + walk[:1]):
                    assert b == c

    def test_orbits_agree_when_orientable(self):
        rng = random.Random(8)
        for _ in range(200):
            g = random_connected_graph(rng, rng.randrange(2, 10), 0.5)
            rot = random_rotation(g, rng)
            a = sorted(sorted(w) for w in trace_faces(g, rot).faces)
            b = sorted(sorted(w) for w in orbit_faces(g, rot).faces)
            assert a == b

    def test_switching_preserves_faces(self):
        # a signed system switching-equivalent to an orientable one has the same face count
        rng = random.Random(21)
        for _ in range(200):
            g = random_connected_graph(rng, rng.randrange(2, 10), 0.5)
            rot = random_rotation(g, rng)
            switched = rot
            for v in range(g.n):
                if rng.random() < 0.5:
                    switched = _switch(switched, v)
            assert sorted(trace_faces(g, switched).degrees) == sorted(orbit_faces(g, rot).degrees)


class TestCurvature:
    def test_triangle(self):
        g = cycle_graph(3)
        assert set(curvatures(g, default_rotation(g)).values()) == {0}

    def test_k4(self):
        assert set(curvatures(complete_graph(4), planar_k4_rotation()).values()) == {0}

    def test_p2_is_degenerate(self):
        g = path_graph(2)
        rot = default_rotation(g)
        faces = trace_faces(g, rot)
        assert small_face_edges(faces) == [(0, 1)]
        with pytest.raises(DegenerateFaceError):
            edge_curvature(g, rot, faces, (0, 1))
        # the value is still available for reporting
        assert edge_curvature(g, rot, faces, (0, 1), strict=False) == 0

    def test_path_values(self):
        g = path_graph(5)
        w = curvatures(g, default_rotation(g))
        # 1/d(u) + 1/d(v) - 1 + 2/8 - 2/4
        assert w[(0, 1)] == Fraction(1) + Fraction(1, 2) - 1 + Fraction(1, 4) - Fraction(1, 2)
        assert sum(w.values()) == 0

    def test_not_an_edge(self):
        g = path_graph(3)
        rot = default_rotation(g)
        with pytest.raises(EmbeddingError):
            edge_curvature(g, rot, trace_faces(g, rot), (0, 2))

    def test_petersen_random_rotations(self):
        rng = random.Random(1)
        g = petersen_graph()
        for _ in range(50):
            assert curvature_sum(g, random_rotation(g, rng)) == 0

    def test_k5_signed_rotations(self):
        rng = random.Random(2)
        g = complete_graph(5)
        values = set()
        for _ in range(50):
            rot = random_rotation(g, rng, signatures=True)
            assert curvature_sum(g, rot) == 0
            values |= set(curvatures(g, rot).values())
        assert any(v != 0 for v in values)

    def test_sum_is_exactly_zero(self):
        rng = random.Random(99)
        for _ in range(300):
            g = random_connected_graph(rng, rng.randrange(3, 11), rng.random())
            rot = random_rotation(g, rng, signatures=rng.random() < 0.5)
            total = curvature_sum(g, rot)
            assert isinstance(total, Fraction)
            assert total == 0

    def test_edgeless_rejected(self):
        with pytest.raises(EmbeddingError):
            curvature_sum(path_graph(1), default_rotation(path_graph(1)))


def _brute_orientable(g):
    return max(g.n - g.m + len(orbit_faces(g, r)) for r in all_rotation_systems(g))


def _brute_signed(g):
    return max(euler_characteristic(g, r) for r in all_rotation_systems(g, signatures=True))


class TestMaxEulerCharacteristic:
    @pytest.mark.parametrize("g", [path_graph(6), star_graph(5), path_graph(1)])
    def test_trees(self, g):
        assert max_euler_characteristic(g) == 2
        assert max_euler_characteristic(g, allow_signatures=True) == 2

    @pytest.mark.parametrize(
        "g, orientable, signed",
        [
            (complete_graph(4), 2, 2),
            (complete_graph(5), 0, 1),
            (complete_bipartite(3, 3), 0, 1),
            (petersen_graph(), 0, 1),
            (complete_graph(6), 0, 1),
        ],
    )
    def test_known_values(self, g, orientable, signed):
        assert max_euler_characteristic(g) == orientable
        assert max_euler_characteristic(g, allow_signatures=True) == signed

    @pytest.mark.parametrize("g, chi", [(complete_graph(7), 0), (complete_bipartite(4, 4), 0)])
    def test_torus_graphs(self, g, chi):
        assert max_euler_characteristic(g) == chi

    @pytest.mark.parametrize("g", [complete_graph(4), complete_graph(5), complete_bipartite(3, 3)])
    def test_brute_force_small(self, g):
        assert max_euler_characteristic(g) == _brute_orientable(g)

    def test_brute_force_on_atlas(self, connected_atlas):
        checked = 0
        for g in connected_atlas:
            if rotation_count(g) > 3000:
                continue
            assert max_euler_characteristic(g) == _brute_orientable(g)
            checked += 1
        assert checked > 500

    def test_signed_brute_force(self, connected_atlas):
        checked = 0
        for g in connected_atlas:
            if g.n > 6 or rotation_count(g) << g.m > 4000:
                continue
            assert max_euler_characteristic(g, allow_signatures=True) == _brute_signed(g)
            checked += 1
        assert checked >= 50

    def test_planarity_on_atlas(self, connected_atlas):
        for g in connected_atlas:
            planar, _ = nx.check_planarity(nx.Graph(g.edges()))
            assert (max_euler_characteristic(g) == 2) == planar

    def test_returned_rotation_attains_value(self, connected_atlas):
        for g in connected_atlas[::5]:
            for signed in (False, True):
                chi, rot = max_euler_characteristic(g, allow_signatures=signed, return_rotation=True)
                assert euler_characteristic(g, rot) == chi
                if not signed:
                    assert rot.is_orientable_labelling

    def test_isomorphism_invariance(self):
        rng = random.Random(6)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randrange(3, 9), 0.5)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert max_euler_characteristic(g) == max_euler_characteristic(h)
            if g.n <= 7:
                assert max_euler_characteristic(g, allow_signatures=True) == max_euler_characteristic(
                    h, allow_signatures=True
                )

    def test_budget(self):
        with pytest.raises(RotationBudgetExceeded):
            max_euler_characteristic(complete_graph(7), budget=50)

    def test_bad_budget(self):
        with pytest.raises(ValueError):
            max_euler_characteristic(complete_graph(3), budget=0)

    def test_disconnected_rejected(self):
        with pytest.raises(EmbeddingError):
            max_euler_characteristic(disjoint_union(cycle_graph(3), cycle_graph(4)))


class TestRotationFormat:
    def test_round_trip(self):
        rng = random.Random(12)
        for _ in range(50):
            g = random_connected_graph(rng, rng.randrange(1, 9), 0.5)
            rot = random_rotation(g, rng, signatures=True)
            assert parse_rotation(format_rotation(rot)) == rot

    def test_comments_and_signatures(self):
        text = "# triangle\n0: 1 2\n1: 2 0  # cw\n2: 0 1\nsig 2 0 -1\nsig 0 1 1\n"
        rot = parse_rotation(text)
        assert rot.order == ((1, 2), (2, 0), (0, 1))
        assert rot.negative == frozenset({(0, 2)})
        assert rot.signature(2, 0) == -1 and rot.signature(0, 1) == 1

    @pytest.mark.parametrize(
        "text",
        ["0: 1\n0: 1\n", "0: 1\n2: 0\n", "0: x\n", "0: 1\n1: 0\nsig 0 1 2\n", "0: 1\n1: 0\nsig 0 1\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(EmbeddingError):
            parse_rotation(text)
