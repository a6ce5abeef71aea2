import numpy as np
import pytest

from conftest import random_dissimilarity
from oracles import face_births_ok
from phnet import (
    HighOrderNetwork,
    Mode,
    Simplex,
    boundary,
    build_filtration,
    dual,
)
from phnet.filtration import filtration_to_csv


class TestSimplex:
    def test_dim(self):
        assert Simplex((0,)).dim == 0
        assert Simplex((0, 2, 5)).dim == 2

    def test_rejects_bad_vertex_lists(self):
        with pytest.raises(ValueError):
            Simplex(())
        with pytest.raises(ValueError):
            Simplex((2, 1))
        with pytest.raises(ValueError):
            Simplex((1, 1))


class TestBoundary:
    def test_triangle(self):
        faces = boundary(Simplex((0, 1, 2)))
        assert faces == [
            (Simplex((1, 2)), 1),
            (Simplex((0, 2)), -1),
            (Simplex((0, 1)), 1),
        ]

    def test_vertex_is_empty(self):
        assert boundary(Simplex((4,))) == []

    def test_boundary_of_boundary_vanishes_mod2(self):
        for verts in [(0, 1), (0, 1, 2), (0, 1, 2, 3), (1, 3, 5, 7, 9)]:
            counts = {}
            for face, _ in boundary(Simplex(verts)):
                for sub, _ in boundary(face):
                    counts[sub] = counts.get(sub, 0) + 1
            assert all(c % 2 == 0 for c in counts.values())


class TestBuildFiltration:
    def test_loop_net_birth_order(self, loop_net):
        f = build_filtration(loop_net)
        listing = [
            (tuple(f.node_labels[v] for v in s.vertices), b) for s, b in f.simplices
        ]
        assert listing == [
            (("a",), 0.0),
            (("b",), 0.0),
            (("c",), 0.0),
            (("d",), 0.0),
            (("a", "b"), 0.1),
            (("b", "c"), 0.2),
            (("c", "d"), 0.3),
            (("a", "d"), 0.5),
            (("b", "d"), 0.7),
            (("a", "b", "d"), 0.8),
        ]

    def test_single_node(self):
        net = HighOrderNetwork(order=0, nodes=("a",), weights={("a",): 0.0}, mode=Mode.DISSIMILARITY)
        f = build_filtration(net)
        assert len(f.simplices) == 1
        assert f.simplices[0][0].dim == 0

    def test_face_birth_invariant_random(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            net = random_dissimilarity(rng, n=n, order=min(2, n - 1) if n > 1 else 0, full=False)
            f = build_filtration(net)
            assert face_births_ok(f)

    def test_monotone_birth_order(self):
        rng = np.random.default_rng(43)
        for _ in range(50):
            net = random_dissimilarity(rng, n=5, order=2, full=False)
            f = build_filtration(net)
            births = [b for _, b in f.simplices]
            assert all(x <= y for x, y in zip(births, births[1:]))

    def test_strict_networks_have_strict_face_gaps(self):
        rng = np.random.default_rng(44)
        net = random_dissimilarity(rng, n=5, order=2, strict=True)
        f = build_filtration(net)
        births = {s.vertices: b for s, b in f.simplices}
        for s, b in f.simplices:
            if s.dim == 0:
                continue
            for k in range(len(s.vertices)):
                face = s.vertices[:k] + s.vertices[k + 1:]
                assert births[face] < b

    def test_max_dim_caps_simplices(self, loop_net):
        f = build_filtration(loop_net, max_dim=1)
        assert f.max_dim() == 1
        assert all(s.dim <= 1 for s, _ in f.simplices)

    def test_proximity_refused(self, loop_net):
        with pytest.raises(ValueError, match="dual"):
            build_filtration(dual(loop_net))

    def test_invalid_network_refused(self):
        net = HighOrderNetwork(
            order=1, nodes=("a", "b"), weights={("a",): 0.6, ("b",): 0.0, ("a", "b"): 0.1},
            mode=Mode.DISSIMILARITY,
        )
        with pytest.raises(ValueError, match="validation"):
            build_filtration(net)

    def test_weight_one_entries_omitted(self):
        net = HighOrderNetwork(
            order=1, nodes=("a", "b"), weights={("a",): 0.0, ("b",): 1.0, ("a", "b"): 1.0},
            mode=Mode.DISSIMILARITY,
        )
        f = build_filtration(net)
        assert len(f.simplices) == 1

    def test_csv_export(self, loop_net, tmp_path):
        f = build_filtration(loop_net)
        path = tmp_path / "filt.csv"
        filtration_to_csv(f, path)
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "dim,birth,vertices"
        assert "2,0.8,a;b;d" in lines
        assert len(lines) == 1 + len(f.simplices)
