"""Shared fixtures: the worked example networks and random generators."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from phnet import Correspondence, HighOrderNetwork, Mode, PublicationRecord, load_network

DATA = Path(__file__).parent / "data"

EPS = 1e-3


@pytest.fixture
def timeline_net() -> HighOrderNetwork:
    """First-joint-paper times of a four-author community, strictly valid."""
    return HighOrderNetwork(
        order=2,
        nodes=("A", "B", "C", "D"),
        weights={
            ("A",): 0.0,
            ("B",): 1 / 9,
            ("C",): 5 / 9,
            ("D",): 3 / 9,
            ("A", "B"): 2 / 9,
            ("A", "C"): 5 / 9 + EPS,
            ("B", "C"): 7 / 9,
            ("A", "D"): 4 / 9,
            ("B", "D"): 4 / 9,
            ("A", "B", "D"): 4 / 9 + EPS,
            ("A", "B", "C"): 8 / 9,
        },
        mode=Mode.DISSIMILARITY,
    )


@pytest.fixture
def loop_net() -> HighOrderNetwork:
    """Four-node loop with a chord and one filled triangle."""
    return HighOrderNetwork(
        order=2,
        nodes=("a", "b", "c", "d"),
        weights={
            ("a",): 0.0,
            ("b",): 0.0,
            ("c",): 0.0,
            ("d",): 0.0,
            ("a", "b"): 0.1,
            ("b", "c"): 0.2,
            ("c", "d"): 0.3,
            ("a", "d"): 0.5,
            ("b", "d"): 0.7,
            ("a", "b", "d"): 0.8,
        },
        mode=Mode.DISSIMILARITY,
    )


@pytest.fixture
def tight_pair() -> tuple[HighOrderNetwork, HighOrderNetwork]:
    """Three-node pair whose best diagram bound meets the exact distance."""
    return load_network(DATA / "tight_pair_x.json"), load_network(DATA / "tight_pair_y.json")


@pytest.fixture
def augment_trio():
    """Three-node and two-node networks plus the many-to-one correspondence."""
    net_x = HighOrderNetwork(
        order=1,
        nodes=("x1", "x2", "x3"),
        weights={
            ("x1",): 0.3,
            ("x2",): 0.1,
            ("x3",): 0.1,
            ("x1", "x2"): 0.9,
            ("x2", "x3"): 0.2,
            ("x1", "x3"): 0.8,
        },
        mode=Mode.DISSIMILARITY,
    )
    net_y = HighOrderNetwork(
        order=1,
        nodes=("y1", "y3"),
        weights={("y1",): 0.3, ("y3",): 0.1, ("y1", "y3"): 0.7},
        mode=Mode.DISSIMILARITY,
    )
    c = Correspondence(frozenset({("x1", "y1"), ("x2", "y3"), ("x3", "y3")}))
    return net_x, net_y, c


def collab_records() -> list[PublicationRecord]:
    """19 publication records of a four-author group.

    Totals: A 11, B 9, C 2, D 5; pairs AB 4, AC 2, AD 2, BC 1, BD 2;
    triples ABD 2, ABC 1.
    """
    teams = (
        [{"A", "B", "D"}] * 2
        + [{"A", "B", "C"}]
        + [{"A", "B"}]
        + [{"A", "C"}]
        + [{"A"}] * 6
        + [{"B"}] * 5
        + [{"D"}] * 3
    )
    return [PublicationRecord(paper_id=f"p{i:02d}", authors=frozenset(t)) for i, t in enumerate(teams)]


@pytest.fixture
def collab_corpus() -> list[PublicationRecord]:
    return collab_records()


# random instance builders used by the property suites


def random_dissimilarity(
    rng: np.random.Generator,
    n: int,
    order: int,
    full: bool = True,
    strict: bool = True,
) -> HighOrderNetwork:
    """Layered random dissimilarity network, strictly valid by construction.

    Node values land in [0, 0.25], each edge above the max of its nodes,
    each triangle above the max of its edges; everything stays below 1.
    With full=False a random downward-closed subset of tuples is kept.
    """
    names = tuple(chr(ord("a") + i) for i in range(n))
    lo = 0.02 if strict else 0.0
    weights: dict[tuple[str, ...], float] = {
        (name,): float(rng.uniform(0, 0.25)) for name in names
    }
    edges = []
    if order >= 1:
        for u, v in combinations(names, 2):
            if full or rng.random() < 0.8:
                base = max(weights[(u,)], weights[(v,)])
                weights[(u, v)] = base + float(rng.uniform(lo, 0.25))
                edges.append((u, v))
    if order >= 2:
        have = set(edges)
        for u, v, w in combinations(names, 3):
            if {(u, v), (u, w), (v, w)} <= have and (full or rng.random() < 0.7):
                base = max(weights[(u, v)], weights[(u, w)], weights[(v, w)])
                weights[(u, v, w)] = base + float(rng.uniform(lo, 0.2))
    return HighOrderNetwork(order=order, nodes=names, weights=weights, mode=Mode.DISSIMILARITY)


def random_covering_correspondence(
    rng: np.random.Generator,
    net_x: HighOrderNetwork,
    net_y: HighOrderNetwork,
    extras: int = 2,
) -> Correspondence:
    xs, ys = list(net_x.nodes), list(net_y.nodes)
    pairs = {(x, ys[int(rng.integers(len(ys)))]) for x in xs}
    covered = {y for _, y in pairs}
    for y in ys:
        if y not in covered:
            pairs.add((xs[int(rng.integers(len(xs)))], y))
    for _ in range(int(rng.integers(0, extras + 1))):
        pairs.add((xs[int(rng.integers(len(xs)))], ys[int(rng.integers(len(ys)))]))
    return Correspondence(frozenset(pairs))


def random_diagram(rng: np.random.Generator, dim: int, max_points: int):
    from phnet import PersistenceDiagram

    count = int(rng.integers(0, max_points + 1))
    points = []
    for _ in range(count):
        b = float(rng.uniform(0, 0.9))
        d = b + float(rng.uniform(0.001, 1.0 - b))
        points.append((b, min(d, 1.0)))
    return PersistenceDiagram(dim=dim, points=tuple(points))
