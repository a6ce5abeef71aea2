"""Seeded generators for the three synthetic pairwise proximity models.

Every random quantity is drawn from its own stream keyed by
(seed, stream tag, node or edge indices), so values do not depend on
generation order and two runs with the same config produce byte
identical networks.  Stream tags: 0 for per-node draws, 1 for per-edge
draws.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import HighOrderNetwork, Mode, dual

MODELS = ("er", "gauss", "corr")

_NODE_STREAM = 0
_EDGE_STREAM = 1


@dataclass(frozen=True)
class GenConfig:
    """Configuration of one synthetic network draw.

    model "er": independent uniform edge weights.  model "gauss": nodes
    placed uniformly in the unit square, edge weight exp(-d^2 / 2 sigma^2)
    of the Euclidean distance.  model "corr": each node carries an iid
    standard normal feature vector of length feature_dim, edge weight is
    the Pearson correlation mapped to [0, 1] via rho/2 + 0.5.  Edges
    with weight <= tau are removed (left implicit).
    """

    model: str
    n: int
    seed: int
    sigma: float = 0.5
    feature_dim: int = 30
    tau: float = 0.2

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.seed < 2**63:
            raise ValueError("seed must fit an unsigned 63-bit integer")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.feature_dim < 1:
            raise ValueError("feature_dim must be >= 1")
        if not 0.0 <= self.tau < 1.0:
            raise ValueError("tau must lie in [0, 1)")


def _node_rng(cfg: GenConfig, i: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, _NODE_STREAM, i])


def _edge_rng(cfg: GenConfig, i: int, j: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, _EDGE_STREAM, i, j])


def _pairwise_weights(cfg: GenConfig) -> np.ndarray:
    n = cfg.n
    w = np.zeros((n, n))
    if cfg.model == "er":
        for i in range(n):
            for j in range(i + 1, n):
                w[i, j] = w[j, i] = _edge_rng(cfg, i, j).random()
    elif cfg.model == "gauss":
        pos = np.stack([_node_rng(cfg, i).random(2) for i in range(n)])
        delta = pos[:, None, :] - pos[None, :, :]
        sq = (delta**2).sum(axis=2)
        w = np.exp(-sq / (2.0 * cfg.sigma**2))
        np.fill_diagonal(w, 0.0)
    else:  # corr
        feats = np.stack([_node_rng(cfg, i).standard_normal(cfg.feature_dim) for i in range(n)])
        if n == 1:
            return w
        rho = np.corrcoef(feats)
        w = np.clip(rho / 2.0 + 0.5, 0.0, 1.0)
        np.fill_diagonal(w, 0.0)
    return w


def node_names(n: int) -> tuple[str, ...]:
    width = len(str(n - 1)) if n > 1 else 1
    return tuple(f"v{i:0{width}d}" for i in range(n))


def generate(cfg: GenConfig) -> HighOrderNetwork:
    """Draw one pairwise proximity network per the config.

    Nodes get the maximal proximity 1, so in the dual dissimilarity
    filtration they are present from time 0.  Edges at or below tau are
    removed and stay implicit at proximity 0.
    """
    names = node_names(cfg.n)
    weights: dict[tuple[str, ...], float] = {(name,): 1.0 for name in names}
    w = _pairwise_weights(cfg)
    for i in range(cfg.n):
        for j in range(i + 1, cfg.n):
            if w[i, j] > cfg.tau:
                weights[(names[i], names[j])] = float(w[i, j])
    return HighOrderNetwork(order=1, nodes=names, weights=weights, mode=Mode.PROXIMITY)


def lift_pairwise(net: HighOrderNetwork) -> HighOrderNetwork:
    """Dissimilarity form of a pairwise proximity network.

    Node births land at 0 and an edge of proximity p is born at 1 - p;
    removed edges stay implicit and only appear at time 1.
    """
    if net.order != 1:
        raise ValueError("lift_pairwise expects a pairwise (order 1) network")
    if net.mode is not Mode.PROXIMITY:
        raise ValueError("lift_pairwise expects a proximity network")
    return dual(net)
