"""Weighted high-order networks (hypergraphs with tuple relationships).

A network of order K assigns a value in [0, 1] to node tuples of size up
to K+1.  Values are symmetric and repetition-free: the value of a tuple
depends only on its set of distinct elements, so weights are stored under
a canonical key, the lexicographically sorted tuple of unique node ids.
Unlisted tuples implicitly carry the default weight (1 for dissimilarity
networks, 0 for proximity networks) and are never materialized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import isfinite
from typing import Iterable, Iterator, Mapping


class Mode(str, Enum):
    DISSIMILARITY = "dissimilarity"
    PROXIMITY = "proximity"


def canonical_key(items: Iterable[str]) -> tuple[str, ...]:
    """Sorted tuple of the distinct elements; the storage key of a tuple class."""
    return tuple(sorted(set(items)))


@dataclass(frozen=True)
class HighOrderNetwork:
    """Immutable high-order network.

    Parameters
    ----------
    order:
        Max tuple size minus one (K >= 0).
    nodes:
        Node identifiers, opaque strings, at least one.
    weights:
        Map from canonical keys (size 1..order+1) to values.  Values must
        be finite and nonnegative; the [0, 1] range is part of `validate`
        so that raw count networks can pass through `normalize_counts`.
    mode:
        Dissimilarity or proximity.
    """

    order: int
    nodes: tuple[str, ...]
    weights: Mapping[tuple[str, ...], float]
    mode: Mode

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        nodes = tuple(self.nodes)
        if not nodes:
            raise ValueError("network needs at least one node")
        if len(set(nodes)) != len(nodes):
            raise ValueError("duplicate node identifiers")
        object.__setattr__(self, "nodes", nodes)
        node_set = set(nodes)
        weights = {}
        for key, value in dict(self.weights).items():
            key = tuple(key)
            if key != canonical_key(key):
                raise ValueError(f"weight key {key!r} is not canonical (sorted, unique)")
            if not 1 <= len(key) <= self.order + 1:
                raise ValueError(f"weight key {key!r} has size outside 1..{self.order + 1}")
            if not node_set.issuperset(key):
                raise ValueError(f"weight key {key!r} uses unknown nodes")
            value = float(value)
            if not isfinite(value) or value < 0:
                raise ValueError(f"weight of {key!r} must be finite and >= 0, got {value}")
            weights[key] = value
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def default_weight(self) -> float:
        return 1.0 if self.mode is Mode.DISSIMILARITY else 0.0

    def value(self, tup: Iterable[str]) -> float:
        """Value of a tuple, read through its canonical key.

        Permutations and repetitions collapse onto the same key, so the
        tuple may repeat nodes and be longer than order+1 as long as it
        contains at most order+1 distinct elements.
        """
        key = canonical_key(tup)
        if len(key) > self.order + 1:
            raise ValueError(
                f"tuple with {len(key)} distinct nodes undefined in an order-{self.order} network"
            )
        for node in key:
            if node not in self._node_set():
                raise KeyError(f"unknown node {node!r}")
        return self.weights.get(key, self.default_weight)

    def _node_set(self) -> frozenset[str]:
        cached = getattr(self, "_nodes_frozen", None)
        if cached is None:
            cached = frozenset(self.nodes)
            object.__setattr__(self, "_nodes_frozen", cached)
        return cached

    def listed(self) -> Iterator[tuple[tuple[str, ...], float]]:
        """Explicit (key, value) entries sorted by size then lexicographically."""
        return iter(sorted(self.weights.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def isclose(self, other: "HighOrderNetwork", tol: float = 0.0) -> bool:
        if (self.order, self.mode, sorted(self.nodes)) != (other.order, other.mode, sorted(other.nodes)):
            return False
        keys = set(self.weights) | set(other.weights)
        return all(abs(self.weights.get(k, self.default_weight) - other.weights.get(k, other.default_weight)) <= tol for k in keys)


@dataclass(frozen=True)
class Correspondence:
    """Covering relation between two node sets, a set of (x, y) pairs."""

    pairs: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset((str(x), str(y)) for x, y in self.pairs))
        if not self.pairs:
            raise ValueError("correspondence has no pairs")

    def sorted_pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.pairs))

    def is_covering(self, x_nodes: Iterable[str], y_nodes: Iterable[str]) -> bool:
        xs = {x for x, _ in self.pairs}
        ys = {y for _, y in self.pairs}
        return set(x_nodes).issubset(xs) and set(y_nodes).issubset(ys) and \
            xs.issubset(set(x_nodes)) and ys.issubset(set(y_nodes))

    def check_covering(self, net_x: HighOrderNetwork, net_y: HighOrderNetwork) -> None:
        if not self.is_covering(net_x.nodes, net_y.nodes):
            raise ValueError("correspondence does not cover both node sets")


@dataclass(frozen=True)
class Violation:
    """One broken constraint found by `validate`."""

    kind: str  # "range", "order", "order-strict"
    tup: tuple[str, ...]
    face: tuple[str, ...] | None
    value: float
    bound: float

    def __str__(self) -> str:
        if self.kind == "range":
            return f"weight {self.value} of {self.tup} outside [0, 1]"
        rel = "must differ strictly from" if self.kind == "order-strict" else "conflicts with"
        return f"value {self.value} of {self.tup} {rel} value {self.bound} of face {self.face}"


def validate(net: HighOrderNetwork, strict: bool = False) -> list[Violation]:
    """Check the order property on every listed tuple against its faces.

    Dissimilarity networks must not decrease when a distinct node is
    added to a tuple; proximity networks must not increase.  With
    ``strict`` the inequality must be strict, since a canonical face
    always has one fewer distinct element.  Violations are reported,
    never raised, and include out-of-range weights.
    """
    report: list[Violation] = []
    for key, value in net.listed():
        if not 0.0 <= value <= 1.0:
            report.append(Violation("range", key, None, value, 1.0))
        if len(key) < 2:
            continue
        for drop in range(len(key)):
            face = key[:drop] + key[drop + 1:]
            face_value = net.weights.get(face, net.default_weight)
            if net.mode is Mode.DISSIMILARITY:
                ok = value > face_value if strict else value >= face_value
            else:
                ok = value < face_value if strict else value <= face_value
            if not ok:
                kind = "order-strict" if strict and value == face_value else "order"
                report.append(Violation(kind, key, face, value, face_value))
    return report


def dual(net: HighOrderNetwork) -> HighOrderNetwork:
    """Flip proximity and dissimilarity: every weight w becomes 1 - w."""
    flipped = Mode.PROXIMITY if net.mode is Mode.DISSIMILARITY else Mode.DISSIMILARITY
    return HighOrderNetwork(
        order=net.order,
        nodes=net.nodes,
        weights={key: 1.0 - value for key, value in net.weights.items()},
        mode=flipped,
    )


def truncate(net: HighOrderNetwork, k: int) -> HighOrderNetwork:
    """Restrict to relationship functions of order at most k."""
    if not 0 <= k <= net.order:
        raise ValueError(f"truncation order {k} outside 0..{net.order}")
    return HighOrderNetwork(
        order=k,
        nodes=net.nodes,
        weights={key: value for key, value in net.weights.items() if len(key) <= k + 1},
        mode=net.mode,
    )


# Enumerating every tuple of correspondence pairs is exponential in |C|;
# augmentation is a proof device exercised at test scale only.
_AUGMENT_PAIR_CAP = 16


def augment(
    net_x: HighOrderNetwork,
    net_y: HighOrderNetwork,
    c: Correspondence,
) -> tuple[HighOrderNetwork, HighOrderNetwork]:
    """Re-index both networks on the pairs of a covering correspondence.

    Each output node stands for one (x, y) pair; a tuple of pairs takes
    the value of its projection onto the respective side, read through
    the canonical key.  Any pair tuple whose projection has at most
    order+1 distinct nodes is therefore defined, regardless of the tuple
    size, so the outputs have order len(pairs) - 1.  Listing those
    collapsed tuples is what keeps the persistence diagrams of the
    outputs identical to the diagrams of the inputs.
    """
    if net_x.mode is not net_y.mode:
        raise ValueError("augment needs two networks of the same mode")
    if net_x.order != net_y.order:
        raise ValueError("augment needs two networks of the same order")
    c.check_covering(net_x, net_y)
    pairs = c.sorted_pairs()
    if len(pairs) > _AUGMENT_PAIR_CAP:
        raise ValueError(f"correspondence has {len(pairs)} pairs, cap is {_AUGMENT_PAIR_CAP}")

    names = tuple(f"{x}|{y}" for x, y in pairs)
    if len(set(names)) != len(names):  # defensive; pairs are distinct
        raise ValueError("pair labels collide")

    k_cap = net_x.order + 1
    weights_x: dict[tuple[str, ...], float] = {}
    weights_y: dict[tuple[str, ...], float] = {}
    for size in range(1, len(pairs) + 1):
        for combo in combinations(range(len(pairs)), size):
            xs = canonical_key(pairs[i][0] for i in combo)
            ys = canonical_key(pairs[i][1] for i in combo)
            key = tuple(names[i] for i in combo)
            if len(xs) <= k_cap:
                value = net_x.value(xs)
                if value != net_x.default_weight:
                    weights_x[key] = value
            if len(ys) <= k_cap:
                value = net_y.value(ys)
                if value != net_y.default_weight:
                    weights_y[key] = value

    new_order = len(pairs) - 1
    aug_x = HighOrderNetwork(order=new_order, nodes=names, weights=weights_x, mode=net_x.mode)
    aug_y = HighOrderNetwork(order=new_order, nodes=names, weights=weights_y, mode=net_y.mode)
    return aug_x, aug_y


def normalize_counts(raw: HighOrderNetwork, total: float) -> HighOrderNetwork:
    """Divide every count weight by the corpus total, landing in [0, 1]."""
    if total <= 0:
        raise ValueError("total must be positive")
    bad = [key for key, value in raw.weights.items() if value > total]
    if bad:
        raise ValueError(f"counts exceed total {total}: {bad[:3]}")
    return HighOrderNetwork(
        order=raw.order,
        nodes=raw.nodes,
        weights={key: value / total for key, value in raw.weights.items()},
        mode=raw.mode,
    )


def apply_epsilon(net: HighOrderNetwork, epsilon: float = 1e-3) -> HighOrderNetwork:
    """Perturb tuples tied with a face so the order property holds strictly.

    Processes tuple sizes from small to large against the already
    adjusted values.  For dissimilarity networks a tuple is raised to at
    least max(face values) + epsilon, for proximity networks lowered to
    at most min(face values) - epsilon, only when needed.  Raises if a
    perturbed value would leave [0, 1].  Never applied implicitly by any
    other operation.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    weights = dict(net.weights)
    for key in sorted(weights, key=lambda k: (len(k), k)):
        if len(key) < 2:
            continue
        faces = [key[:d] + key[d + 1:] for d in range(len(key))]
        face_values = [weights.get(f, net.default_weight) for f in faces]
        if net.mode is Mode.DISSIMILARITY:
            floor = max(face_values) + epsilon
            if weights[key] < floor:
                if floor > 1.0:
                    raise ValueError(f"epsilon {epsilon} pushes {key} above 1")
                weights[key] = floor
        else:
            ceil = min(face_values) - epsilon
            if weights[key] > ceil:
                if ceil < 0.0:
                    raise ValueError(f"epsilon {epsilon} pushes {key} below 0")
                weights[key] = ceil
    return HighOrderNetwork(order=net.order, nodes=net.nodes, weights=weights, mode=net.mode)


def to_json_dict(net: HighOrderNetwork) -> dict:
    return {
        "order": net.order,
        "mode": net.mode.value,
        "nodes": list(net.nodes),
        "weights": [
            {"tuple": list(key), "value": value} for key, value in net.listed()
        ],
    }


def from_json_dict(data: Mapping) -> HighOrderNetwork:
    try:
        return HighOrderNetwork(
            order=int(data["order"]),
            nodes=tuple(str(n) for n in data["nodes"]),
            weights={canonical_key(entry["tuple"]): float(entry["value"]) for entry in data["weights"]},
            mode=Mode(data["mode"]),
        )
    except KeyError as exc:
        raise ValueError(f"network JSON missing field {exc}") from exc


def save_network(net: HighOrderNetwork, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(net), fh, indent=2)
        fh.write("\n")


def load_network(path) -> HighOrderNetwork:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))
