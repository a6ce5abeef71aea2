"""Exact network distances by correspondence enumeration, plus bounds.

The exact distances minimize, over all covering correspondences between
the node sets, the worst discrepancy between corresponding tuple values.
Enumeration over the 2^(|X||Y|) pair subsets is only viable at test
scale and is capped accordingly; the point of the diagram-based lower
bounds is precisely that these exact quantities do not scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import inf, isinf

import numpy as np

from .bottleneck import bottleneck_distance
from .network import Correspondence, HighOrderNetwork, Mode, dual
from .persistence import network_diagrams

_ENUMERATION_CAP = 20


def pnorm(values, p: float) -> float:
    vec = [abs(v) for v in values]
    if isinf(p):
        return max(vec, default=0.0)
    if p <= 0:
        raise ValueError("p must be positive or inf")
    return float(sum(v**p for v in vec) ** (1.0 / p))


def correspondences(net_x: HighOrderNetwork, net_y: HighOrderNetwork):
    """Yield every covering correspondence as a tuple of (x, y) pairs."""
    all_pairs = [(x, y) for x in sorted(net_x.nodes) for y in sorted(net_y.nodes)]
    count = len(all_pairs)
    if count > _ENUMERATION_CAP:
        raise ValueError(f"|X|*|Y| = {count} exceeds the enumeration cap {_ENUMERATION_CAP}")
    n_x, n_y = len(net_x.nodes), len(net_y.nodes)
    for mask in range(1, 1 << count):
        chosen = [all_pairs[i] for i in range(count) if mask >> i & 1]
        if len({x for x, _ in chosen}) == n_x and len({y for _, y in chosen}) == n_y:
            yield tuple(chosen)


def _pair_difference(net_x, net_y, pairs, k) -> float:
    worst = 0.0
    for combo in combinations_with_replacement(pairs, k + 1):
        vx = net_x.value(p[0] for p in combo)
        vy = net_y.value(p[1] for p in combo)
        worst = max(worst, abs(vx - vy))
    return worst


def correspondence_difference(
    net_x: HighOrderNetwork,
    net_y: HighOrderNetwork,
    c: Correspondence,
    k: int,
) -> float:
    """Worst k-order value discrepancy over tuples of correspondent pairs.

    Tuples are drawn from the pairs with repetition; repeated nodes
    collapse through the canonical key, so a pair tuple may compare a
    lower-order value on one side with a k-order value on the other.
    """
    if not 0 <= k <= min(net_x.order, net_y.order):
        raise ValueError(f"k={k} outside 0..{min(net_x.order, net_y.order)}")
    c.check_covering(net_x, net_y)
    return _pair_difference(net_x, net_y, c.sorted_pairs(), k)


def exact_k_order_distance(
    net_x: HighOrderNetwork,
    net_y: HighOrderNetwork,
    k: int,
) -> tuple[float, Correspondence]:
    """Minimum k-order difference over all correspondences, with a witness."""
    if not 0 <= k <= min(net_x.order, net_y.order):
        raise ValueError(f"k={k} outside 0..{min(net_x.order, net_y.order)}")
    best = inf
    witness = None
    for pairs in correspondences(net_x, net_y):
        value = _pair_difference(net_x, net_y, pairs, k)
        if value < best:
            best = value
            witness = pairs
    return best, Correspondence(frozenset(witness))


def exact_pnorm_distance(net_x: HighOrderNetwork, net_y: HighOrderNetwork, p: float) -> float:
    """Minimum over correspondences of the p-norm of per-order differences.

    A single correspondence serves every order, which is why this is at
    least the p-norm of the individually minimized per-order distances.
    """
    if net_x.order != net_y.order:
        raise ValueError("p-norm distance needs networks of equal order")
    best = inf
    for pairs in correspondences(net_x, net_y):
        gamma = [_pair_difference(net_x, net_y, pairs, k) for k in range(net_x.order + 1)]
        best = min(best, pnorm(gamma, p))
    return best


def zero_order_distance(net_x: HighOrderNetwork, net_y: HighOrderNetwork) -> float:
    """Exact 0-order distance, closed form.

    Only single-node values matter, so the optimal correspondence pairs
    each value with the nearest value on the other side; the result is
    the two-sided best-match gap between the sorted value lists.  Scales
    to large networks.
    """
    vx = np.sort([net_x.value((n,)) for n in net_x.nodes])
    vy = np.sort([net_y.value((n,)) for n in net_y.nodes])

    def one_side(a: np.ndarray, b: np.ndarray) -> float:
        pos = np.searchsorted(b, a)
        left = np.where(pos > 0, np.abs(a - b[np.maximum(pos - 1, 0)]), inf)
        right = np.where(pos < len(b), np.abs(a - b[np.minimum(pos, len(b) - 1)]), inf)
        return float(np.minimum(left, right).max())

    return max(one_side(vx, vy), one_side(vy, vx))


def _greedy_correspondence(net_x: HighOrderNetwork, net_y: HighOrderNetwork) -> Correspondence:
    xs = sorted(net_x.nodes, key=lambda n: (net_x.value((n,)), n))
    ys = sorted(net_y.nodes, key=lambda n: (net_y.value((n,)), n))
    short, long_, swap = (xs, ys, False) if len(xs) <= len(ys) else (ys, xs, True)
    pairs = list(zip(short, long_))
    short_vals = [(net_y if swap else net_x).value((n,)) for n in short]
    net_long = net_x if swap else net_y
    for extra in long_[len(short):]:
        v = net_long.value((extra,))
        nearest = min(range(len(short)), key=lambda i: (abs(short_vals[i] - v), i))
        pairs.append((short[nearest], extra))
    if swap:
        pairs = [(x, y) for y, x in pairs]
    return Correspondence(frozenset(pairs))


def upper_bound_distance(net_x: HighOrderNetwork, net_y: HighOrderNetwork, p: float) -> float:
    """Distance under one heuristic correspondence; an upper bound.

    Nodes are aligned rank by rank on sorted single-node values and
    leftover nodes of the larger side attach to the nearest-valued
    partner.  Any fixed correspondence evaluates to at least the exact
    minimum, so this brackets the truth from above while the diagram
    bounds bracket it from below.
    """
    if net_x.order != net_y.order:
        raise ValueError("upper bound needs networks of equal order")
    c = _greedy_correspondence(net_x, net_y)
    gamma = [
        _pair_difference(net_x, net_y, c.sorted_pairs(), k)
        for k in range(net_x.order + 1)
    ]
    return pnorm(gamma, p)


@dataclass(frozen=True)
class BoundVector:
    """Per-order lower bounds combined into one p-norm lower bound.

    entries[0] is the exact 0-order distance; entries[l] for l >= 1 is
    the bottleneck distance between the persistence diagrams of
    dimension dims[l-1], a valid lower bound on the l-order distance
    whenever dims[l-1] < l.
    """

    entries: tuple[float, ...]
    dims: tuple[int, ...]
    p: float
    value: float


def pnorm_lower_bound(
    net_x: HighOrderNetwork,
    net_y: HighOrderNetwork,
    p: float = inf,
    dims: tuple[int, ...] | None = None,
) -> BoundVector:
    """Lower bound on the p-norm network distance from persistence diagrams.

    Proximity inputs are compared through their duals, which leaves all
    distances unchanged.  dims[l-1] picks the diagram dimension used to
    bound the l-order distance; the default l-1 is not always the
    tightest choice, hence the parameter.
    """
    if net_x.mode is not net_y.mode:
        raise ValueError("networks must share a mode")
    if net_x.order != net_y.order:
        raise ValueError("bound vector needs networks of equal order")
    order = net_x.order
    if dims is None:
        dims = tuple(l - 1 for l in range(1, order + 1))
    dims = tuple(int(d) for d in dims)
    if len(dims) != order:
        raise ValueError(f"need {order} diagram dimensions, got {len(dims)}")
    for l, k_l in enumerate(dims, start=1):
        if not 0 <= k_l < l:
            raise ValueError(f"diagram dimension {k_l} invalid for order {l}; need k < {l}")

    dx = net_x if net_x.mode is Mode.DISSIMILARITY else dual(net_x)
    dy = net_y if net_y.mode is Mode.DISSIMILARITY else dual(net_y)
    entries = [zero_order_distance(dx, dy)]
    if dims:
        top = max(dims)
        diag_x = network_diagrams(dx, max_hom_dim=top)
        diag_y = network_diagrams(dy, max_hom_dim=top)
        entries.extend(bottleneck_distance(diag_x[k_l], diag_y[k_l]) for k_l in dims)
    return BoundVector(entries=tuple(entries), dims=dims, p=p, value=pnorm(entries, p))
