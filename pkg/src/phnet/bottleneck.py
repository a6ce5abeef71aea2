"""Bottleneck distance between persistence diagrams.

The distance is the smallest achievable worst matching cost over
bijections between the two point sets, each padded with artificial
diagonal features.  Matching a point to the diagonal costs half its
persistence regardless of where the diagonal feature is placed, so
diagonal slots are interchangeable.  The solver binary-searches the
finite set of candidate costs and decides feasibility of a threshold
with bipartite matchings.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .persistence import PersistenceDiagram


def matching_cost(q: tuple[float, float], qt: tuple[float, float]) -> float:
    """Cost of matching two diagram points.

    The cheaper of matching them directly (infinity norm of the
    difference) and sending both to optimally placed diagonal features
    (half the larger persistence).
    """
    qb, qd = q
    tb, td = qt
    direct = max(abs(qb - tb), abs(qd - td))
    via_diagonal = 0.5 * max(qd - qb, td - tb)
    return min(direct, via_diagonal)


def _check_pair(dx: PersistenceDiagram, dy: PersistenceDiagram) -> None:
    if dx.dim != dy.dim:
        raise ValueError(f"diagram dimensions differ: {dx.dim} vs {dy.dim}")
    for d in (dx, dy):
        if any(death > 1.0 for _, death in d.points):
            raise ValueError("diagrams must be finalized (death <= 1)")


def _cost_arrays(dx: PersistenceDiagram, dy: PersistenceDiagram):
    px = np.asarray(dx.points, dtype=float).reshape(-1, 2)
    py = np.asarray(dy.points, dtype=float).reshape(-1, 2)
    hx = (px[:, 1] - px[:, 0]) / 2.0
    hy = (py[:, 1] - py[:, 0]) / 2.0
    direct = np.maximum(
        np.abs(px[:, 0, None] - py[None, :, 0]),
        np.abs(px[:, 1, None] - py[None, :, 1]),
    )
    cost = np.minimum(direct, np.maximum(hx[:, None], hy[None, :]))
    return cost, hx, hy


def _one_side_coverable(adjacency: np.ndarray) -> bool:
    """True when every row of the boolean matrix can be matched injectively."""
    rows, cols = adjacency.shape
    if rows == 0:
        return True
    if not adjacency.any(axis=1).all():
        return False
    if rows > cols:
        return False
    graph = csr_matrix(adjacency)
    match = maximum_bipartite_matching(graph, perm_type="column")
    return int((match >= 0).sum()) == rows


def _feasible(cost: np.ndarray, hx: np.ndarray, hy: np.ndarray, t: float) -> bool:
    # Points with persistence/2 <= t may retire to the diagonal; the rest
    # must be matched to a real point within cost t.  A matching covering
    # the forced rows and one covering the forced columns can always be
    # merged into one covering both (Mendelsohn-Dulmage), so the two
    # sides are tested independently.
    ok = cost <= t
    forced_x = hx > t
    forced_y = hy > t
    return _one_side_coverable(ok[forced_x, :]) and _one_side_coverable(ok[:, forced_y].T)


def bottleneck_distance(dx: PersistenceDiagram, dy: PersistenceDiagram) -> float:
    """Exact bottleneck distance via threshold search.

    The optimum is one of the pairwise matching costs or one of the
    half-persistences, so a binary search over that candidate set with a
    matching-based feasibility test finds it exactly.
    """
    _check_pair(dx, dy)
    if not dx.points and not dy.points:
        return 0.0
    cost, hx, hy = _cost_arrays(dx, dy)

    # matching everything to the diagonal is always a valid bijection
    upper = max(hx.max(initial=0.0), hy.max(initial=0.0))
    # every real point pays at least the cheapest of its row and its own slot
    lower = 0.0
    if cost.size:
        lower = max(
            np.minimum(cost.min(axis=1), hx).max(initial=0.0),
            np.minimum(cost.min(axis=0), hy).max(initial=0.0),
        )
    # counting bound: the size surplus of the larger side must retire to
    # the diagonal, so the optimum pays at least the k-th smallest
    # half-persistence there
    surplus = abs(len(hx) - len(hy))
    if surplus:
        larger = hy if len(hy) > len(hx) else hx
        lower = max(lower, float(np.partition(larger, surplus - 1)[surplus - 1]))
    # the combined bound is frequently already achievable
    if _feasible(cost, hx, hy, lower):
        return float(lower)

    candidates = np.concatenate([cost.ravel(), hx, hy])
    candidates = np.unique(candidates[(candidates > lower) & (candidates <= upper)])
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(cost, hx, hy, float(candidates[mid])):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


def _pair_job(task):
    i, j, dx, dy = task
    return i, j, bottleneck_distance(dx, dy)


def bottleneck_matrix(diagrams: list[PersistenceDiagram], workers: int = 1) -> np.ndarray:
    """Symmetric matrix of pairwise bottleneck distances.

    With workers > 1 the pairs are distributed over processes; results
    are identical to the serial run.
    """
    n = len(diagrams)
    values = np.zeros((n, n))
    tasks = [(i, j, diagrams[i], diagrams[j]) for i in range(n) for j in range(i + 1, n)]
    if workers > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pair_job, tasks, chunksize=32))
    else:
        results = [_pair_job(t) for t in tasks]
    for i, j, v in results:
        values[i, j] = values[j, i] = v
    return values


_BRUTEFORCE_CAP = 7


def bottleneck_bruteforce(dx: PersistenceDiagram, dy: PersistenceDiagram) -> float:
    """Exhaustive minimum over all padded bijections; test oracle.

    Enumerates every injective partial assignment of one diagram's
    points to the other's, sending the rest to the diagonal.  Caps at 7
    points per diagram.
    """
    _check_pair(dx, dy)
    if len(dx.points) > _BRUTEFORCE_CAP or len(dy.points) > _BRUTEFORCE_CAP:
        raise ValueError(f"brute force capped at {_BRUTEFORCE_CAP} points per diagram")
    xs = list(dx.points)
    ys = list(dy.points)
    half_y = [(d - b) / 2.0 for b, d in ys]

    best = float("inf")

    def assign(i: int, used: set[int], acc: float) -> None:
        nonlocal best
        if acc >= best:
            return
        if i == len(xs):
            rest = max((half_y[j] for j in range(len(ys)) if j not in used), default=0.0)
            best = min(best, max(acc, rest))
            return
        b, d = xs[i]
        assign(i + 1, used, max(acc, (d - b) / 2.0))
        for j in range(len(ys)):
            if j in used:
                continue
            direct = max(abs(b - ys[j][0]), abs(d - ys[j][1]))
            assign(i + 1, used | {j}, max(acc, direct))

    assign(0, set(), 0.0)
    return best
