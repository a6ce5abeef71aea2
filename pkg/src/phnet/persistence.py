"""Persistence diagrams of a filtration via boundary reduction over Z/2.

Columns are reduced left to right within each dimension, highest
dimension first, with clearing: once a row becomes a pivot its own
column is known to reduce to zero and is skipped.  Features still alive
at the end of the sweep die at 1, the implicit value of every unlisted
tuple, and pairs born and dying at the same value are dropped.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .filtration import Filtration, build_filtration
from .network import HighOrderNetwork, Mode, dual


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of (birth, death) points of one homology dimension.

    Points are finalized: every death lies in (birth, 1].  Stored sorted
    for deterministic comparison; duplicates are meaningful.
    """

    dim: int
    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        pts = tuple(sorted((float(b), float(d)) for b, d in self.points))
        for b, d in pts:
            if not d > b:
                raise ValueError(f"death must exceed birth, got ({b}, {d})")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def isclose(self, other: "PersistenceDiagram", tol: float = 1e-9) -> bool:
        if self.dim != other.dim or len(self) != len(other):
            return False
        return all(
            abs(pb - qb) <= tol and abs(pd - qd) <= tol
            for (pb, pd), (qb, qd) in zip(self.points, other.points)
        )


def compute_persistence(f: Filtration, max_hom_dim: int) -> list[PersistenceDiagram]:
    """Diagrams of dimensions 0..max_hom_dim for a filtration.

    max_hom_dim may not exceed the top simplex dimension present.  Note
    that features of the top dimension can only die at 1; this is exact
    whenever the filtration was built up to the network order, because
    higher tuples are implicitly worth 1 anyway.
    """
    top = f.max_dim()
    if max_hom_dim < 0:
        raise ValueError("max_hom_dim must be >= 0")
    if max_hom_dim > top:
        raise ValueError(f"max_hom_dim {max_hom_dim} exceeds top simplex dimension {top}")

    sims = f.simplices
    births = [b for _, b in sims]
    dims = [s.dim for s, _ in sims]
    position = {s.vertices: i for i, (s, _) in enumerate(sims)}

    by_dim: dict[int, list[int]] = {}
    for i, d in enumerate(dims):
        by_dim.setdefault(d, []).append(i)

    reduced: dict[int, set[int]] = {}
    pivot_owner: dict[int, int] = {}
    cleared: set[int] = set()

    for d in range(top, 0, -1):
        for j in by_dim.get(d, ()):
            if j in cleared:
                continue
            verts = sims[j][0].vertices
            col = {position[verts[:k] + verts[k + 1:]] for k in range(len(verts))}
            while col:
                low = max(col)
                owner = pivot_owner.get(low)
                if owner is None:
                    break
                col ^= reduced[owner]
            if col:
                low = max(col)
                pivot_owner[low] = j
                reduced[j] = col
                cleared.add(low)

    # a simplex creates a feature iff its column reduces to zero, i.e. it
    # never ended up stored in `reduced`
    points: dict[int, list[tuple[float, float]]] = {k: [] for k in range(max_hom_dim + 1)}
    for low, owner in pivot_owner.items():
        birth, death = births[low], births[owner]
        k = dims[low]
        if death > birth and k <= max_hom_dim:
            points[k].append((birth, death))
    for i in range(len(sims)):
        if i in reduced or i in pivot_owner:
            continue
        k = dims[i]
        if k <= max_hom_dim and births[i] < 1.0:
            points[k].append((births[i], 1.0))

    return [PersistenceDiagram(dim=k, points=tuple(points[k])) for k in range(max_hom_dim + 1)]


def prune(d: PersistenceDiagram, min_persistence: float) -> PersistenceDiagram:
    """Drop points with persistence at most min_persistence."""
    if min_persistence < 0:
        raise ValueError("min_persistence must be >= 0")
    return PersistenceDiagram(
        dim=d.dim,
        points=tuple(p for p in d.points if p[1] - p[0] > min_persistence),
    )


def network_diagrams(
    net: HighOrderNetwork,
    max_hom_dim: int | None = None,
    min_persistence: float = 0.0,
) -> list[PersistenceDiagram]:
    """Diagrams of the filtration a network induces, dualizing proximity input.

    Computes homology dimensions 0..max_hom_dim (default: network order),
    building the filtration one simplex dimension higher where the order
    allows so that deaths are exact.
    """
    if net.mode is Mode.PROXIMITY:
        net = dual(net)
    if max_hom_dim is None:
        max_hom_dim = net.order
    hom = min(max_hom_dim, net.order)
    filtration = build_filtration(net, max_dim=min(hom + 1, net.order))
    # dimensions without any simplex have empty homology
    available = min(hom, filtration.max_dim())
    if available < 0:
        diagrams = []
    else:
        diagrams = compute_persistence(filtration, available)
    diagrams += [
        PersistenceDiagram(dim=k, points=()) for k in range(len(diagrams), max_hom_dim + 1)
    ]
    if min_persistence > 0:
        diagrams = [prune(d, min_persistence) for d in diagrams]
    return diagrams


def diagrams_to_csv(diagrams: list[PersistenceDiagram], path) -> None:
    """Rows dim,birth,death with finalized deaths, never infinity."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dim", "birth", "death"])
        for diagram in diagrams:
            for b, d in diagram.points:
                writer.writerow([diagram.dim, repr(b), repr(d)])


def diagrams_from_csv(path) -> list[PersistenceDiagram]:
    rows: dict[int, list[tuple[float, float]]] = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            rows.setdefault(int(row["dim"]), []).append((float(row["birth"]), float(row["death"])))
    return [PersistenceDiagram(dim=k, points=tuple(pts)) for k, pts in sorted(rows.items())]
