"""Filtrations of simplicial complexes induced by dissimilarity networks.

A tuple with value w enters the complex at time w, so sweeping the
threshold from 0 to 1 yields a nested family of complexes.  The order
property of a valid dissimilarity network guarantees that every face is
born no later than its cofaces, which makes the sweep a filtration.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .network import HighOrderNetwork, Mode, validate


@dataclass(frozen=True)
class Simplex:
    """Simplex given by strictly increasing node indices."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        if not verts:
            raise ValueError("simplex needs at least one vertex")
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise ValueError(f"vertices must be strictly increasing, got {verts}")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


def boundary(s: Simplex) -> list[tuple[Simplex, int]]:
    """Faces of codimension one with alternating signs.

    The l-th face drops the l-th vertex and carries sign (-1)^l.  Signs
    are informational; persistence is computed over Z/2.  A vertex has
    an empty boundary.
    """
    if s.dim == 0:
        return []
    faces = []
    for drop in range(len(s.vertices)):
        face = Simplex(s.vertices[:drop] + s.vertices[drop + 1:])
        faces.append((face, -1 if drop % 2 else 1))
    return faces


@dataclass(frozen=True)
class Filtration:
    """Simplices paired with birth values, faces before cofaces.

    Entries are sorted by (birth, dimension, vertices); ties in birth are
    broken by dimension so faces always precede cofaces, then by vertex
    order for determinism.
    """

    simplices: tuple[tuple[Simplex, float], ...]
    node_count: int
    node_labels: tuple[str, ...]

    def max_dim(self) -> int:
        return max((s.dim for s, _ in self.simplices), default=-1)


def build_filtration(net: HighOrderNetwork, max_dim: int | None = None) -> Filtration:
    """Filtration of a dissimilarity network up to simplex dimension max_dim.

    Every explicitly listed tuple of size at most max_dim+1 contributes
    one simplex born at its value.  Tuples carrying the implicit default
    weight 1 are omitted, as are explicit entries equal to 1; both only
    add simplices at the final time, where they cannot change a
    finalized diagram.  max_dim is capped at the network order and
    defaults to it.

    Raises on proximity input (dualize first) and on networks that fail
    weak validation, which would break the face ordering.
    """
    if net.mode is not Mode.DISSIMILARITY:
        raise ValueError("filtrations are built from dissimilarity networks; take the dual first")
    problems = validate(net, strict=False)
    if problems:
        raise ValueError(f"network fails validation: {problems[0]}")
    if max_dim is None:
        max_dim = net.order
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    cap = min(max_dim, net.order)

    labels = tuple(sorted(net.nodes))
    index = {label: i for i, label in enumerate(labels)}
    entries = []
    for key, value in net.listed():
        if len(key) > cap + 1 or value >= 1.0:
            continue
        entries.append((Simplex(tuple(sorted(index[n] for n in key))), value))
    entries.sort(key=lambda e: (e[1], e[0].dim, e[0].vertices))
    return Filtration(simplices=tuple(entries), node_count=len(labels), node_labels=labels)


def filtration_to_csv(f: Filtration, path) -> None:
    """Dump rows dim,birth,v1;v2;... using node labels, for cross-checking."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dim", "birth", "vertices"])
        for simplex, birth in f.simplices:
            verts = ";".join(f.node_labels[v] for v in simplex.vertices)
            writer.writerow([simplex.dim, repr(birth), verts])
