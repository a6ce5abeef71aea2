"""Classical MDS embedding of a distance matrix and linear separability.

The embedding double-centers the squared distances and keeps the two
leading nonnegative eigenpairs.  The separability score is the exact
minimum number of misclassified points over every halfplane split of
the 2D embedding, used as a clustering quality measure rather than a
trained classifier.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(str(l) for l in self.labels)
        values = np.asarray(self.values, dtype=float)
        n = len(labels)
        if values.shape != (n, n):
            raise ValueError(f"matrix shape {values.shape} does not fit {n} labels")
        if np.abs(values - values.T).max(initial=0.0) > _SYMMETRY_TOL:
            raise ValueError("matrix is not symmetric")
        if np.abs(np.diag(values)).max(initial=0.0) != 0.0:
            raise ValueError("diagonal must be zero")
        if values.min(initial=0.0) < 0:
            raise ValueError("distances must be nonnegative")
        object.__setattr__(self, "labels", labels)
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class Embedding2D:
    labels: tuple[str, ...]
    coords: np.ndarray  # (n, 2)
    classes: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=float)
        if coords.shape != (len(self.labels), 2):
            raise ValueError("need one (x, y) row per label")
        if self.classes is not None and len(self.classes) != len(self.labels):
            raise ValueError("class count must equal label count")
        coords = coords.copy()
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)


def mds_embed(m: DistanceMatrix, classes: tuple[str, ...] | None = None) -> Embedding2D:
    """Classical MDS into the plane.

    Eigenpairs are ordered by descending eigenvalue; dimensions without a
    positive eigenvalue are embedded as zeros.  Each used eigenvector is
    flipped so its first nonzero coordinate is positive, which makes the
    output deterministic up to the eigensolver.
    """
    n = len(m.labels)
    if n < 3:
        raise ValueError("need at least 3 points to embed")
    d2 = m.values**2
    centering = np.eye(n) - np.ones((n, n)) / n
    gram = -0.5 * centering @ d2 @ centering
    eigvals, eigvecs = np.linalg.eigh(gram)
    idx = np.argsort(eigvals)[::-1]
    eigvals, eigvecs = eigvals[idx], eigvecs[:, idx]

    coords = np.zeros((n, 2))
    for axis in range(2):
        lam = eigvals[axis]
        if lam <= 0:
            continue
        vec = eigvecs[:, axis]
        nonzero = np.nonzero(np.abs(vec) > 1e-12)[0]
        if nonzero.size and vec[nonzero[0]] < 0:
            vec = -vec
        coords[:, axis] = np.sqrt(lam) * vec
    return Embedding2D(labels=m.labels, coords=coords, classes=classes)


def _best_split_errors(proj: np.ndarray, labels01: np.ndarray) -> int:
    """Exact best threshold on one projection axis.

    Cuts are placed only between distinct projection values (and at the
    two ends), so every counted split is realized by an actual line.
    """
    order = np.argsort(proj, kind="stable")
    sorted_proj = proj[order]
    sorted_labels = labels01[order]
    n = len(proj)
    ones_prefix = np.concatenate([[0], np.cumsum(sorted_labels)])
    total_ones = ones_prefix[-1]
    cuts = np.concatenate([[0], np.nonzero(sorted_proj[1:] > sorted_proj[:-1])[0] + 1, [n]])
    # left side called class 0: errors = ones on the left + zeros on the right
    errs_a = ones_prefix[cuts] + (n - cuts - (total_ones - ones_prefix[cuts]))
    errs_b = n - errs_a
    return int(min(errs_a.min(), errs_b.min()))


def linear_boundary_errors(e: Embedding2D) -> int:
    """Minimum misclassifications over all lines in the plane, exact.

    Requires binary class labels; with a single class the answer is 0.
    The projection order of the points onto a direction only changes at
    directions perpendicular to some difference vector, so sweeping the
    angular midpoints between consecutive critical directions (plus the
    axes) visits every achievable split.
    """
    if e.classes is None:
        raise ValueError("embedding has no class labels")
    uniq = sorted(set(e.classes))
    if len(uniq) == 1:
        return 0
    if len(uniq) != 2:
        raise ValueError(f"need exactly two classes, got {uniq}")
    labels01 = np.array([uniq.index(c) for c in e.classes])
    pts = e.coords

    diffs = pts[None, :, :] - pts[:, None, :]
    flat = diffs.reshape(-1, 2)
    nonzero = flat[(flat[:, 0] != 0) | (flat[:, 1] != 0)]
    if len(nonzero) == 0:
        angles = np.array([0.0, np.pi / 2])
    else:
        # critical directions are perpendicular to difference vectors; work mod pi
        crit = np.mod(np.arctan2(nonzero[:, 1], nonzero[:, 0]) + np.pi / 2, np.pi)
        crit = np.unique(crit)
        gaps = np.diff(np.concatenate([crit, [crit[0] + np.pi]]))
        angles = np.mod(crit + gaps / 2, np.pi)

    best = len(labels01)
    for theta in angles:
        proj = pts @ np.array([np.cos(theta), np.sin(theta)])
        best = min(best, _best_split_errors(proj, labels01))
        if best == 0:
            break
    return best


def one_vs_rest_errors(e: Embedding2D) -> dict[str, int]:
    """Best-line errors of each class against the rest."""
    if e.classes is None:
        raise ValueError("embedding has no class labels")
    out = {}
    for cls in sorted(set(e.classes)):
        binary = tuple("pos" if c == cls else "rest" for c in e.classes)
        out[cls] = linear_boundary_errors(
            Embedding2D(labels=e.labels, coords=e.coords, classes=binary)
        )
    return out


def matrix_to_csv(m: DistanceMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", *m.labels])
        for label, row in zip(m.labels, m.values):
            writer.writerow([label, *[repr(float(v)) for v in row]])


def matrix_from_csv(path) -> DistanceMatrix:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    labels = tuple(rows[0][1:])
    values = np.array([[float(v) for v in row[1:]] for row in rows[1:]])
    return DistanceMatrix(labels=labels, values=values)


def embedding_to_csv(e: Embedding2D, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "class", "x", "y"])
        classes = e.classes or tuple("" for _ in e.labels)
        for label, cls, (x, y) in zip(e.labels, classes, e.coords):
            writer.writerow([label, cls, repr(float(x)), repr(float(y))])


def embedding_from_csv(path) -> Embedding2D:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    labels = tuple(r["label"] for r in rows)
    classes = tuple(r["class"] for r in rows)
    coords = np.array([[float(r["x"]), float(r["y"])] for r in rows])
    return Embedding2D(labels=labels, coords=coords, classes=classes if any(classes) else None)


_MARKERS = ("circle", "diamond", "square")
_COLORS = ("#c0392b", "#2e6da4", "#222222")


def embedding_to_svg(e: Embedding2D, path, size: int = 480) -> None:
    """Scatter plot with one marker shape per class."""
    coords = e.coords
    lo = coords.min(axis=0)
    hi = coords.max(axis=0)
    span = np.maximum(hi - lo, 1e-9)
    pad = 0.08
    classes = e.classes or tuple("" for _ in e.labels)
    class_order = sorted(set(classes))

    def to_px(p):
        unit = (p - lo) / span
        return (
            (pad + unit[0] * (1 - 2 * pad)) * size,
            (1 - pad - unit[1] * (1 - 2 * pad)) * size,
        )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    r = 4.0
    for cls, point in zip(classes, coords):
        x, y = to_px(point)
        which = class_order.index(cls) % len(_MARKERS)
        color = _COLORS[which]
        marker = _MARKERS[which]
        if marker == "circle":
            parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{color}"/>')
        elif marker == "diamond":
            parts.append(
                f'<polygon points="{x:.2f},{y - r:.2f} {x + r:.2f},{y:.2f} '
                f'{x:.2f},{y + r:.2f} {x - r:.2f},{y:.2f}" fill="{color}"/>'
            )
        else:
            parts.append(
                f'<rect x="{x - r:.2f}" y="{y - r:.2f}" width="{2 * r}" height="{2 * r}" fill="{color}"/>'
            )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
