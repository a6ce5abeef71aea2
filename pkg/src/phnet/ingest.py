"""Coauthorship networks from publication records.

Counts publications of every author, author pair, and author triple,
then normalizes by the corpus size, yielding a 2-order proximity
network.  A joint paper counts toward every contained sub-tuple, which
is what makes the result order decreasing by construction.  Papers with
more than three authors contribute to all contained singles, pairs, and
triples but to nothing of higher order.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .network import HighOrderNetwork, Mode, apply_epsilon, normalize_counts

_MAX_TUPLE = 3  # singles, pairs, triples


@dataclass(frozen=True)
class PublicationRecord:
    paper_id: str
    authors: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "authors", frozenset(str(a) for a in self.authors))
        if not self.authors:
            raise ValueError(f"record {self.paper_id!r} has no authors")


def read_records_csv(path) -> list[PublicationRecord]:
    """Read records from CSV with columns paper_id,authors (';'-separated)."""
    records = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"paper_id", "authors"}.issubset(reader.fieldnames):
            raise ValueError("CSV needs columns paper_id,authors")
        for row in reader:
            authors = [a.strip() for a in row["authors"].split(";") if a.strip()]
            records.append(PublicationRecord(paper_id=row["paper_id"], authors=frozenset(authors)))
    return records


def read_records_jsonl(path) -> list[PublicationRecord]:
    """Read records from JSON lines: {"paper_id": ..., "authors": [...]}."""
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            records.append(PublicationRecord(paper_id=str(data["paper_id"]), authors=frozenset(data["authors"])))
    return records


def build_coauthorship(
    records: Sequence[PublicationRecord],
    epsilon: float = 0.0,
) -> HighOrderNetwork:
    """2-order proximity network of normalized coauthorship counts.

    Tuple value = (papers containing all members) / (total papers);
    zero-count tuples stay implicit.  With epsilon > 0, tuples whose
    value ties a sub-tuple are nudged below it so the order property
    holds strictly; off by default.
    """
    if not records:
        raise ValueError("need at least one publication record")
    seen_ids = Counter(r.paper_id for r in records)
    dupes = [pid for pid, c in seen_ids.items() if c > 1]
    if dupes:
        raise ValueError(f"duplicate paper ids: {dupes[:3]}")

    counts: Counter[tuple[str, ...]] = Counter()
    authors: set[str] = set()
    for record in records:
        team = sorted(record.authors)
        authors.update(team)
        for size in range(1, min(_MAX_TUPLE, len(team)) + 1):
            for combo in combinations(team, size):
                counts[combo] += 1

    raw = HighOrderNetwork(
        order=2,
        nodes=tuple(sorted(authors)),
        weights=dict(counts),
        mode=Mode.PROXIMITY,
    )
    net = normalize_counts(raw, total=len(records))
    if epsilon > 0:
        net = apply_epsilon(net, epsilon)
    return net
