import pytest

from conftest import EPS
from phnet import (
    Mode,
    PublicationRecord,
    build_coauthorship,
    read_records_csv,
    read_records_jsonl,
    validate,
)


class TestRecords:
    def test_empty_author_set_rejected(self):
        with pytest.raises(ValueError, match="no authors"):
            PublicationRecord(paper_id="p", authors=frozenset())

    def test_duplicate_authors_collapse(self):
        rec = PublicationRecord(paper_id="p", authors=frozenset(["A", "A", "B"]))
        assert rec.authors == frozenset({"A", "B"})


class TestBuildCoauthorship:
    def test_collab_corpus_counts(self, collab_corpus):
        net = build_coauthorship(collab_corpus)
        assert net.mode is Mode.PROXIMITY and net.order == 2
        assert net.value(("A",)) == pytest.approx(11 / 19)
        assert net.value(("B",)) == pytest.approx(9 / 19)
        assert net.value(("C",)) == pytest.approx(2 / 19)
        assert net.value(("D",)) == pytest.approx(5 / 19)
        assert net.value(("A", "B")) == pytest.approx(4 / 19)
        assert net.value(("A", "C")) == pytest.approx(2 / 19)
        assert net.value(("A", "D")) == pytest.approx(2 / 19)
        assert net.value(("B", "C")) == pytest.approx(1 / 19)
        assert net.value(("B", "D")) == pytest.approx(2 / 19)
        assert net.value(("A", "B", "D")) == pytest.approx(2 / 19)
        assert net.value(("A", "B", "C")) == pytest.approx(1 / 19)

    def test_collab_corpus_with_epsilon(self, collab_corpus):
        net = build_coauthorship(collab_corpus, epsilon=EPS)
        assert net.value(("A", "C")) == pytest.approx(2 / 19 - EPS)
        assert net.value(("A", "B", "D")) == pytest.approx(2 / 19 - EPS)
        assert net.value(("A", "B", "C")) == pytest.approx(1 / 19 - EPS)
        assert net.value(("A", "B")) == pytest.approx(4 / 19)  # untouched
        assert validate(net, strict=True) == []

    def test_single_author_single_paper(self):
        net = build_coauthorship([PublicationRecord("p1", frozenset({"A"}))])
        assert net.value(("A",)) == 1.0
        assert all(len(k) == 1 for k in net.weights)

    def test_two_paper_counts(self):
        records = [
            PublicationRecord("p1", frozenset({"a", "b"})),
            PublicationRecord("p2", frozenset({"a"})),
        ]
        net = build_coauthorship(records)
        assert net.value(("a",)) == 1.0
        assert net.value(("b",)) == 0.5
        assert net.value(("a", "b")) == 0.5

    def test_large_team_caps_at_triples(self):
        net = build_coauthorship([PublicationRecord("p1", frozenset("wxyz"))])
        assert net.value(("x",)) == 1.0
        assert net.value(("x", "y")) == 1.0
        assert net.value(("x", "y", "z")) == 1.0
        assert max(len(k) for k in net.weights) == 3

    def test_duplicate_paper_id_rejected(self):
        records = [
            PublicationRecord("p1", frozenset({"a"})),
            PublicationRecord("p1", frozenset({"b"})),
        ]
        with pytest.raises(ValueError, match="duplicate"):
            build_coauthorship(records)

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            build_coauthorship([])

    def test_always_weakly_valid(self):
        import numpy as np

        rng = np.random.default_rng(23)
        authors = list("abcdefg")
        for trial in range(20):
            records = []
            for i in range(int(rng.integers(1, 25))):
                team = rng.choice(authors, size=int(rng.integers(1, 5)), replace=False)
                records.append(PublicationRecord(f"t{trial}p{i}", frozenset(team)))
            net = build_coauthorship(records)
            assert validate(net) == []


class TestReaders:
    def test_csv(self, tmp_path):
        path = tmp_path / "records.csv"
        path.write_text("paper_id,authors\np1,A;B\np2,A\n")
        records = read_records_csv(path)
        assert records == [
            PublicationRecord("p1", frozenset({"A", "B"})),
            PublicationRecord("p2", frozenset({"A"})),
        ]

    def test_csv_missing_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("id,people\n1,A\n")
        with pytest.raises(ValueError, match="columns"):
            read_records_csv(path)

    def test_jsonl(self, tmp_path):
        path = tmp_path / "records.jsonl"
        path.write_text('{"paper_id": "p1", "authors": ["A", "B"]}\n\n{"paper_id": "p2", "authors": ["A"]}\n')
        records = read_records_jsonl(path)
        assert len(records) == 2
        assert records[0].authors == frozenset({"A", "B"})

    def test_csv_feeds_builder(self, tmp_path, collab_corpus):
        path = tmp_path / "corpus.csv"
        lines = ["paper_id,authors"]
        lines += [f"{r.paper_id},{';'.join(sorted(r.authors))}" for r in collab_corpus]
        path.write_text("\n".join(lines) + "\n")
        net = build_coauthorship(read_records_csv(path))
        assert net.value(("A",)) == pytest.approx(11 / 19)
