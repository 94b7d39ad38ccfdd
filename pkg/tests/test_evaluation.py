"""Dataset loading, accuracy evaluation, and comparison reports."""

import json
import logging
import random

import pytest

from branchpol.aggregation import Extreme
from branchpol.conllu import Sentence, Token
from branchpol.evaluation import (
    BadPolarity,
    EmptyDataset,
    EvalReport,
    MissingColumn,
    ReviewRecord,
    compare_report,
    evaluate,
    filter_binary,
    load_dataset,
    predict_compositional,
    predict_proximity,
)
from branchpol.lexicon import load_lexicons
from helpers import FIXTURES, SAMPLES

CORPUS = FIXTURES / "corpus" / "manifest.csv"

GOOD_CONLLU = "1\tbueno\tbueno\tADJ\t_\t_\t0\troot\t_\t_\n"


@pytest.fixture(scope="module")
def lexicons():
    return load_lexicons(
        SAMPLES / "sentiment_es.tsv",
        SAMPLES / "intensifiers_es.tsv",
        SAMPLES / "negators_es.txt",
    )


def write_manifest(tmp_path, rows, header="review_id,title_conllu_path,body_conllu_path,polarity"):
    path = tmp_path / "manifest.csv"
    path.write_text("\n".join([header] + rows) + "\n", encoding="utf-8")
    return path


class TestLoadDataset:
    def test_loads_fixture_corpus(self):
        records = load_dataset(CORPUS)
        assert len(records) == 20
        by_id = {record.review_id: record for record in records}
        assert by_id["r01"].gold == 5
        assert by_id["r02"].title_sentences == ()
        assert len(by_id["r02"].body_sentences) == 2

    def test_direct_row_mapping(self, tmp_path):
        (tmp_path / "t.conllu").write_text(GOOD_CONLLU, encoding="utf-8")
        (tmp_path / "b.conllu").write_text(GOOD_CONLLU, encoding="utf-8")
        manifest = write_manifest(tmp_path, ["r1,t.conllu,b.conllu,5"])
        (record,) = load_dataset(manifest)
        assert record.review_id == "r1"
        assert record.gold == 5
        assert len(record.title_sentences) == 1

    def test_bad_polarity(self, tmp_path):
        (tmp_path / "b.conllu").write_text(GOOD_CONLLU, encoding="utf-8")
        manifest = write_manifest(tmp_path, ["r1,,b.conllu,6"])
        with pytest.raises(BadPolarity):
            load_dataset(manifest)

    def test_header_only(self, tmp_path):
        assert load_dataset(write_manifest(tmp_path, [])) == []

    def test_missing_column(self, tmp_path):
        manifest = write_manifest(tmp_path, ["r1,5"], header="review_id,polarity")
        with pytest.raises(MissingColumn):
            load_dataset(manifest)

    def test_missing_referenced_file(self, tmp_path):
        manifest = write_manifest(tmp_path, ["r1,,ghost.conllu,3"])
        with pytest.raises(FileNotFoundError):
            load_dataset(manifest)

    def test_invalid_conllu_skipped_with_warning(self, tmp_path, caplog):
        (tmp_path / "bad.conllu").write_text(
            "1\tx\tx\tX\t_\t_\t9\tdep\t_\t_\n", encoding="utf-8"
        )
        (tmp_path / "good.conllu").write_text(GOOD_CONLLU, encoding="utf-8")
        manifest = write_manifest(tmp_path, ["r1,,bad.conllu,3", "r2,,good.conllu,4"])
        with caplog.at_level(logging.WARNING, logger="branchpol.evaluation"):
            records = load_dataset(manifest)
        assert [record.review_id for record in records] == ["r2"]
        assert any("skipping review 'r1'" in message for message in caplog.messages)

    def test_comment_lines_skipped(self, tmp_path):
        (tmp_path / "b.conllu").write_text(GOOD_CONLLU, encoding="utf-8")
        path = tmp_path / "manifest.csv"
        path.write_text(
            "# generated-by = some-parser-1.0\n"
            "review_id,title_conllu_path,body_conllu_path,polarity\n"
            "r1,,b.conllu,4\n",
            encoding="utf-8",
        )
        (record,) = load_dataset(path)
        assert record.gold == 4


TINY_BODY = (Sentence((Token(1, "cosa", "cosa", "NOUN", {}, 0, "root"),)),)


class TestEvaluate:
    @staticmethod
    def records(golds):
        return [ReviewRecord(f"r{i}", (), TINY_BODY, gold) for i, gold in enumerate(golds)]

    def test_counting(self):
        records = self.records([1, 2, 3, 4, 5])
        predictions = {"r0": 1, "r1": 2, "r2": 3, "r3": 5, "r4": 4}
        report = evaluate(records, lambda r: predictions[r.review_id], "toy")
        assert report.accuracy == 0.6

    def test_identity_predictor(self):
        records = self.records([1, 2, 3, 4, 5, 5])
        report = evaluate(records, lambda r: r.gold, "oracle")
        assert report.accuracy == 1.0
        for i in range(5):
            for j in range(5):
                if i != j:
                    assert report.confusion[i][j] == 0
        assert report.confusion[4][4] == 2

    def test_empty_dataset(self):
        with pytest.raises(EmptyDataset):
            evaluate([], lambda r: 3, "toy")

    def test_row_sums_equal_support_and_accuracy_consistent(self):
        rng = random.Random(3)
        records = self.records([rng.randint(1, 5) for _ in range(37)])
        report = evaluate(records, lambda r: rng.randint(1, 5), "noisy")
        assert sum(report.per_class_support) == 37
        for gold_class in range(5):
            assert sum(report.confusion[gold_class]) == report.per_class_support[gold_class]
        trace = sum(report.confusion[i][i] for i in range(5))
        assert report.accuracy == trace / 37

    def test_record_order_invariant(self):
        records = self.records([1, 5, 3, 2, 4, 4])
        report_a = evaluate(records, lambda r: r.gold, "x")
        report_b = evaluate(list(reversed(records)), lambda r: r.gold, "x")
        assert report_a == report_b

    def test_filter_binary(self):
        records = self.records([1, 2, 3, 4, 5])
        assert [record.gold for record in filter_binary(records)] == [1, 5]


class TestPredictors:
    def test_compositional_corpus_is_perfect(self, lexicons):
        records = load_dataset(CORPUS)
        report = evaluate(
            records,
            lambda record: predict_compositional(record, lexicons, Extreme()),
            "compositional",
        )
        assert report.accuracy == 1.0

    @pytest.mark.parametrize("tau", [0.7, 0.8, 1.0])
    def test_proximity_corpus_is_imperfect(self, lexicons, tau):
        records = load_dataset(CORPUS)
        report = evaluate(
            records,
            lambda record: predict_proximity(record, lexicons, 3, tau),
            "proximity",
        )
        assert report.accuracy < 1.0


class TestCompareReport:
    @staticmethod
    def report(name, accuracy):
        confusion = tuple(tuple(0 for _ in range(5)) for _ in range(5))
        return EvalReport(name, accuracy, confusion, (0, 0, 0, 0, 0))

    def test_sorted_by_accuracy(self):
        text = compare_report([self.report("slow", 0.85), self.report("fast", 1.0)])
        lines = text.splitlines()
        assert lines[0].startswith("system")
        assert lines[2].startswith("fast")
        assert lines[3].startswith("slow")

    def test_single_row(self):
        text = compare_report([self.report("only", 0.5)])
        assert "only" in text and "0.5000" in text

    def test_ties_stable_by_name(self):
        text = compare_report([self.report("b", 0.5), self.report("a", 0.5)])
        lines = text.splitlines()
        assert lines[2].startswith("a") and lines[3].startswith("b")

    def test_contains_json_dump(self):
        text = compare_report([self.report("only", 0.5)])
        payload = json.loads(text[text.index("["):])
        assert payload[0]["system"] == "only"
        assert payload[0]["accuracy"] == 0.5
        assert payload[0]["support"] == [0, 0, 0, 0, 0]

    def test_empty_reports(self):
        with pytest.raises(EmptyDataset):
            compare_report([])
