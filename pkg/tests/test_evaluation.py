import unicodedata

import pytest

from bgmorph.dictionary import Dictionary, WordEntry
from bgmorph.errors import EmptyCorpus, EmptyDictionary, ParseError
from bgmorph.evaluation import (
    evaluate,
    evaluate_lines,
    make_synthetic_corpus,
    read_gold_corpus,
)
from bgmorph.tagset import decode_tag, encode_tag, format_tag_string, parse_tag_string


def gold_lines(dictionary, count):
    """Distinct correct gold rows drawn from the dictionary's own entries."""
    lines = []
    seen = set()
    for entry in dictionary.entries():
        if entry.surface in seen:
            continue
        seen.add(entry.surface)
        tag = format_tag_string(decode_tag(entry.tag))
        lines.append(f"{entry.surface}\t{tag}\t{entry.lemma}")
        if len(lines) == count:
            return lines
    raise AssertionError("fixture dictionary is too small for this test")


def test_nineteen_of_twenty_is_exactly_95_percent(fixture_dict):
    lines = gold_lines(fixture_dict, 20)
    surface, tag, _ = lines[7].split("\t")
    lines[7] = f"{surface}\t{tag}\tгрешка"  # one deliberately wrong gold lemma
    metrics = evaluate_lines(fixture_dict, lines)
    assert metrics.tokens == 20
    assert metrics.correct == 19
    assert metrics.accuracy == 0.95
    assert metrics.covered == 20
    assert metrics.accuracy_on_covered == 0.95
    assert metrics.oov_rate == 0.0


def test_all_correct_corpus_scores_one(fixture_dict):
    metrics = evaluate_lines(fixture_dict, gold_lines(fixture_dict, 25))
    assert metrics.accuracy == 1.0
    assert metrics.accuracy_on_covered == 1.0
    assert metrics.oov_rate == 0.0


def test_metrics_arithmetic_with_oov_rows(fixture_dict):
    lines = gold_lines(fixture_dict, 8)
    lines.append("непознатадума\tN\tнепознатадума")  # OOV, accidentally correct
    lines.append("другадума\tN\tдруга")  # OOV and wrong
    metrics = evaluate_lines(fixture_dict, lines)
    assert metrics.tokens == 10
    assert metrics.covered == 8
    assert metrics.correct == 9
    assert metrics.accuracy == 9 / 10
    assert metrics.accuracy_on_covered == 1.0
    assert metrics.oov_rate == 2 / 10


def test_lemma_match_uses_nfc_normalization():
    d = Dictionary()
    d.add_entry(WordEntry("свой", "свой", encode_tag(parse_tag_string("P")), "0"))
    d.freeze()
    decomposed = unicodedata.normalize("NFD", "свой")
    assert decomposed != "свой"
    metrics = evaluate_lines(d, [f"свой\tP\t{decomposed}"])
    assert metrics.accuracy == 1.0


def test_no_case_folding_in_lemma_match(fixture_dict):
    lines = ["градът\tNmsf\tГрад"]  # capitalized gold lemma must not match
    metrics = evaluate_lines(fixture_dict, lines)
    assert metrics.correct == 0


def test_empty_corpus_raises(fixture_dict, tmp_path):
    empty = tmp_path / "empty.tsv"
    empty.write_text("", encoding="utf-8")
    with pytest.raises(EmptyCorpus):
        evaluate(fixture_dict, empty)
    with pytest.raises(EmptyCorpus):
        evaluate_lines(fixture_dict, ["# only a comment", ""])


def test_parse_error_carries_the_line_number(fixture_dict):
    with pytest.raises(ParseError) as err:
        evaluate_lines(fixture_dict, ["градът\tNmsf\tград", "счупен ред"])
    assert err.value.line == 2


def test_gold_reader_tracks_sentence_boundaries():
    records = read_gold_corpus(
        ["Жената\tNfsd\tжена", "чете\tV3sp\tчета", "", "Книгата\tNfsd\tкнига"]
    )
    assert [r.sentence_initial for r in records] == [True, False, True]


def test_missing_corpus_file_raises_oserror(fixture_dict, tmp_path):
    with pytest.raises(OSError):
        evaluate(fixture_dict, tmp_path / "absent.tsv")


def test_synthetic_corpus_is_seed_deterministic(fixture_dict, tmp_path):
    first = make_synthetic_corpus(fixture_dict, seed=42, n=100)
    second = make_synthetic_corpus(fixture_dict, seed=42, n=100)
    assert first == second
    different = make_synthetic_corpus(fixture_dict, seed=43, n=100)
    assert first != different
    path = tmp_path / "corpus.tsv"
    make_synthetic_corpus(fixture_dict, seed=42, n=100, path=path)
    assert path.read_text(encoding="utf-8") == first


def test_synthetic_corpus_shape_and_closure(fixture_dict):
    text = make_synthetic_corpus(fixture_dict, seed=1, n=5)
    lines = text.splitlines()
    assert len(lines) == 5
    assert all(len(line.split("\t")) == 3 for line in lines)
    metrics = evaluate_lines(fixture_dict, lines)
    assert metrics.accuracy == 1.0
    assert metrics.oov_rate == 0.0


def test_synthetic_corpus_preconditions(fixture_dict):
    with pytest.raises(ValueError):
        make_synthetic_corpus(fixture_dict, seed=1, n=0)
    with pytest.raises(EmptyDictionary):
        make_synthetic_corpus(Dictionary(), seed=1, n=5)


def test_evaluate_is_a_pure_function(fixture_dict, tmp_path):
    path = tmp_path / "corpus.tsv"
    make_synthetic_corpus(fixture_dict, seed=9, n=50, path=path)
    assert evaluate(fixture_dict, path) == evaluate(fixture_dict, path)
