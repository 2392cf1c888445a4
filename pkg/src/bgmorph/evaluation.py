"""Accuracy measurement against a gold-annotated corpus.

The gold format is UTF-8 TSV: ``surface<TAB>tag<TAB>lemma``, one token
per line, blank line for a sentence boundary, ``#`` for comments.  Each
record is lemmatized with its gold tag as the query and scored by exact
lemma match after NFC normalization; no case folding is applied, so gold
lemmas are expected lowercase.

``make_synthetic_corpus`` draws a seeded sample of the dictionary's own
entries, giving a corpus on which a correct pipeline must score
accuracy_on_covered = 1.0 with zero OOV.
"""

from __future__ import annotations

import random
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .dictionary import Dictionary
from .errors import EmptyCorpus, EmptyDictionary, MalformedTag, ParseError
from .lemmatizer import TokenRecord, lemmatize
from .tagset import decode_tag, format_tag_string, parse_tag_string

__all__ = [
    "EvalMetrics",
    "GoldRecord",
    "evaluate",
    "evaluate_lines",
    "make_synthetic_corpus",
    "read_gold_corpus",
]


@dataclass(frozen=True)
class GoldRecord:
    surface: str
    tag: str
    gold_lemma: str
    sentence_initial: bool = False


@dataclass(frozen=True)
class EvalMetrics:
    tokens: int
    correct: int
    accuracy: float
    covered: int
    accuracy_on_covered: float
    oov_rate: float

    def report(self) -> str:
        """Single-line key=value rendering."""
        return (
            f"tokens={self.tokens} correct={self.correct} accuracy={self.accuracy} "
            f"covered={self.covered} accuracy_on_covered={self.accuracy_on_covered} "
            f"oov_rate={self.oov_rate}"
        )


def read_gold_corpus(lines: Iterable[str]) -> list[GoldRecord]:
    """Parse gold TSV; raises ParseError with a 1-based line number."""
    records = []
    sentence_initial = True
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            sentence_initial = True
            continue
        if line.lstrip().startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 3:
            raise ParseError(
                f"expected 3 tab-separated columns, got {len(columns)}", line=lineno
            )
        surface, tag, lemma = columns
        if not surface or not lemma:
            raise ParseError("empty surface or lemma column", line=lineno)
        try:
            parse_tag_string(tag)
        except MalformedTag as exc:
            raise ParseError(str(exc), line=lineno) from None
        records.append(GoldRecord(surface, tag, lemma, sentence_initial))
        sentence_initial = False
    return records


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def evaluate_lines(dictionary: Dictionary, lines: Iterable[str]) -> EvalMetrics:
    records = read_gold_corpus(lines)
    if not records:
        raise EmptyCorpus("corpus contains no records")
    tokens = len(records)
    correct = 0
    covered = 0
    correct_covered = 0
    for record in records:
        token = TokenRecord(
            record.surface, parse_tag_string(record.tag), record.sentence_initial
        )
        result = lemmatize(dictionary, token)
        hit = _nfc(result.lemma) == _nfc(record.gold_lemma)
        correct += hit
        if not result.oov:
            covered += 1
            correct_covered += hit
    return EvalMetrics(
        tokens=tokens,
        correct=correct,
        accuracy=correct / tokens,
        covered=covered,
        accuracy_on_covered=correct_covered / covered if covered else 0.0,
        oov_rate=(tokens - covered) / tokens,
    )


def evaluate(dictionary: Dictionary, corpus: str | Path) -> EvalMetrics:
    """Score the dictionary-driven lemmatizer against a gold corpus file."""
    text = Path(corpus).read_text(encoding="utf-8")
    return evaluate_lines(dictionary, text.splitlines())


def make_synthetic_corpus(
    dictionary: Dictionary,
    seed: int,
    n: int,
    path: Optional[str | Path] = None,
) -> str:
    """Sample n gold records from the dictionary's own entries.

    Sampling is with replacement and fully determined by the seed; the
    same call always produces byte-identical output.  Returns the corpus
    text and also writes it to `path` when given.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    entries = list(dictionary.entries())
    if not entries:
        raise EmptyDictionary("dictionary has no entries to sample")
    rng = random.Random(seed)
    lines = []
    for _ in range(n):
        entry = rng.choice(entries)
        tag = format_tag_string(decode_tag(entry.tag))
        lines.append(f"{entry.surface}\t{tag}\t{entry.lemma}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
