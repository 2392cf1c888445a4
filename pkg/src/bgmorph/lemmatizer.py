"""POS-conditioned lemmatization of token streams.

Each token carries its surface string, the grammatical features supplied
by an upstream tagger (possibly all-unspecified) and a sentence-initial
flag.  Lemmatization is pure dictionary lookup:

1. Casing ladder: look the surface up exactly; if that finds nothing and
   the surface has any uppercase letter, try it fully lowercased; if still
   nothing and the token is sentence-initial with only its first character
   uppercase, try it with just that character lowered.
2. Keep the candidates whose tag is compatible with the query.
3. Score each survivor by the number of specified query fields it matches
   plus the number of fields its own tag specifies; take the maximum,
   breaking ties by (lemma, tag value).
4. If the filter removed everything, retry with a POS-class-only query,
   then (unless fallback is disabled) fall back to scoring the unfiltered
   pool.
5. With no candidates at any casing level the token is out of vocabulary
   and its lowercased surface is returned as the lemma.

The stream format shared with the evaluation harness is TSV,
``surface<TAB>tag[<TAB>lemma]``, one token per line; a blank line is a
sentence boundary, ``#`` starts a comment line.  Annotated output appends
a lemma column and an OOV marker column (``O`` out of vocabulary, ``-``
otherwise) to each token line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .dictionary import Candidate, Dictionary
from .errors import MalformedTag, ParseError
from .tagset import (
    GramFeatures,
    PackedTag,
    decode_tag,
    parse_tag_string,
    specified_field_count,
    tags_compatible,
)

__all__ = [
    "LemmaResult",
    "TokenRecord",
    "annotate_lines",
    "lemmatize",
    "lemmatize_stream",
    "read_token_stream",
]

_ENUM_FIELDS = ("pos_class", "gender", "number", "article", "person", "tense")


@dataclass(frozen=True)
class TokenRecord:
    """One input token: surface, tagger-supplied features, position."""

    surface: str
    query_tag: GramFeatures = field(default_factory=GramFeatures)
    sentence_initial: bool = False

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be nonempty")


@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    matched_tag: Optional[PackedTag]
    candidate_count: int
    oov: bool


def _match_score(query: GramFeatures, candidate: GramFeatures) -> int:
    """Specified query fields the candidate matches exactly."""
    score = 0
    for name in _ENUM_FIELDS:
        wanted = getattr(query, name)
        if wanted and wanted == getattr(candidate, name):
            score += 1
    if query.extended and candidate.extended:
        score += 1
    return score


def _best(candidates: Sequence[Candidate], query: GramFeatures) -> Candidate:
    """Highest-scoring candidate; ties broken by (lemma, tag value)."""

    def rank(cand: Candidate):
        features = decode_tag(cand.tag)
        score = _match_score(query, features) + specified_field_count(features)
        return (-score, cand.lemma, cand.tag)

    return min(candidates, key=rank)


def lemmatize(dictionary: Dictionary, token: TokenRecord, fallback: bool = True) -> LemmaResult:
    """Assign a lemma to one token.  Total: never raises on any input."""
    surface = token.surface
    candidates = dictionary.lookup(surface)
    if not candidates and any(ch.isupper() for ch in surface):
        candidates = dictionary.lookup(surface.lower())
    if (
        not candidates
        and token.sentence_initial
        and surface[0].isupper()
        and not any(ch.isupper() for ch in surface[1:])
    ):
        candidates = dictionary.lookup(surface[0].lower() + surface[1:])
    if not candidates:
        return LemmaResult(surface.lower(), None, 0, True)

    query = token.query_tag
    pool = [c for c in candidates if tags_compatible(query, decode_tag(c.tag))]
    if not pool:
        if not fallback:
            return LemmaResult(surface.lower(), None, len(candidates), True)
        pos_only = GramFeatures(pos_class=query.pos_class)
        pool = [c for c in candidates if tags_compatible(pos_only, decode_tag(c.tag))]
        if pool:
            query = pos_only
        else:
            pool = candidates
    chosen = _best(pool, query)
    return LemmaResult(chosen.lemma, chosen.tag, len(candidates), False)


def lemmatize_stream(
    dictionary: Dictionary,
    tokens: Iterable[TokenRecord],
    fallback: bool = True,
) -> list[tuple[TokenRecord, LemmaResult]]:
    """Element-wise lemmatization, order-preserving."""
    return [(token, lemmatize(dictionary, token, fallback)) for token in tokens]


def _parse_token_line(line: str, lineno: int, sentence_initial: bool) -> TokenRecord:
    columns = line.split("\t")
    if len(columns) not in (2, 3):
        raise ParseError(
            f"expected 2 or 3 tab-separated columns, got {len(columns)}", line=lineno
        )
    surface, tag_string = columns[0], columns[1]
    if not surface:
        raise ParseError("empty surface column", line=lineno)
    try:
        features = parse_tag_string(tag_string)
    except MalformedTag as exc:
        raise ParseError(str(exc), line=lineno) from None
    return TokenRecord(surface, features, sentence_initial)


def read_token_stream(lines: Iterable[str]) -> Iterator[TokenRecord]:
    """Parse a TSV token stream; blank lines mark sentence boundaries.

    The first token of the stream and the first after each blank line are
    sentence-initial.  Raises ParseError with a 1-based line number.
    """
    sentence_initial = True
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            sentence_initial = True
            continue
        if line.lstrip().startswith("#"):
            continue
        yield _parse_token_line(line, lineno, sentence_initial)
        sentence_initial = False


def annotate_lines(
    dictionary: Dictionary,
    lines: Iterable[str],
    fallback: bool = True,
) -> Iterator[str]:
    """Line-oriented annotation: token lines gain a lemma column and an
    OOV marker column; blank and comment lines pass through unchanged."""
    sentence_initial = True
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            sentence_initial = True
            yield line
            continue
        if line.lstrip().startswith("#"):
            yield line
            continue
        token = _parse_token_line(line, lineno, sentence_initial)
        sentence_initial = False
        result = lemmatize(dictionary, token, fallback)
        marker = "O" if result.oov else "-"
        yield f"{line}\t{result.lemma}\t{marker}"
