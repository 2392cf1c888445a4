"""Inflectional paradigms and word-form generation.

A paradigm is an ordered list of (strip, suffix) rules on the lemma: a form
is produced by removing the last ``strip`` characters of the lemma and
appending ``suffix``.  Vowel alternations are absorbed into larger strips,
so the engine itself stays a pure string operation.  Strip counts are in
Unicode characters, never bytes; Cyrillic input would be corrupted by
byte-based stripping.

Paradigm definition files are UTF-8 text::

    # comment
    paradigm 83 pos=A
    form strip=0 suffix=- tag=Amsi- base
    form strip=4 suffix=едкия tag=Amsd-

``suffix=-`` denotes the empty suffix (a bare hyphen cannot be a real
Bulgarian suffix).  Exactly one rule per paradigm carries the ``base``
flag; it emits the lemma itself, tagged with its citation-form features.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .errors import DuplicateType, InvalidRule, LemmaTooShort, ParseError, UnknownType
from .tagset import GramFeatures, MalformedTag, PackedTag, PosClass, encode_tag, parse_tag_string

__all__ = [
    "FormRule",
    "Paradigm",
    "ParadigmSet",
    "TYPE_ID_PATTERN",
    "WordEntry",
    "generate_word_forms",
    "load_paradigms",
    "validate_paradigm",
]

#: Paradigm type ids look like BG-Office file numbers: digits plus an
#: optional one-letter suffix ("83", "187a").
TYPE_ID_PATTERN = re.compile(r"\d+[a-z]?")


@dataclass(frozen=True)
class FormRule:
    """One inflected form: strip N characters off the lemma, add a suffix."""

    strip: int
    suffix: str
    tag: GramFeatures
    is_base: bool = False


@dataclass(frozen=True)
class Paradigm:
    """An inflectional type: an id, a part of speech and its form rules."""

    type_id: str
    pos_class: PosClass
    rules: tuple[FormRule, ...]


@dataclass(frozen=True)
class WordEntry:
    """A generated surface form linked back to its lemma and packed tag."""

    surface: str
    lemma: str
    tag: PackedTag
    paradigm_type: str


def validate_paradigm(paradigm: Paradigm) -> list[str]:
    """Return all invariant violations of a paradigm; empty means valid."""
    problems = []
    if not TYPE_ID_PATTERN.fullmatch(paradigm.type_id):
        problems.append(f"type id {paradigm.type_id!r} is not digits plus optional letter")
    if not paradigm.rules:
        problems.append("paradigm has no rules")
    base_rules = [r for r in paradigm.rules if r.is_base]
    if len(base_rules) != 1:
        problems.append(f"paradigm must have exactly one base rule, found {len(base_rules)}")
    for i, rule in enumerate(paradigm.rules):
        if rule.strip < 0:
            problems.append(f"rule {i}: negative strip count")
        if rule.is_base and (rule.strip != 0 or rule.suffix != ""):
            problems.append(f"rule {i}: base rule must have strip=0 and empty suffix")
    return problems


class ParadigmSet:
    """An immutable collection of paradigms keyed by type id."""

    def __init__(self, paradigms: dict[str, Paradigm]):
        self._paradigms = dict(paradigms)

    def __contains__(self, type_id: str) -> bool:
        return type_id in self._paradigms

    def __len__(self) -> int:
        return len(self._paradigms)

    def __iter__(self) -> Iterator[Paradigm]:
        return iter(self._paradigms.values())

    def get(self, type_id: str) -> Paradigm:
        try:
            return self._paradigms[type_id]
        except KeyError:
            raise UnknownType(type_id) from None

    def type_ids(self) -> list[str]:
        return sorted(self._paradigms)


_HEADER_RE = re.compile(r"paradigm\s+(\S+)\s+pos=(\S+)$")
_RULE_RE = re.compile(r"form\s+strip=(\S+)\s+suffix=(\S+)\s+tag=(\S+)(\s+base)?$")

_POS_FOR_HEADER = {
    "N": PosClass.NOUN,
    "A": PosClass.ADJECTIVE,
    "V": PosClass.VERB,
    "P": PosClass.PRONOUN,
    "M": PosClass.NUMERAL,
    "D": PosClass.ADVERB,
    "R": PosClass.PREPOSITION,
    "C": PosClass.CONJUNCTION,
    "T": PosClass.PARTICLE,
    "I": PosClass.INTERJECTION,
}


def load_paradigms(path: str | Path) -> ParadigmSet:
    """Load and validate a paradigm definition file.

    Raises ParseError on malformed lines, DuplicateType on a repeated type
    id, InvalidRule when a parsed paradigm violates the invariants.
    """
    paradigms: dict[str, Paradigm] = {}
    current_id: str | None = None
    current_pos: PosClass | None = None
    current_rules: list[FormRule] = []

    def finish_current() -> None:
        if current_id is None:
            return
        paradigm = Paradigm(current_id, current_pos, tuple(current_rules))
        problems = validate_paradigm(paradigm)
        if problems:
            raise InvalidRule(f"paradigm {current_id!r}: " + "; ".join(problems))
        paradigms[current_id] = paradigm

    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            header = _HEADER_RE.fullmatch(line)
            if header:
                finish_current()
                type_id, pos_letter = header.groups()
                if type_id in paradigms:
                    raise DuplicateType(type_id)
                if not TYPE_ID_PATTERN.fullmatch(type_id):
                    raise ParseError(f"bad type id {type_id!r}", line_no)
                if pos_letter not in _POS_FOR_HEADER:
                    raise ParseError(f"bad POS letter {pos_letter!r}", line_no)
                current_id = type_id
                current_pos = _POS_FOR_HEADER[pos_letter]
                current_rules = []
                continue
            rule_match = _RULE_RE.fullmatch(line)
            if rule_match:
                if current_id is None:
                    raise ParseError("form rule before any paradigm header", line_no)
                strip_text, suffix, tag_text, base_flag = rule_match.groups()
                try:
                    strip = int(strip_text)
                except ValueError:
                    raise ParseError(f"bad strip count {strip_text!r}", line_no) from None
                try:
                    tag = parse_tag_string(tag_text)
                except MalformedTag as exc:
                    raise ParseError(f"bad tag: {exc}", line_no) from None
                current_rules.append(
                    FormRule(
                        strip=strip,
                        suffix="" if suffix == "-" else suffix,
                        tag=tag,
                        is_base=base_flag is not None,
                    )
                )
                continue
            raise ParseError(f"unrecognized line {line!r}", line_no)
    finish_current()
    return ParadigmSet(paradigms)


@lru_cache(maxsize=None)
def _packed(tag: GramFeatures) -> PackedTag:
    return encode_tag(tag)


def generate_word_forms(lemma: str, type_id: str, paradigm_set: ParadigmSet) -> list[WordEntry]:
    """Generate every word form of a lemma from its paradigm type.

    Output order follows rule order.  Raises UnknownType when the type id is
    absent and LemmaTooShort when some rule would strip the whole lemma.
    """
    if not lemma:
        raise LemmaTooShort("empty lemma")
    paradigm = paradigm_set.get(type_id)
    length = len(lemma)
    worst = max(rule.strip for rule in paradigm.rules)
    if worst >= length:
        raise LemmaTooShort(
            f"lemma {lemma!r} has {length} characters but type {type_id!r} strips up to {worst}"
        )
    return [
        WordEntry(
            surface=lemma[: length - rule.strip] + rule.suffix,
            lemma=lemma,
            tag=_packed(rule.tag),
            paradigm_type=type_id,
        )
        for rule in paradigm.rules
    ]
