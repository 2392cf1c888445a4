"""Morphosyntactic feature model and its encodings.

A feature bundle (:class:`GramFeatures`) can be rendered two ways:

* packed into a 32-bit integer for compact storage (``encode_tag`` /
  ``decode_tag``),
* written as a positional tag string for text interchange
  (``format_tag_string`` / ``parse_tag_string``).

Bit layout of the packed form (all remaining bits reserved, must be zero):

    bits 0-4   part of speech
    bits 5-6   gender
    bits 7-8   number
    bits 9-10  article
    bit  11    extended adjectival form
    bits 12-13 person
    bits 14-16 tense

The positional string grammar starts with a part-of-speech letter followed
by class-specific feature letters, ``-`` standing for an unspecified slot.
Trailing ``-`` slots may be omitted when parsing; formatting always emits
the full fixed-length class form.

    N  noun          gender, number, article
    A  adjective     gender, number, article, extended
    V  verb          person, number, tense
    P  pronoun       gender, number, person
    M  numeral       gender, number, article
    D  adverb        (no feature slots)
    R  preposition   (no feature slots)
    C  conjunction   (no feature slots)
    T  particle      (no feature slots)
    I  interjection  (no feature slots)

Feature letters: gender ``m/f/n``; number ``s/p``; article ``i`` indefinite,
``d`` definite, ``f`` definite full; extended ``e``; person ``1/2/3``;
tense ``p`` present, ``a`` aorist, ``i`` imperfect, ``m`` imperative.
A bare ``-`` is the tag with no information at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import NewType

from .errors import InvalidTag, MalformedTag

__all__ = [
    "Article",
    "Gender",
    "GramFeatures",
    "Number",
    "PackedTag",
    "Person",
    "PosClass",
    "Tense",
    "decode_tag",
    "encode_tag",
    "format_packed_tag",
    "format_tag_string",
    "parse_tag_string",
    "specified_field_count",
    "tags_compatible",
]


class PosClass(IntEnum):
    UNSPECIFIED = 0
    NOUN = 1
    ADJECTIVE = 2
    VERB = 3
    PRONOUN = 4
    NUMERAL = 5
    ADVERB = 6
    PREPOSITION = 7
    CONJUNCTION = 8
    PARTICLE = 9
    INTERJECTION = 10


class Gender(IntEnum):
    UNSPECIFIED = 0
    MASCULINE = 1
    FEMININE = 2
    NEUTER = 3


class Number(IntEnum):
    UNSPECIFIED = 0
    SINGULAR = 1
    PLURAL = 2


class Article(IntEnum):
    UNSPECIFIED = 0
    INDEFINITE = 1
    DEFINITE = 2
    DEFINITE_FULL = 3


class Person(IntEnum):
    UNSPECIFIED = 0
    FIRST = 1
    SECOND = 2
    THIRD = 3


class Tense(IntEnum):
    UNSPECIFIED = 0
    PRESENT = 1
    AORIST = 2
    IMPERFECT = 3
    IMPERATIVE = 4


#: A feature bundle packed into one 32-bit unsigned integer.
PackedTag = NewType("PackedTag", int)


@dataclass(frozen=True)
class GramFeatures:
    """One bundle of morphosyntactic features; value 0 means unspecified."""

    pos_class: PosClass = PosClass.UNSPECIFIED
    gender: Gender = Gender.UNSPECIFIED
    number: Number = Number.UNSPECIFIED
    article: Article = Article.UNSPECIFIED
    extended: bool = False
    person: Person = Person.UNSPECIFIED
    tense: Tense = Tense.UNSPECIFIED


# (field name, bit offset, enum) in ascending bit order; `extended` sits at
# bit 11 between article and person and is handled separately.
_FIELD_BITS = (
    ("pos_class", 0, PosClass),
    ("gender", 5, Gender),
    ("number", 7, Number),
    ("article", 9, Article),
    ("person", 12, Person),
    ("tense", 14, Tense),
)
_EXTENDED_BIT = 11
_FIELD_WIDTH = {"pos_class": 5, "gender": 2, "number": 2, "article": 2, "person": 2, "tense": 3}
_RESERVED_MASK = ~((1 << 17) - 1)


def encode_tag(features: GramFeatures) -> PackedTag:
    """Pack a feature bundle into its 32-bit integer form.

    Raises ValueError if a field is not a member of its enum.
    """
    value = 0
    for name, offset, enum_cls in _FIELD_BITS:
        value |= int(enum_cls(getattr(features, name))) << offset
    if features.extended:
        value |= 1 << _EXTENDED_BIT
    return PackedTag(value)


def decode_tag(packed: int) -> GramFeatures:
    """Unpack a 32-bit tag; the inverse of :func:`encode_tag` on its image.

    Raises InvalidTag if any reserved bit is set or a field's bit pattern
    is not a member of its enum.
    """
    if packed < 0 or packed & _RESERVED_MASK:
        raise InvalidTag(f"reserved bits set in 0x{packed & 0xFFFFFFFF:08x}")
    fields = {}
    for name, offset, enum_cls in _FIELD_BITS:
        raw = (packed >> offset) & ((1 << _FIELD_WIDTH[name]) - 1)
        try:
            fields[name] = enum_cls(raw)
        except ValueError:
            raise InvalidTag(f"{name} value {raw} out of range in 0x{packed:08x}") from None
    return GramFeatures(extended=bool(packed & (1 << _EXTENDED_BIT)), **fields)


def format_packed_tag(packed: int) -> str:
    """Render a packed tag the way the CLI does: 0x-prefixed 8-digit hex."""
    return f"0x{int(packed):08x}"


_POS_LETTERS = {
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
_LETTER_FOR_POS = {v: k for k, v in _POS_LETTERS.items()}

_GENDER_SLOT = ("gender", {"m": Gender.MASCULINE, "f": Gender.FEMININE, "n": Gender.NEUTER})
_NUMBER_SLOT = ("number", {"s": Number.SINGULAR, "p": Number.PLURAL})
_ARTICLE_SLOT = ("article", {"i": Article.INDEFINITE, "d": Article.DEFINITE, "f": Article.DEFINITE_FULL})
_EXTENDED_SLOT = ("extended", {"e": True})
_PERSON_SLOT = ("person", {"1": Person.FIRST, "2": Person.SECOND, "3": Person.THIRD})
_TENSE_SLOT = ("tense", {"p": Tense.PRESENT, "a": Tense.AORIST, "i": Tense.IMPERFECT, "m": Tense.IMPERATIVE})

#: Feature slots per part of speech, in positional order after the POS letter.
CLASS_SLOTS = {
    PosClass.NOUN: (_GENDER_SLOT, _NUMBER_SLOT, _ARTICLE_SLOT),
    PosClass.ADJECTIVE: (_GENDER_SLOT, _NUMBER_SLOT, _ARTICLE_SLOT, _EXTENDED_SLOT),
    PosClass.VERB: (_PERSON_SLOT, _NUMBER_SLOT, _TENSE_SLOT),
    PosClass.PRONOUN: (_GENDER_SLOT, _NUMBER_SLOT, _PERSON_SLOT),
    PosClass.NUMERAL: (_GENDER_SLOT, _NUMBER_SLOT, _ARTICLE_SLOT),
    PosClass.ADVERB: (),
    PosClass.PREPOSITION: (),
    PosClass.CONJUNCTION: (),
    PosClass.PARTICLE: (),
    PosClass.INTERJECTION: (),
}

_UNSPECIFIED = {
    "gender": Gender.UNSPECIFIED,
    "number": Number.UNSPECIFIED,
    "article": Article.UNSPECIFIED,
    "extended": False,
    "person": Person.UNSPECIFIED,
    "tense": Tense.UNSPECIFIED,
}


def parse_tag_string(s: str) -> GramFeatures:
    """Parse a positional tag string into a feature bundle.

    Trailing unspecified slots may be omitted; ``-`` alone is the empty tag.
    Raises MalformedTag on an unknown POS letter, an unknown feature letter,
    or a string longer than the class form.
    """
    if not s:
        raise MalformedTag("empty tag string")
    if s == "-":
        return GramFeatures()
    pos = _POS_LETTERS.get(s[0])
    if pos is None:
        raise MalformedTag(f"unknown POS letter {s[0]!r} in {s!r}")
    slots = CLASS_SLOTS[pos]
    if len(s) - 1 > len(slots):
        raise MalformedTag(f"tag {s!r} too long for class {s[0]}")
    fields = {"pos_class": pos}
    for letter, (name, alphabet) in zip(s[1:], slots):
        if letter == "-":
            continue
        if letter not in alphabet:
            raise MalformedTag(f"unknown {name} letter {letter!r} in {s!r}")
        fields[name] = alphabet[letter]
    return GramFeatures(**fields)


def format_tag_string(features: GramFeatures) -> str:
    """Render a feature bundle as its fixed-length positional string.

    Fields outside the class's slot set are not representable and are left
    out; for the unspecified POS class the result is ``-``.
    """
    pos = features.pos_class
    if pos is PosClass.UNSPECIFIED:
        return "-"
    out = [_LETTER_FOR_POS[pos]]
    for name, alphabet in CLASS_SLOTS[pos]:
        value = getattr(features, name)
        for letter, slot_value in alphabet.items():
            if slot_value == value:
                out.append(letter)
                break
        else:
            out.append("-")
    return "".join(out)


def specified_field_count(features: GramFeatures) -> int:
    """Number of fields carrying information (non-zero, or extended=True)."""
    return (
        (features.pos_class != PosClass.UNSPECIFIED)
        + (features.gender != Gender.UNSPECIFIED)
        + (features.number != Number.UNSPECIFIED)
        + (features.article != Article.UNSPECIFIED)
        + features.extended
        + (features.person != Person.UNSPECIFIED)
        + (features.tense != Tense.UNSPECIFIED)
    )


def tags_compatible(query: GramFeatures, candidate: GramFeatures) -> bool:
    """Wildcard subsumption: every specified query field must match.

    Unspecified query fields match anything; ``extended`` participates only
    when the query sets it.
    """
    for name, _, _ in _FIELD_BITS:
        wanted = getattr(query, name)
        if wanted and getattr(candidate, name) != wanted:
            return False
    if query.extended and not candidate.extended:
        return False
    return True
