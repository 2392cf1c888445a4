"""Exception types shared across the toolkit."""


class BgMorphError(Exception):
    """Base class for all toolkit errors."""


class InvalidTag(BgMorphError):
    """A packed tag has reserved bits set or an out-of-range field."""


class MalformedTag(BgMorphError):
    """A positional tag string does not follow the tag grammar."""


class ParseError(BgMorphError):
    """A text input (paradigm file, token stream, gold corpus) has a bad line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateType(BgMorphError):
    """A paradigm file defines the same type id twice."""

    def __init__(self, type_id: str):
        super().__init__(f"duplicate paradigm type {type_id!r}")
        self.type_id = type_id


class InvalidRule(BgMorphError):
    """A paradigm or form rule violates a structural invariant."""


class UnknownType(BgMorphError):
    """A lexeme references a paradigm type that is not in the paradigm set."""

    def __init__(self, type_id: str):
        super().__init__(f"unknown paradigm type {type_id!r}")
        self.type_id = type_id


class LemmaTooShort(BgMorphError):
    """A lemma is too short for some strip count in its paradigm."""


class FrozenDictionaryError(BgMorphError):
    """Mutation attempted on a dictionary that has been frozen."""


class FormatError(BgMorphError):
    """A binary dictionary file is corrupt, truncated or of the wrong format."""


class DecompressError(BgMorphError):
    """A dump file that should be bzip2-compressed cannot be decompressed."""


class XmlError(BgMorphError):
    """A dump file is not a well-formed XML export."""


class EmptyCorpus(BgMorphError):
    """An evaluation corpus contains no records."""


class EmptyDictionary(BgMorphError):
    """An operation that needs dictionary entries was given an empty dictionary."""
