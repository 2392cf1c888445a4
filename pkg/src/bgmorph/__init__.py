"""Dictionary-based morphological toolkit for Bulgarian.

Generates inflected word forms from paradigm definitions, builds a
surface-form dictionary from lexical resources, and lemmatizes token
streams using POS-conditioned dictionary lookup.
"""

from .dictionary import Candidate, Dictionary, DictionaryStats, Lexeme, WordEntry
from .errors import (
    BgMorphError,
    DecompressError,
    DuplicateType,
    EmptyCorpus,
    EmptyDictionary,
    FormatError,
    FrozenDictionaryError,
    InvalidRule,
    InvalidTag,
    LemmaTooShort,
    MalformedTag,
    ParseError,
    UnknownType,
    XmlError,
)
from .evaluation import (
    EvalMetrics,
    GoldRecord,
    evaluate,
    evaluate_lines,
    make_synthetic_corpus,
)
from .ingest import (
    ScanPolicy,
    ScanReport,
    load_builtin,
    scan_bgoffice,
    scan_wiktionary,
)
from .lemmatizer import (
    LemmaResult,
    TokenRecord,
    annotate_lines,
    lemmatize,
    lemmatize_stream,
    read_token_stream,
)
from .paradigms import (
    FormRule,
    Paradigm,
    ParadigmSet,
    generate_word_forms,
    load_paradigms,
    validate_paradigm,
)
from .tagset import (
    Article,
    Gender,
    GramFeatures,
    Number,
    PackedTag,
    Person,
    PosClass,
    Tense,
    decode_tag,
    encode_tag,
    format_packed_tag,
    format_tag_string,
    parse_tag_string,
    specified_field_count,
    tags_compatible,
)

__version__ = "0.1.0"

__all__ = [
    "Article",
    "BgMorphError",
    "Candidate",
    "DecompressError",
    "Dictionary",
    "DictionaryStats",
    "DuplicateType",
    "EmptyCorpus",
    "EmptyDictionary",
    "EvalMetrics",
    "FormRule",
    "FormatError",
    "FrozenDictionaryError",
    "Gender",
    "GoldRecord",
    "GramFeatures",
    "InvalidRule",
    "InvalidTag",
    "LemmaResult",
    "LemmaTooShort",
    "Lexeme",
    "MalformedTag",
    "Number",
    "PackedTag",
    "Paradigm",
    "ParadigmSet",
    "ParseError",
    "Person",
    "PosClass",
    "ScanPolicy",
    "ScanReport",
    "Tense",
    "TokenRecord",
    "UnknownType",
    "WordEntry",
    "XmlError",
    "annotate_lines",
    "decode_tag",
    "encode_tag",
    "evaluate",
    "evaluate_lines",
    "format_packed_tag",
    "format_tag_string",
    "generate_word_forms",
    "lemmatize",
    "lemmatize_stream",
    "load_builtin",
    "load_paradigms",
    "make_synthetic_corpus",
    "parse_tag_string",
    "read_token_stream",
    "scan_bgoffice",
    "scan_wiktionary",
    "specified_field_count",
    "tags_compatible",
    "validate_paradigm",
    "__version__",
]
