"""Command-line front end.

Exit codes are normative so shell pipelines can rely on them:

    0  success
    1  usage error
    2  I/O or file-format error
    3  strict-mode scan failure
    4  malformed tag, hex value or input line

stdout carries data, stderr carries diagnostics.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from . import __version__
from .dictionary import Dictionary
from .errors import (
    BgMorphError,
    DecompressError,
    DuplicateType,
    EmptyCorpus,
    FormatError,
    InvalidRule,
    InvalidTag,
    LemmaTooShort,
    MalformedTag,
    ParseError,
    UnknownType,
    XmlError,
)
from .evaluation import evaluate
from .ingest import ScanPolicy, ScanReport, scan_bgoffice, scan_wiktionary
from .lemmatizer import annotate_lines
from .paradigms import ParadigmSet, generate_word_forms, load_paradigms
from .tagset import (
    decode_tag,
    encode_tag,
    format_packed_tag,
    format_tag_string,
    parse_tag_string,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_STRICT = 3
EXIT_MALFORMED = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors with exit code 2; we reserve 2 for
    I/O, so route them through an exception handled in main()."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _fail(code: int, message: str) -> int:
    print(f"bgmorph: error: {message}", file=sys.stderr)
    return code


def _default_paradigms() -> Path:
    return Path(str(resources.files(__package__).joinpath("data/paradigms.bg")))


def _load_paradigm_set(path: Optional[str]) -> ParadigmSet:
    return load_paradigms(Path(path) if path else _default_paradigms())


def _report_lines(label: str, source: str, report: ScanReport) -> str:
    unknown = (
        ",".join(f"{t}:{n}" for t, n in sorted(report.unknown_types.items())) or "-"
    )
    return (
        f"{label} {source}: files_processed={report.files_processed} "
        f"lexemes_added={report.lexemes_added} lines_skipped={report.lines_skipped} "
        f"unknown_types={unknown}"
    )


def cmd_build(args) -> int:
    if not args.bgoffice and not args.wiktionary:
        return _fail(EXIT_USAGE, "build needs at least one --bgoffice or --wiktionary source")
    try:
        paradigms = _load_paradigm_set(args.paradigms)
    except (OSError, ParseError, DuplicateType, InvalidRule) as exc:
        return _fail(EXIT_IO, f"cannot load paradigms: {exc}")
    policy = ScanPolicy(strict=args.strict)
    dictionary = Dictionary()
    lines = []
    try:
        for directory in args.bgoffice:
            report = scan_bgoffice(directory, dictionary, paradigms, policy, args.encoding)
            lines.append(_report_lines("bgoffice", directory, report))
        for dump in args.wiktionary:
            report = scan_wiktionary(dump, dictionary, paradigms, policy)
            lines.append(_report_lines("wiktionary", dump, report))
    except (UnknownType, LemmaTooShort) as exc:
        return _fail(EXIT_STRICT, f"strict scan failed: {exc}")
    except (OSError, DecompressError, XmlError, UnicodeDecodeError) as exc:
        return _fail(EXIT_IO, str(exc))
    dictionary.freeze()
    try:
        dictionary.save(args.out)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {args.out}: {exc}")
    stats = dictionary.stats()
    for line in lines:
        print(line)
    print(
        f"lemma_count={stats.lemma_count} form_count={stats.form_count} "
        f"ambiguous_surface_count={stats.ambiguous_surface_count}"
    )
    return EXIT_OK


def cmd_forms(args) -> int:
    try:
        paradigms = _load_paradigm_set(args.paradigms)
        entries = generate_word_forms(args.lemma, args.type, paradigms)
    except (OSError, ParseError, DuplicateType, InvalidRule, UnknownType, LemmaTooShort) as exc:
        return _fail(EXIT_IO, str(exc))
    for entry in entries:
        tag_string = format_tag_string(decode_tag(entry.tag))
        print(f"{entry.surface}\t{tag_string}\t{format_packed_tag(entry.tag)}")
    return EXIT_OK


def cmd_lemmatize(args) -> int:
    try:
        dictionary = Dictionary.load(args.dict)
    except (OSError, FormatError) as exc:
        return _fail(EXIT_IO, f"cannot load dictionary: {exc}")
    try:
        if args.input:
            input_lines: Iterable[str] = Path(args.input).read_text(
                encoding="utf-8"
            ).splitlines()
        else:
            input_lines = (line.rstrip("\n") for line in sys.stdin)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot read input: {exc}")
    try:
        for line in annotate_lines(dictionary, input_lines, fallback=not args.no_fallback):
            print(line)
    except ParseError as exc:
        return _fail(EXIT_MALFORMED, str(exc))
    return EXIT_OK


def cmd_tag(args) -> int:
    if args.mode == "encode":
        try:
            features = parse_tag_string(args.value)
        except MalformedTag as exc:
            return _fail(EXIT_MALFORMED, str(exc))
        print(format_packed_tag(encode_tag(features)))
        return EXIT_OK
    try:
        packed = int(args.value, 16)
    except ValueError:
        return _fail(EXIT_MALFORMED, f"not a hexadecimal value: {args.value!r}")
    try:
        features = decode_tag(packed)
    except InvalidTag as exc:
        return _fail(EXIT_MALFORMED, str(exc))
    print(format_tag_string(features))
    for name in ("pos_class", "gender", "number", "article", "person", "tense"):
        value = getattr(features, name)
        print(f"{name}={value.name.lower() if value else '-'}")
    print(f"extended={'yes' if features.extended else 'no'}")
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        dictionary = Dictionary.load(args.dict)
    except (OSError, FormatError) as exc:
        return _fail(EXIT_IO, f"cannot load dictionary: {exc}")
    try:
        metrics = evaluate(dictionary, args.corpus)
    except (OSError, EmptyCorpus) as exc:
        return _fail(EXIT_IO, str(exc))
    except ParseError as exc:
        return _fail(EXIT_MALFORMED, str(exc))
    print(metrics.report())
    return EXIT_OK


def cmd_stats(args) -> int:
    try:
        dictionary = Dictionary.load(args.dict)
    except (OSError, FormatError) as exc:
        return _fail(EXIT_IO, f"cannot load dictionary: {exc}")
    stats = dictionary.stats()
    print(f"lemma_count={stats.lemma_count}")
    print(f"form_count={stats.form_count}")
    print(f"ambiguous_surface_count={stats.ambiguous_surface_count}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bgmorph", description="Bulgarian morphological toolkit")
    version = f"%(prog)s {__version__}"
    parser.add_argument("--version", action="version", version=version)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    build = sub.add_parser("build", help="build a dictionary from lexical resources")
    build.add_argument("--bgoffice", action="append", default=[], metavar="DIR",
                       help="BG-Office-style data directory (repeatable)")
    build.add_argument("--wiktionary", action="append", default=[], metavar="FILE",
                       help="MediaWiki XML export, optionally bzip2-compressed (repeatable)")
    build.add_argument("--paradigms", metavar="FILE", help="paradigm definitions (default: bundled)")
    build.add_argument("--out", required=True, metavar="DICT", help="output dictionary path")
    build.add_argument("--strict", action="store_true",
                       help="abort on unknown types or malformed input")
    build.add_argument("--encoding", default="utf-8", help="encoding of .dat files")
    build.set_defaults(func=cmd_build)

    forms = sub.add_parser("forms", help="generate all word forms of a lemma")
    forms.add_argument("lemma")
    forms.add_argument("type", help="paradigm type id, e.g. 83")
    forms.add_argument("--paradigms", metavar="FILE", help="paradigm definitions (default: bundled)")
    forms.set_defaults(func=cmd_forms)

    lemmatize = sub.add_parser("lemmatize", help="annotate a TSV token stream with lemmas")
    lemmatize.add_argument("--dict", required=True, metavar="DICT")
    lemmatize.add_argument("--input", metavar="FILE", help="token stream (default: stdin)")
    lemmatize.add_argument("--no-fallback", action="store_true",
                           help="treat tokens whose tag filter empties as OOV")
    lemmatize.set_defaults(func=cmd_lemmatize)

    tag = sub.add_parser("tag", help="convert between tag strings and packed values")
    tag.add_argument("mode", choices=("encode", "decode"))
    tag.add_argument("value", help="tag string for encode, hex value for decode")
    tag.set_defaults(func=cmd_tag)

    eval_cmd = sub.add_parser("eval", help="score lemmatization against a gold corpus")
    eval_cmd.add_argument("--dict", required=True, metavar="DICT")
    eval_cmd.add_argument("--corpus", required=True, metavar="FILE")
    eval_cmd.set_defaults(func=cmd_eval)

    stats = sub.add_parser("stats", help="print dictionary statistics")
    stats.add_argument("--dict", required=True, metavar="DICT")
    stats.set_defaults(func=cmd_stats)

    for command in (build, forms, lemmatize, tag, eval_cmd, stats):
        command.add_argument("--version", action="version", version=version)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BgMorphError as exc:
        return _fail(EXIT_IO, str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
