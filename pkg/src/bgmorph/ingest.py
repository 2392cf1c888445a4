"""Dictionary population from external lexical resources.

Two resource shapes are understood: a BG-Office-style data directory of
``bg<number><optional letter>.dat`` word lists, where the filename names
the inflectional type of every lemma inside, and a MediaWiki XML export
(optionally bzip2-compressed) where a template marker such as
``{{тип|83}}`` inside the wikitext names the type of the page title.

Scans are lenient by default: lines or pages that cannot be turned into
a lexeme are counted and skipped.  A strict policy raises instead.
"""

from __future__ import annotations

import bz2
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator
from xml.etree import ElementTree

from .dictionary import Dictionary, Lexeme
from .errors import DecompressError, LemmaTooShort, UnknownType, XmlError
from .paradigms import ParadigmSet

__all__ = [
    "DEFAULT_MARKER_NAMES",
    "ScanPolicy",
    "ScanReport",
    "load_builtin",
    "scan_bgoffice",
    "scan_wiktionary",
]

_DAT_NAME_RE = re.compile(r"bg(\d+[a-z]?)\.dat")

# Template names whose first positional parameter carries the type id.
DEFAULT_MARKER_NAMES = ("тип", "словоформи")


@dataclass(frozen=True)
class ScanPolicy:
    """strict=True aborts on unknown types and malformed input instead of
    counting and skipping."""

    strict: bool = False


@dataclass
class ScanReport:
    files_processed: int = 0
    lexemes_added: int = 0
    lines_skipped: int = 0
    unknown_types: dict[str, int] = field(default_factory=dict)

    def _skip_unknown(self, type_id: str) -> None:
        self.lines_skipped += 1
        self.unknown_types[type_id] = self.unknown_types.get(type_id, 0) + 1


def _add(
    dictionary: Dictionary,
    lexeme: Lexeme,
    paradigms: ParadigmSet,
    policy: ScanPolicy,
    report: ScanReport,
) -> None:
    """One add_lexeme attempt, routed through the scan policy."""
    if lexeme.type_id not in paradigms:
        if policy.strict:
            raise UnknownType(lexeme.type_id)
        report._skip_unknown(lexeme.type_id)
        return
    try:
        dictionary.add_lexeme(lexeme, paradigms)
    except LemmaTooShort:
        if policy.strict:
            raise
        report.lines_skipped += 1
        return
    report.lexemes_added += 1


def scan_bgoffice(
    directory: str | Path,
    dictionary: Dictionary,
    paradigms: ParadigmSet,
    policy: ScanPolicy = ScanPolicy(),
    encoding: str = "utf-8",
) -> ScanReport:
    """Scan a BG-Office-style data directory into the dictionary.

    The directory and all subdirectories are searched for files named
    ``bg<digits><optional lowercase letter>.dat``; other files are
    ignored.  Each nonempty, non-comment line is one lemma of the type
    named by the filename.
    """
    root = Path(directory)
    if not root.is_dir():
        raise NotADirectoryError(f"not a directory: {root}")
    report = ScanReport()
    for path in sorted(root.rglob("*.dat")):
        match = _DAT_NAME_RE.fullmatch(path.name)
        if match is None or not path.is_file():
            continue
        type_id = match.group(1)
        report.files_processed += 1
        for raw in path.read_text(encoding=encoding).splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            _add(dictionary, Lexeme(line, type_id), paradigms, policy, report)
    return report


def scan_wiktionary(
    dump: str | Path,
    dictionary: Dictionary,
    paradigms: ParadigmSet,
    policy: ScanPolicy = ScanPolicy(),
    marker_names: Iterable[str] = DEFAULT_MARKER_NAMES,
) -> ScanReport:
    """Scan a MediaWiki XML export (bzip2-compressed or plain) into the
    dictionary.

    Only main-namespace, non-redirect pages are considered.  The page
    title is the lemma; the type id comes from the first positional
    parameter of a marker template (``{{тип|83}}`` by default).  Pages
    without a usable marker count as skipped.
    """
    path = Path(dump)
    marker_re = _marker_regex(marker_names)
    report = ScanReport()
    with open(path, "rb") as fh:
        magic = fh.read(3)
        fh.seek(0)
        if magic == b"BZh":
            compressed = True
            stream: IO[bytes] = bz2.BZ2File(fh)
        elif path.suffix == ".bz2":
            raise DecompressError(f"invalid bzip2 header in {path}")
        else:
            compressed = False
            stream = fh
        try:
            for title, text in _iter_pages(stream):
                pairs = _extract_types(text, marker_re)
                if not pairs:
                    report.lines_skipped += 1
                    continue
                for type_id in pairs:
                    _add(dictionary, Lexeme(title, type_id), paradigms, policy, report)
        except ElementTree.ParseError as exc:
            raise XmlError(f"malformed XML export: {exc}") from None
        except (EOFError, OSError) as exc:
            if compressed:
                raise DecompressError(f"corrupt bzip2 stream: {exc}") from None
            raise
    report.files_processed = 1
    return report


def _marker_regex(names: Iterable[str]) -> re.Pattern[str]:
    alternatives = "|".join(re.escape(name) for name in names)
    return re.compile(r"\{\{(?:%s)\|(\d+[a-z]?)(?=[|}])" % alternatives)


def _extract_types(text: str, marker_re: re.Pattern[str]) -> list[str]:
    """All distinct type ids named by marker templates, in order."""
    seen: list[str] = []
    for type_id in marker_re.findall(text):
        if type_id not in seen:
            seen.append(type_id)
    return seen


def _localname(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _iter_pages(stream: IO[bytes]) -> Iterator[tuple[str, str]]:
    """Yield (title, wikitext) for each main-namespace non-redirect page,
    streaming so arbitrarily large exports stay in constant memory."""
    for _event, elem in ElementTree.iterparse(stream, events=("end",)):
        if _localname(elem.tag) != "page":
            continue
        title = None
        namespace = "0"
        redirect = False
        text = ""
        for child in elem.iter():
            name = _localname(child.tag)
            if name == "title":
                title = child.text or ""
            elif name == "ns":
                namespace = (child.text or "").strip() or "0"
            elif name == "redirect":
                redirect = True
            elif name == "text":
                text = child.text or ""
        elem.clear()
        if namespace != "0" or redirect or not title:
            continue
        yield title, text


def load_builtin() -> Dictionary:
    """Load the dictionary asset bundled with the package."""
    from importlib import resources

    data = resources.files(__package__).joinpath("data/builtin.dict").read_bytes()
    return Dictionary.from_bytes(data)
