"""Surface-form index with a versioned binary on-disk format.

A dictionary maps each generated surface form to its candidate
(lemma, tag, paradigm type) triples and keeps a census of lemmas.
Candidate lists are always held sorted by (lemma, tag value), so every
operation is deterministic and the same dictionary saved twice produces
byte-identical files.

Mutation is only allowed during the build phase; :meth:`Dictionary.freeze`
ends it.  A frozen dictionary is safe for unrestricted concurrent reads.

Binary format (all integers little-endian):

    magic       4 bytes  ASCII "BGLX"
    version     1 byte   0x01
    newline     1 byte   0x0A
    header      3 x u32  lemma count, surface count, form count
    lemma table          per lemma (sorted): string, u32 type count, type strings
    surface table        per surface (sorted): string, u32 candidate count,
                         then per candidate u32 lemma index, u32 tag, type string
    trailer     u32      CRC-32 of everything before it

Strings are a u32 byte length followed by UTF-8 bytes.
"""

from __future__ import annotations

import re
import struct
import zlib
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, NamedTuple

from .errors import FormatError, FrozenDictionaryError
from .paradigms import ParadigmSet, WordEntry, generate_word_forms
from .tagset import PackedTag

__all__ = ["Candidate", "Dictionary", "DictionaryStats", "Lexeme", "WordEntry"]

MAGIC = b"BGLX"
FORMAT_VERSION = 1

_LEXEME_TYPE_RE = re.compile(r"\d+[a-z]?")


@dataclass(frozen=True)
class Lexeme:
    """A lemma together with its inflectional type id."""

    lemma: str
    type_id: str

    def __post_init__(self):
        if not self.lemma:
            raise ValueError("lexeme lemma must be nonempty")
        if not _LEXEME_TYPE_RE.fullmatch(self.type_id):
            raise ValueError(f"bad paradigm type id {self.type_id!r}")


class Candidate(NamedTuple):
    """One lookup result: the lemma, its packed tag and its paradigm type."""

    lemma: str
    tag: PackedTag
    paradigm_type: str


@dataclass(frozen=True)
class DictionaryStats:
    lemma_count: int
    form_count: int
    ambiguous_surface_count: int


class Dictionary:
    """Index from surface form to candidate (lemma, tag, type) triples."""

    def __init__(self):
        self._forms: dict[str, list[Candidate]] = {}
        self._lemmas: dict[str, set[str]] = {}
        self._form_count = 0
        self._frozen = False

    # -- build phase ---------------------------------------------------

    def add_entry(self, entry: WordEntry) -> None:
        """Insert one generated form; duplicates collapse silently.

        Candidate lists stay sorted by (lemma, tag value); when the same
        (surface, lemma, tag) arrives again with a different paradigm type,
        the first insertion wins.
        """
        if self._frozen:
            raise FrozenDictionaryError("dictionary is frozen")
        candidates = self._forms.setdefault(entry.surface, [])
        key = (entry.lemma, entry.tag)
        lo, hi = 0, len(candidates)
        while lo < hi:
            mid = (lo + hi) // 2
            if (candidates[mid].lemma, candidates[mid].tag) < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(candidates) and (candidates[lo].lemma, candidates[lo].tag) == key:
            return
        candidates.insert(lo, Candidate(entry.lemma, entry.tag, entry.paradigm_type))
        self._form_count += 1

    def add_lexeme(self, lexeme: Lexeme, paradigms: ParadigmSet) -> None:
        """Generate and insert all forms of a lexeme.

        Propagates UnknownType / LemmaTooShort from generation; nothing is
        inserted when generation fails.
        """
        entries = generate_word_forms(lexeme.lemma, lexeme.type_id, paradigms)
        self._lemmas.setdefault(lexeme.lemma, set()).add(lexeme.type_id)
        for entry in entries:
            self.add_entry(entry)

    def freeze(self) -> "Dictionary":
        """End the build phase; further mutation raises."""
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    # -- reads ----------------------------------------------------------

    def lookup(self, surface: str) -> list[Candidate]:
        """All candidates for an exact surface match, in canonical order."""
        return list(self._forms.get(surface, ()))

    def __contains__(self, surface: str) -> bool:
        return surface in self._forms

    def __len__(self) -> int:
        return self._form_count

    def surfaces(self) -> list[str]:
        return sorted(self._forms)

    def items(self) -> Iterator[tuple[str, list[Candidate]]]:
        """(surface, candidates) pairs in canonical (sorted) order."""
        for surface in sorted(self._forms):
            yield surface, list(self._forms[surface])

    def entries(self) -> Iterator[WordEntry]:
        """Every stored entry, flattened, in canonical order."""
        for surface, candidates in self.items():
            for cand in candidates:
                yield WordEntry(surface, cand.lemma, cand.tag, cand.paradigm_type)

    def stats(self) -> DictionaryStats:
        return DictionaryStats(
            lemma_count=len(self._lemmas),
            form_count=self._form_count,
            ambiguous_surface_count=sum(1 for c in self._forms.values() if len(c) >= 2),
        )

    def merge(self, other: "Dictionary") -> "Dictionary":
        """Union of two dictionaries as a new build-phase dictionary.

        On colliding (surface, lemma, tag) triples this dictionary's
        paradigm type wins, mirroring sequential insertion order.
        """
        merged = Dictionary()
        for source in (self, other):
            for surface, candidates in source._forms.items():
                for cand in candidates:
                    merged.add_entry(WordEntry(surface, cand.lemma, cand.tag, cand.paradigm_type))
            for lemma, type_ids in source._lemmas.items():
                merged._lemmas.setdefault(lemma, set()).update(type_ids)
        return merged

    # -- serialization ---------------------------------------------------

    def to_bytes(self) -> bytes:
        """Serialize; bit-exact for equal dictionaries."""
        out = bytearray()
        out += MAGIC
        out.append(FORMAT_VERSION)
        out.append(0x0A)
        lemmas = sorted(self._lemmas)
        surfaces = sorted(self._forms)
        out += struct.pack("<III", len(lemmas), len(surfaces), self._form_count)
        lemma_index = {lemma: i for i, lemma in enumerate(lemmas)}
        for lemma in lemmas:
            _put_str(out, lemma)
            type_ids = sorted(self._lemmas[lemma])
            out += struct.pack("<I", len(type_ids))
            for type_id in type_ids:
                _put_str(out, type_id)
        for surface in surfaces:
            _put_str(out, surface)
            candidates = self._forms[surface]
            out += struct.pack("<I", len(candidates))
            for cand in candidates:
                out += struct.pack("<II", lemma_index[cand.lemma], cand.tag)
                _put_str(out, cand.paradigm_type)
        out += struct.pack("<I", zlib.crc32(bytes(out)))
        return bytes(out)

    def save(self, path: str | Path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def from_bytes(cls, data: bytes) -> "Dictionary":
        """Deserialize; the result is frozen.  Raises FormatError on bad
        magic, unsupported version, truncation or checksum mismatch."""
        if len(data) < 10 or data[:4] != MAGIC:
            raise FormatError("not a dictionary file (bad magic)")
        if data[4] != FORMAT_VERSION:
            raise FormatError(f"unsupported format version {data[4]}")
        if data[5] != 0x0A:
            raise FormatError("bad header")
        body, trailer = data[:-4], data[-4:]
        (stored_crc,) = struct.unpack("<I", trailer)
        if zlib.crc32(body) != stored_crc:
            raise FormatError("checksum mismatch")
        try:
            return cls._parse_body(body)
        except (struct.error, IndexError, UnicodeDecodeError) as exc:
            raise FormatError(f"truncated or corrupt dictionary: {exc}") from None

    @classmethod
    def _parse_body(cls, body: bytes) -> "Dictionary":
        offset = 6
        lemma_count, surface_count, form_count = struct.unpack_from("<III", body, offset)
        offset += 12
        lemmas: list[str] = []
        lemma_types: list[set[str]] = []
        for _ in range(lemma_count):
            lemma, offset = _get_str(body, offset)
            (n_types,) = struct.unpack_from("<I", body, offset)
            offset += 4
            type_ids = set()
            for _ in range(n_types):
                type_id, offset = _get_str(body, offset)
                type_ids.add(type_id)
            lemmas.append(lemma)
            lemma_types.append(type_ids)
        dictionary = cls()
        for surface_i in range(surface_count):
            surface, offset = _get_str(body, offset)
            (n_cands,) = struct.unpack_from("<I", body, offset)
            offset += 4
            candidates = []
            for _ in range(n_cands):
                lemma_i, tag = struct.unpack_from("<II", body, offset)
                offset += 8
                type_id, offset = _get_str(body, offset)
                candidates.append(Candidate(lemmas[lemma_i], PackedTag(tag), type_id))
            dictionary._forms[surface] = candidates
            dictionary._form_count += len(candidates)
        if offset != len(body):
            raise FormatError("trailing bytes after surface table")
        if dictionary._form_count != form_count:
            raise FormatError("form count does not match header")
        dictionary._lemmas = dict(zip(lemmas, lemma_types))
        dictionary._frozen = True
        return dictionary

    @classmethod
    def load(cls, path: str | Path) -> "Dictionary":
        return cls.from_bytes(Path(path).read_bytes())


def _put_str(out: bytearray, text: str) -> None:
    raw = text.encode("utf-8")
    out += struct.pack("<I", len(raw))
    out += raw


def _get_str(data: bytes, offset: int) -> tuple[str, int]:
    (length,) = struct.unpack_from("<I", data, offset)
    offset += 4
    end = offset + length
    if end > len(data):
        raise FormatError("string runs past end of file")
    return data[offset:end].decode("utf-8"), end
