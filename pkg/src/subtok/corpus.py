"""Corpus ingestion: text normalization and word-frequency tabulation."""

from __future__ import annotations

import enum
import logging
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import CorpusDecodeError, EmptyCorpusError

logger = logging.getLogger(__name__)

_BOM = "﻿"
_MAX_NORMALIZE_PASSES = 8


class UnicodeForm(enum.Enum):
    NFC = "NFC"
    NFKC = "NFKC"
    NONE = "none"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NormalizationConfig:
    """How raw text is canonicalized before tabulation.

    Defaults: NFC (identical-looking combining sequences share one table
    entry), no lowercasing, no punctuation stripping.  punctuation_set is
    ignored unless strip_punctuation is set.
    """

    unicode_form: UnicodeForm = UnicodeForm.NFC
    lowercase: bool = False
    strip_punctuation: bool = False
    punctuation_set: frozenset[str] = frozenset()


@dataclass(frozen=True)
class RawCorpus:
    """Normalized corpus lines in input order; lines carry no CR or BOM."""

    lines: tuple[str, ...]
    source_id: str


@dataclass(frozen=True)
class WordFrequencyTable:
    """Unique words with exact occurrence counts (64-bit safe)."""

    entries: Mapping[str, int]
    total_tokens: int
    source_id: str = ""

    def __post_init__(self):
        total = 0
        for word, count in self.entries.items():
            if count < 1:
                raise ValueError(f"count for {word!r} must be >= 1, got {count}")
            if any(ch.isspace() for ch in word):
                raise ValueError(f"table word {word!r} contains whitespace")
            total += count
        if total != self.total_tokens:
            raise ValueError(
                f"total_tokens={self.total_tokens} but counts sum to {total}")


def _normalize_pass(text: str, cfg: NormalizationConfig) -> str:
    if cfg.unicode_form is not UnicodeForm.NONE:
        text = unicodedata.normalize(cfg.unicode_form.value, text)
    if cfg.lowercase:
        text = text.lower()
    if cfg.strip_punctuation and cfg.punctuation_set:
        # Longer members first so multi-character units are removed whole.
        for mark in sorted(cfg.punctuation_set, key=lambda m: (-len(m), m)):
            if mark:
                text = text.replace(mark, "")
    return text


def normalize_text(text: str, cfg: NormalizationConfig = NormalizationConfig()) -> str:
    """Normalize text; reapplied until stable so the operation is idempotent.

    A single pass is not always a fixpoint (NFKC can expand a character into
    punctuation that stripping then removes, stripping can expose a new
    composition), so passes repeat until the text stops changing.
    """
    for _ in range(_MAX_NORMALIZE_PASSES):
        new = _normalize_pass(text, cfg)
        if new == text:
            return text
        text = new
    raise ValueError("normalization did not stabilize; pathological input or config")


def _decode_utf8(data: bytes, source: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_number = data[:exc.start].count(b"\n") + 1
        raise CorpusDecodeError(
            f"{source}: invalid UTF-8 at byte offset {exc.start} (line {line_number})",
            byte_offset=exc.start,
            line_number=line_number,
        ) from exc


def load_corpus(path: str | Path, cfg: NormalizationConfig = NormalizationConfig(),
                source_id: str | None = None) -> RawCorpus:
    """Read a UTF-8 text file into normalized lines.

    LF and CRLF line endings are accepted (CR stripped); a leading BOM is
    dropped.  Line order is preserved and a trailing newline does not add an
    empty final line.
    """
    path = Path(path)
    text = _decode_utf8(path.read_bytes(), str(path))
    if text.startswith(_BOM):
        text = text[1:]
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    lines = tuple(normalize_text(line, cfg) for line in text.split("\n"))
    if lines and lines[-1] == "":
        lines = lines[:-1]
    logger.debug("loaded %d lines from %s", len(lines), path)
    return RawCorpus(lines=lines, source_id=source_id or str(path))


def corpus_from_lines(lines: Iterable[str], cfg: NormalizationConfig = NormalizationConfig(),
                      source_id: str = "<memory>") -> RawCorpus:
    """In-memory counterpart of load_corpus, mainly for tests and tooling."""
    normalized = tuple(normalize_text(line.replace("\r", ""), cfg) for line in lines)
    return RawCorpus(lines=normalized, source_id=source_id)


def build_word_table(corpus: RawCorpus) -> WordFrequencyTable:
    """Tabulate whitespace-split words with exact occurrence counts."""
    entries: dict[str, int] = {}
    total = 0
    for line in corpus.lines:
        for word in line.split():
            entries[word] = entries.get(word, 0) + 1
            total += 1
    if not entries:
        raise EmptyCorpusError(f"corpus {corpus.source_id!r} contains no words")
    return WordFrequencyTable(entries=entries, total_tokens=total,
                              source_id=corpus.source_id)
