"""Character-unit segmentation: the character baseline and the seed alphabet.

A "character unit" is either one Unicode scalar value or one extended
grapheme cluster, chosen by :class:`SegmentationMode`.  Scalar is the
default: a conjunct-heavy script segmented at scalar level yields a compact
inventory (letters, signs, digits), while grapheme mode groups combining
marks with their base.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping

from .graphemes import grapheme_clusters

if TYPE_CHECKING:  # pragma: no cover
    from .corpus import WordFrequencyTable
    from .lexicon import Lexicon

UNK_TOKEN = "<unk>"


class SegmentationMode(enum.Enum):
    SCALAR = "scalar"
    GRAPHEME = "grapheme"

    def __str__(self) -> str:
        return self.value


def segment_word(word: str, mode: SegmentationMode = SegmentationMode.SCALAR) -> list[str]:
    """Split a word into character units; concatenating them restores the word."""
    if not word:
        raise ValueError("cannot segment an empty word")
    if mode is SegmentationMode.SCALAR:
        return list(word)
    return grapheme_clusters(word)


def unit_length(text: str, mode: SegmentationMode) -> int:
    """Length of a string in character units under the given mode."""
    if mode is SegmentationMode.SCALAR:
        return len(text)
    return len(grapheme_clusters(text)) if text else 0


@dataclass(frozen=True)
class CharInventory:
    """Every character unit of a word table, with frequency-weighted counts.

    units are kept in code-point-sorted order so inventories (and the
    vocabularies seeded from them) are independent of corpus line order.
    """

    units: tuple[str, ...]
    mode: SegmentationMode
    counts: Mapping[str, int]


@dataclass(frozen=True)
class CharModel:
    """Character tokenizer: the serializable form of a trained inventory.

    Occurrence counts are a training statistic, not model state, so they are
    dropped here; this is what the vocab file format round-trips.
    """

    units: tuple[str, ...]
    mode: SegmentationMode
    unk_token: str = UNK_TOKEN

    def __post_init__(self):
        object.__setattr__(self, "_unit_set", frozenset(self.units))


def extract_charset(table: "WordFrequencyTable",
                    mode: SegmentationMode = SegmentationMode.SCALAR) -> CharInventory:
    """Collect all character units of the table, weighted by word frequency."""
    if not table.entries:
        raise ValueError("cannot extract a charset from an empty word table")
    counts: dict[str, int] = {}
    for word, freq in table.entries.items():
        for unit in segment_word(word, mode):
            counts[unit] = counts.get(unit, 0) + freq
    units = tuple(sorted(counts))
    return CharInventory(units=units, mode=mode, counts=counts)


def train_char(table: "WordFrequencyTable",
               mode: SegmentationMode = SegmentationMode.SCALAR) -> CharModel:
    """Build the character tokenizer for a word table."""
    inventory = extract_charset(table, mode)
    return CharModel(units=inventory.units, mode=mode)


def encode_word(model: CharModel, word: str) -> list[str]:
    """Segment a word under the model's mode, mapping unseen units to unk."""
    unit_set = model._unit_set
    return [u if u in unit_set else model.unk_token
            for u in segment_word(word, model.mode)]


def build_char_lexicon(table: "WordFrequencyTable",
                       mode: SegmentationMode = SegmentationMode.SCALAR) -> "Lexicon":
    """Map every table word to its character-unit sequence."""
    from .lexicon import Lexicon, ModelKind

    if not table.entries:
        raise ValueError("cannot build a lexicon from an empty word table")
    entries = {word: tuple(segment_word(word, mode)) for word in table.entries}
    return Lexicon(entries=entries, model_kind=ModelKind.CHAR, mode=mode)
