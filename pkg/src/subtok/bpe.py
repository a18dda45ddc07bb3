"""Byte-pair-encoding trainer and encoder.

Training greedily merges the most frequent adjacent token pair of the
word-frequency table (pairs never span word boundaries) until the target
vocabulary size is reached or no pair is left.  Ties are broken by the
code-point-smallest (left, right) pair, which makes the learned merge list
for a smaller target an exact prefix of the list for a larger one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping, Sequence

import numpy as np

from . import kernels
from .charset import UNK_TOKEN, SegmentationMode, segment_word

if TYPE_CHECKING:  # pragma: no cover
    from .corpus import WordFrequencyTable
    from .lexicon import Lexicon

logger = logging.getLogger(__name__)

TIE_BREAK_RULE = "count-desc,pair-codepoint-asc"


@dataclass(frozen=True)
class MergeRule:
    """One learned merge; rank 0 is the first rule applied."""

    left: str
    right: str
    rank: int

    @property
    def token(self) -> str:
        return self.left + self.right


@dataclass(frozen=True)
class TrainerConfig:
    target_vocab_size: int
    mode: SegmentationMode = SegmentationMode.SCALAR

    def __post_init__(self):
        if self.target_vocab_size < 1:
            raise ValueError("target_vocab_size must be >= 1")


@dataclass(frozen=True)
class BpeModel:
    """Learned vocabulary (sorted inventory, then merge-creation order) plus
    the ordered merge list.  The unk token is reserved for inference and is
    not part of the trained vocabulary."""

    vocab: tuple[str, ...]
    merges: tuple[MergeRule, ...]
    mode: SegmentationMode
    unk_token: str = UNK_TOKEN
    target_vocab_size: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_vocab_set", frozenset(self.vocab))


def count_bigrams(segmented: Mapping[str, tuple[Sequence[str], int]]) -> dict[tuple[str, str], int]:
    """Weighted adjacent-pair counts over segmented words.

    segmented maps each word to (current unit sequence, occurrence count).
    Overlapping occurrences count once per adjacent position; pairs never
    span words.
    """
    counts: dict[tuple[str, str], int] = {}
    for word, (units, freq) in segmented.items():
        if not units:
            raise ValueError(f"word {word!r} has an empty unit sequence")
        for a, b in zip(units, units[1:]):
            counts[(a, b)] = counts.get((a, b), 0) + freq
    return counts


def _segment_table(table: "WordFrequencyTable", mode: SegmentationMode):
    """Flatten the table into id arrays: sorted unit inventory, token id per
    unit, word offsets, and int64 word counts."""
    words = list(table.entries)
    segmented = [segment_word(w, mode) for w in words]
    units = sorted({u for seg in segmented for u in seg})
    unit_ids = {u: i for i, u in enumerate(units)}
    flat = np.fromiter(
        (unit_ids[u] for seg in segmented for u in seg),
        dtype=np.int32,
        count=sum(len(seg) for seg in segmented),
    )
    offsets = np.zeros(len(words) + 1, dtype=np.int64)
    np.cumsum([len(seg) for seg in segmented], out=offsets[1:])
    counts = np.fromiter((table.entries[w] for w in words), dtype=np.int64, count=len(words))
    return units, flat, offsets, counts


def _pair_counts(flat: np.ndarray, offsets: np.ndarray, word_counts: np.ndarray):
    """Weighted counts of adjacent pairs, never crossing word boundaries.

    Returns (pair keys as left*2^32+right, exact int64 counts)."""
    if flat.shape[0] < 2:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    lengths = np.diff(offsets)
    weights = np.repeat(word_counts, lengths)[:-1]
    valid = np.ones(flat.shape[0] - 1, dtype=bool)
    ends = offsets[1:-1] - 1  # last unit of every word but the final one
    valid[ends] = False
    if not valid.any():
        return np.empty(0, np.int64), np.empty(0, np.int64)
    keys = (flat[:-1].astype(np.int64) << 32) | flat[1:].astype(np.int64)
    keys = keys[valid]
    uniq, inverse = np.unique(keys, return_inverse=True)
    counts = np.zeros(uniq.shape[0], dtype=np.int64)
    np.add.at(counts, inverse, weights[valid])
    return uniq, counts


def train_bpe(table: "WordFrequencyTable", cfg: TrainerConfig) -> BpeModel:
    """Learn merges until the vocabulary reaches cfg.target_vocab_size.

    If pairs run out first, training stops early with the achieved size (a
    report, not an error).  The returned vocabulary never includes the unk
    token.
    """
    if not table.entries:
        raise ValueError("cannot train on an empty word table")
    units, flat, offsets, word_counts = _segment_table(table, cfg.mode)
    tokens: list[str] = list(units)
    token_id = {t: i for i, t in enumerate(tokens)}
    vocab: list[str] = list(units)
    merges: list[MergeRule] = []

    while len(vocab) < cfg.target_vocab_size:
        keys, counts = _pair_counts(flat, offsets, word_counts)
        if keys.shape[0] == 0:
            logger.info("pairs exhausted after %d merges; achieved vocab %d < target %d",
                        len(merges), len(vocab), cfg.target_vocab_size)
            break
        top = int(counts.max())
        candidates = keys[counts == top]
        left_id, right_id = min(
            ((int(k) >> 32, int(k) & 0xFFFFFFFF) for k in candidates),
            key=lambda p: (tokens[p[0]], tokens[p[1]]),
        )
        left, right = tokens[left_id], tokens[right_id]
        new_token = left + right
        if new_token in token_id:
            # Re-derived spelling of an existing token: vocabulary is a set,
            # so only the segmentations change.
            new_id = token_id[new_token]
        else:
            new_id = len(tokens)
            tokens.append(new_token)
            token_id[new_token] = new_id
            vocab.append(new_token)
        merges.append(MergeRule(left=left, right=right, rank=len(merges)))
        flat, offsets = kernels.merge_pass(flat, offsets, np.int32(left_id),
                                           np.int32(right_id), np.int32(new_id))

    return BpeModel(vocab=tuple(vocab), merges=tuple(merges), mode=cfg.mode,
                    target_vocab_size=cfg.target_vocab_size)


def encode_word(model: BpeModel, word: str) -> list[str]:
    """Tokenize one word by replaying the merge list in rank order.

    Each rule rewrites adjacent (left, right) pairs left to right without
    overlap, mirroring the training-time replacement, so training words
    reproduce their final training segmentations.  Unknown character units
    come out as the unk token.
    """
    parts = segment_word(word, model.mode)
    present = set(parts)
    for rule in model.merges:
        if rule.left not in present or rule.right not in present:
            continue
        merged: list[str] = []
        i = 0
        n = len(parts)
        while i < n:
            if i + 1 < n and parts[i] == rule.left and parts[i + 1] == rule.right:
                merged.append(rule.token)
                i += 2
            else:
                merged.append(parts[i])
                i += 1
        parts = merged
        present = set(parts)
    vocab_set = model._vocab_set
    return [p if p in vocab_set else model.unk_token for p in parts]


@dataclass(frozen=True)
class DecodedText:
    """decode() output; lossy marks that an unk token was present."""

    text: str
    lossy: bool


def decode(tokens: Sequence[str], unk_token: str = UNK_TOKEN) -> DecodedText:
    """Concatenate tokens back into a word; inverse of encode_word when no
    unit was unknown."""
    if not tokens:
        raise ValueError("cannot decode an empty token sequence")
    lossy = unk_token in tokens
    if lossy:
        logger.warning("decoding a token sequence containing %s is lossy", unk_token)
    return DecodedText(text="".join(tokens), lossy=lossy)


def build_bpe_lexicon(model: BpeModel, table: "WordFrequencyTable") -> "Lexicon":
    """Encode every table word with the model."""
    from .lexicon import Lexicon, ModelKind

    if not table.entries:
        raise ValueError("cannot build a lexicon from an empty word table")
    entries = {word: tuple(encode_word(model, word)) for word in table.entries}
    return Lexicon(entries=entries, model_kind=ModelKind.BPE, mode=model.mode)
