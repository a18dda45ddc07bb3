"""Hot numeric inner loops, JIT-compiled with numba when available.

Every kernel exists in two flavours built from the same source function:
the numba ``@njit`` build and the plain interpreted build operating on the
same numpy arrays.  The active flavour is chosen once at import time; set
``SUBTOK_NO_NUMBA=1`` to force the interpreted fallback (or leave numba
uninstalled).  ``benchmarks/bench_kernels.py`` times the two side by side.

Kernels deliberately avoid strings: callers map tokens and symbols to
integer ids.  All floating-point accumulation along a segmentation path
runs right-to-left (suffix first) so that dynamic programming and
brute-force enumeration of the same path produce bit-identical scores.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _env_disabled() -> bool:
    return os.environ.get("SUBTOK_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}


NUMBA_ENABLED = numba is not None and not _env_disabled()


# ---------------------------------------------------------------------------
# kernel sources
# ---------------------------------------------------------------------------

def _levenshtein(ref, hyp):
    """Unit-cost edit distance with a deterministic backtrace.

    ref, hyp: int32 arrays of symbol ids.
    Returns (distance, substitutions, insertions, deletions); the split is
    taken from the alignment preferring substitution over deletion over
    insertion at every step of the backtrace.
    """
    m = ref.shape[0]
    n = hyp.shape[0]
    dist = np.empty((m + 1, n + 1), np.int64)
    for i in range(m + 1):
        dist[i, 0] = i
    for j in range(1, n + 1):
        dist[0, j] = j
    for i in range(1, m + 1):
        r = ref[i - 1]
        for j in range(1, n + 1):
            cost = 0 if r == hyp[j - 1] else 1
            best = dist[i - 1, j - 1] + cost
            up = dist[i - 1, j] + 1
            if up < best:
                best = up
            left = dist[i, j - 1] + 1
            if left < best:
                best = left
            dist[i, j] = best

    i = m
    j = n
    nsub = 0
    nins = 0
    ndel = 0
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            cost = 0 if ref[i - 1] == hyp[j - 1] else 1
            if dist[i, j] == dist[i - 1, j - 1] + cost:
                nsub += cost
                i -= 1
                j -= 1
                continue
        if i > 0 and dist[i, j] == dist[i - 1, j] + 1:
            ndel += 1
            i -= 1
            continue
        nins += 1
        j -= 1
    return dist[m, n], nsub, nins, ndel


def _word_viterbi(span_tok, n_pos, max_len, logp_table, unk_logp, banned, shift, g_score, g_ntok):
    """Backward Viterbi tables for one word lattice.

    span_tok: int32 array of length n_pos * max_len; entry (i, L-1) holds the
    vocabulary id of the token spanning units [i, i+L), or -1 when that span
    is not in the vocabulary.  A -1 at L == 1 stands for the unknown-unit
    edge, scored at unk_logp (the renormalization shift never applies to it).
    banned: token id excluded from the lattice (-1 for none).
    shift: added to every real edge log-probability.

    Fills g_score[i] / g_ntok[i] with the best achievable suffix score from
    unit position i and its token count (fewest tokens among score ties).
    """
    g_score[n_pos] = 0.0
    g_ntok[n_pos] = 0
    for i in range(n_pos - 1, -1, -1):
        base = i * max_len
        lim = n_pos - i
        if max_len < lim:
            lim = max_len
        best_s = 0.0
        best_n = 0
        found = False
        for length in range(1, lim + 1):
            tok = span_tok[base + length - 1]
            if tok == banned:
                continue
            if tok < 0:
                if length != 1:
                    continue
                s = unk_logp + g_score[i + 1]
                k = 1 + g_ntok[i + 1]
            else:
                s = (logp_table[tok] + shift) + g_score[i + length]
                k = 1 + g_ntok[i + length]
            if (not found) or s > best_s or (s == best_s and k < best_n):
                best_s = s
                best_n = k
                found = True
        g_score[i] = best_s
        g_ntok[i] = best_n


def _corpus_viterbi(span_tok, word_row, word_npos, word_counts, max_len,
                    logp_table, unk_logp, banned, shift):
    """Frequency-weighted best-path totals over a whole corpus lattice.

    word_row[w] is the first position row of word w inside span_tok (rows of
    max_len entries, as in _word_viterbi).  Returns
    (sum_w count_w * best_score_w, sum_w count_w * best_token_count_w).
    """
    total_score = 0.0
    total_ntok = 0
    n_words = word_npos.shape[0]
    for w in range(n_words):
        n_pos = word_npos[w]
        row0 = word_row[w]
        g_score = np.empty(n_pos + 1, np.float64)
        g_ntok = np.empty(n_pos + 1, np.int64)
        g_score[n_pos] = 0.0
        g_ntok[n_pos] = 0
        for i in range(n_pos - 1, -1, -1):
            base = (row0 + i) * max_len
            lim = n_pos - i
            if max_len < lim:
                lim = max_len
            best_s = 0.0
            best_n = 0
            found = False
            for length in range(1, lim + 1):
                tok = span_tok[base + length - 1]
                if tok == banned:
                    continue
                if tok < 0:
                    if length != 1:
                        continue
                    s = unk_logp + g_score[i + 1]
                    k = 1 + g_ntok[i + 1]
                else:
                    s = (logp_table[tok] + shift) + g_score[i + length]
                    k = 1 + g_ntok[i + length]
                if (not found) or s > best_s or (s == best_s and k < best_n):
                    best_s = s
                    best_n = k
                    found = True
            g_score[i] = best_s
            g_ntok[i] = best_n
        total_score += word_counts[w] * g_score[0]
        total_ntok += word_counts[w] * g_ntok[0]
    return total_score, total_ntok


def _merge_pass(flat, offsets, left, right, new_id):
    """One merge-rule pass over flattened word segmentations.

    flat: int32 token ids of all words back to back; offsets: int64 word
    boundaries (len = n_words + 1).  Replaces adjacent (left, right) pairs by
    new_id, scanning each word left to right without overlap.  Returns the
    compacted (flat, offsets) pair.
    """
    n_words = offsets.shape[0] - 1
    out = np.empty(flat.shape[0], flat.dtype)
    new_off = np.empty_like(offsets)
    o = 0
    for w in range(n_words):
        i = offsets[w]
        end = offsets[w + 1]
        new_off[w] = o
        while i < end:
            if i + 1 < end and flat[i] == left and flat[i + 1] == right:
                out[o] = new_id
                i += 2
            else:
                out[o] = flat[i]
                i += 1
            o += 1
    new_off[n_words] = o
    return out[:o], new_off


_SOURCES = {
    "levenshtein": _levenshtein,
    "word_viterbi": _word_viterbi,
    "corpus_viterbi": _corpus_viterbi,
    "merge_pass": _merge_pass,
}

if numba is not None:
    _JITTED = {name: numba.njit(cache=True)(fn) for name, fn in _SOURCES.items()}
else:  # pragma: no cover
    _JITTED = {}


def get_impl(name: str, jit: bool):
    """Fetch one flavour of a kernel by name (for tests and benchmarks)."""
    if jit:
        if numba is None:  # pragma: no cover
            raise RuntimeError("numba is not installed; only the fallback path is available")
        return _JITTED[name]
    return _SOURCES[name]


_ACTIVE = _JITTED if NUMBA_ENABLED else _SOURCES

levenshtein = _ACTIVE["levenshtein"]
word_viterbi = _ACTIVE["word_viterbi"]
corpus_viterbi = _ACTIVE["corpus_viterbi"]
merge_pass = _ACTIVE["merge_pass"]


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "python"
