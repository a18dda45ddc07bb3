"""Extended grapheme cluster segmentation (UAX #29 core rules).

No third-party segmenter is required: cluster-break classes are derived from
``unicodedata`` general categories plus the small exception tables below
(Prepend, the spacing marks that extend rather than break, the Mc characters
excluded from SpacingMark, and the Extended_Pictographic ranges needed for
emoji ZWJ sequences).  Rules GB1-GB13 are implemented; the newer
Indic-conjunct amendment is not, so a virama starts a new cluster boundary
after its consonant (e.g. Bengali KA+VIRAMA+TA splits into two clusters,
while KA+vowel sign stays one).
"""

from __future__ import annotations

import bisect
import unicodedata

# Grapheme_Cluster_Break classes.
_OTHER = 0
_CR = 1
_LF = 2
_CONTROL = 3
_EXTEND = 4
_ZWJ = 5
_RI = 6
_PREPEND = 7
_SPACINGMARK = 8
_L = 9
_V = 10
_T = 11
_LV = 12
_LVT = 13

_PREPEND_RANGES = (
    (0x0600, 0x0605), (0x06DD, 0x06DD), (0x070F, 0x070F), (0x0890, 0x0891),
    (0x08E2, 0x08E2), (0x0D4E, 0x0D4E), (0x110BD, 0x110BD), (0x110CD, 0x110CD),
    (0x111C2, 0x111C3), (0x1193F, 0x1193F), (0x11941, 0x11941),
    (0x11A3A, 0x11A3A), (0x11A84, 0x11A89), (0x11D46, 0x11D46),
    (0x11F02, 0x11F02),
)

# Characters with Grapheme_Cluster_Break=Extend beyond general categories
# Mn/Me: dependent vowel parts and length marks of Indic scripts, ZWNJ,
# Hangul tone marks, halfwidth kana voicing marks, musical combining stems,
# and tag characters.
_OTHER_EXTEND_RANGES = (
    (0x09BE, 0x09BE), (0x09D7, 0x09D7), (0x0B3E, 0x0B3E), (0x0B57, 0x0B57),
    (0x0BBE, 0x0BBE), (0x0BD7, 0x0BD7), (0x0CC2, 0x0CC2), (0x0CD5, 0x0CD6),
    (0x0D3E, 0x0D3E), (0x0D57, 0x0D57), (0x0DCF, 0x0DCF), (0x0DDF, 0x0DDF),
    (0x1B35, 0x1B35), (0x200C, 0x200C), (0x302E, 0x302F), (0xFF9E, 0xFF9F),
    (0x1133E, 0x1133E), (0x11357, 0x11357), (0x114B0, 0x114B0),
    (0x114BD, 0x114BD), (0x115AF, 0x115AF), (0x11930, 0x11930),
    (0x1D165, 0x1D165), (0x1D16E, 0x1D172), (0xE0020, 0xE007F),
)

# General category Mc but Grapheme_Cluster_Break=Other.
_SPACINGMARK_EXCLUDE_RANGES = (
    (0x102B, 0x102C), (0x1038, 0x1038), (0x1062, 0x1064), (0x1067, 0x106D),
    (0x1083, 0x1083), (0x1087, 0x108C), (0x108F, 0x108F), (0x109A, 0x109C),
    (0x1A61, 0x1A61), (0x1A63, 0x1A64), (0xAA7B, 0xAA7B), (0xAA7D, 0xAA7D),
    (0x11720, 0x11721),
)

# Extended_Pictographic, condensed to ranges (covers the emoji blocks and the
# reserved ranges the property claims for future emoji).
_EXT_PICT_RANGES = (
    (0x00A9, 0x00A9), (0x00AE, 0x00AE), (0x203C, 0x203C), (0x2049, 0x2049),
    (0x2122, 0x2122), (0x2139, 0x2139), (0x2194, 0x2199), (0x21A9, 0x21AA),
    (0x231A, 0x231B), (0x2328, 0x2328), (0x2388, 0x2388), (0x23CF, 0x23CF),
    (0x23E9, 0x23F3), (0x23F8, 0x23FA), (0x24C2, 0x24C2), (0x25AA, 0x25AB),
    (0x25B6, 0x25B6), (0x25C0, 0x25C0), (0x25FB, 0x25FE), (0x2600, 0x2605),
    (0x2607, 0x2612), (0x2614, 0x2685), (0x2690, 0x2705), (0x2708, 0x2712),
    (0x2714, 0x2714), (0x2716, 0x2716), (0x271D, 0x271D), (0x2721, 0x2721),
    (0x2728, 0x2728), (0x2733, 0x2734), (0x2744, 0x2744), (0x2747, 0x2747),
    (0x274C, 0x274C), (0x274E, 0x274E), (0x2753, 0x2755), (0x2757, 0x2757),
    (0x2763, 0x2767), (0x2795, 0x2797), (0x27A1, 0x27A1), (0x27B0, 0x27B0),
    (0x27BF, 0x27BF), (0x2934, 0x2935), (0x2B05, 0x2B07), (0x2B1B, 0x2B1C),
    (0x2B50, 0x2B50), (0x2B55, 0x2B55), (0x3030, 0x3030), (0x303D, 0x303D),
    (0x3297, 0x3297), (0x3299, 0x3299), (0x1F000, 0x1F0FF), (0x1F10D, 0x1F10F),
    (0x1F12F, 0x1F12F), (0x1F16C, 0x1F171), (0x1F17E, 0x1F17F),
    (0x1F18E, 0x1F18E), (0x1F191, 0x1F19A), (0x1F1AD, 0x1F1E5),
    (0x1F201, 0x1F20F), (0x1F21A, 0x1F21A), (0x1F22F, 0x1F22F),
    (0x1F232, 0x1F23A), (0x1F23C, 0x1F23F), (0x1F249, 0x1F3FA),
    (0x1F400, 0x1F53D), (0x1F546, 0x1F64F), (0x1F680, 0x1F6FF),
    (0x1F774, 0x1F77F), (0x1F7D5, 0x1F7FF), (0x1F80C, 0x1F80F),
    (0x1F848, 0x1F84F), (0x1F85A, 0x1F85F), (0x1F888, 0x1F88F),
    (0x1F8AE, 0x1F8FF), (0x1F90C, 0x1F93A), (0x1F93C, 0x1F945),
    (0x1F947, 0x1FAFF), (0x1FC00, 0x1FFFD),
)


def _compile_ranges(ranges):
    starts = [r[0] for r in ranges]
    ends = [r[1] for r in ranges]
    return starts, ends


_PREPEND = _compile_ranges(_PREPEND_RANGES)
_OTHER_EXTEND = _compile_ranges(_OTHER_EXTEND_RANGES)
_SM_EXCLUDE = _compile_ranges(_SPACINGMARK_EXCLUDE_RANGES)
_EXT_PICT = _compile_ranges(_EXT_PICT_RANGES)


def _in_ranges(compiled, cp: int) -> bool:
    starts, ends = compiled
    idx = bisect.bisect_right(starts, cp) - 1
    return idx >= 0 and cp <= ends[idx]


def is_extended_pictographic(cp: int) -> bool:
    return _in_ranges(_EXT_PICT, cp)


def _gcb_class(cp: int) -> int:
    if cp == 0x0D:
        return _CR
    if cp == 0x0A:
        return _LF
    if cp == 0x200D:
        return _ZWJ
    if 0x1F1E6 <= cp <= 0x1F1FF:
        return _RI
    if 0x1100 <= cp <= 0x115F or 0xA960 <= cp <= 0xA97C:
        return _L
    if 0x1160 <= cp <= 0x11A7 or 0xD7B0 <= cp <= 0xD7C6:
        return _V
    if 0x11A8 <= cp <= 0x11FF or 0xD7CB <= cp <= 0xD7FB:
        return _T
    if 0xAC00 <= cp <= 0xD7A3:
        return _LV if (cp - 0xAC00) % 28 == 0 else _LVT
    if _in_ranges(_OTHER_EXTEND, cp):
        return _EXTEND
    if _in_ranges(_PREPEND, cp):
        return _PREPEND
    if cp == 0x0E33 or cp == 0x0EB3:
        return _SPACINGMARK
    cat = unicodedata.category(chr(cp))
    if cat in ("Mn", "Me"):
        return _EXTEND
    if cat == "Mc":
        return _OTHER if _in_ranges(_SM_EXCLUDE, cp) else _SPACINGMARK
    if cat in ("Cc", "Cf", "Zl", "Zp", "Cs"):
        return _CONTROL
    return _OTHER


def _breaks_between(prev: int, cur: int, ri_run: int, gb11_armed: bool) -> bool:
    """Break decision for one adjacent code point pair."""
    if prev == _CR and cur == _LF:                       # GB3
        return False
    if prev in (_CONTROL, _CR, _LF):                     # GB4
        return True
    if cur in (_CONTROL, _CR, _LF):                      # GB5
        return True
    if prev == _L and cur in (_L, _V, _LV, _LVT):        # GB6
        return False
    if prev in (_LV, _V) and cur in (_V, _T):            # GB7
        return False
    if prev in (_LVT, _T) and cur == _T:                 # GB8
        return False
    if cur in (_EXTEND, _ZWJ):                           # GB9
        return False
    if cur == _SPACINGMARK:                              # GB9a
        return False
    if prev == _PREPEND:                                 # GB9b
        return False
    if gb11_armed:                                       # GB11
        return False
    if prev == _RI and cur == _RI and ri_run % 2 == 1:   # GB12/GB13
        return False
    return True                                          # GB999


def grapheme_clusters(text: str) -> list[str]:
    """Split text into extended grapheme clusters; concatenation is identity."""
    if not text:
        return []
    clusters: list[str] = []
    start = 0
    prev_cp = ord(text[0])
    prev_cls = _gcb_class(prev_cp)
    ri_run = 1 if prev_cls == _RI else 0
    # ep_chain: the consumed prefix ends with ExtPict Extend*; armed once a
    # ZWJ follows that chain (GB11 lookbehind state).
    ep_chain = is_extended_pictographic(prev_cp)
    ep_chain_before_zwj = False
    for i in range(1, len(text)):
        cp = ord(text[i])
        cls = _gcb_class(cp)
        gb11_armed = (prev_cls == _ZWJ and ep_chain_before_zwj
                      and is_extended_pictographic(cp))
        if _breaks_between(prev_cls, cls, ri_run, gb11_armed):
            clusters.append(text[start:i])
            start = i
        ri_run = ri_run + 1 if cls == _RI else 0
        ep_chain_before_zwj = ep_chain if cls == _ZWJ else False
        if is_extended_pictographic(cp):
            ep_chain = True
        elif cls == _EXTEND and ep_chain:
            pass  # chain survives Extend
        else:
            ep_chain = False
        prev_cls = cls
    clusters.append(text[start:])
    return clusters


def grapheme_length(text: str) -> int:
    """Number of extended grapheme clusters in text."""
    return len(grapheme_clusters(text))
