"""Bit-parallel edit distance scanning (Myers/Hyyro bit vectors).

One pass over the text keeps the whole DP column packed in integers, so a
column transition costs a handful of word operations.  Python integers are
arbitrary precision, so patterns longer than the machine word still work,
just proportionally slower.

Two boundary flavours are provided:

  free_start=True   D[0][j] = 0: score(j) is the minimum distance between
                    the pattern and any factor of the text ending at j.
  free_start=False  D[0][j] = j: score(j) is the distance between the
                    pattern and the text prefix of length j.
"""

from __future__ import annotations

from .alphabet import to_bytes


def score_stream(pattern: str | bytes, text: str | bytes, free_start: bool) -> list[int]:
    """Last-row DP values for every text prefix length 0..n."""
    pb, tb = to_bytes(pattern), to_bytes(text)
    m = len(pb)
    if m == 0:
        return [0] * (len(tb) + 1) if free_start else list(range(len(tb) + 1))
    peq = [0] * 256
    bit = 1
    for ch in pb:
        peq[ch] |= bit
        bit <<= 1
    mask_all = (1 << m) - 1
    high = 1 << (m - 1)
    carry0 = 0 if free_start else 1
    vp = mask_all
    vn = 0
    score = m
    out = [m]
    for ch in tb:
        x = peq[ch] | vn
        d0 = (((x & vp) + vp) ^ vp) | x
        hp = vn | (mask_all & ~(d0 | vp))
        hn = vp & d0
        if hp & high:
            score += 1
        elif hn & high:
            score -= 1
        out.append(score)
        hps = ((hp << 1) | carry0) & mask_all
        hns = (hn << 1) & mask_all
        vp = hns | (mask_all & ~(d0 | hps))
        vn = hps & d0
    return out


def min_start_distances(pattern: bytes, window: bytes, limit: int) -> list[int]:
    """For every start position p in the window, the minimum edit distance
    between the pattern and any factor starting at p, for p < limit.

    Computed as one free-start pass over the reversed strings.
    """
    scores = score_stream(pattern[::-1], window[::-1], free_start=True)
    n = len(window)
    return [scores[n - p] for p in range(min(limit, n))]
