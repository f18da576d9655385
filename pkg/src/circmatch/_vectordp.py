"""Vectorized banded edit distance for many patterns and text positions.

For a batch of equal-length patterns (typically all rotations of one
pattern), the band of each pattern-vs-suffix matrix is advanced row by
row simultaneously for every candidate start: the state is one array per
band offset holding a (pattern, start) matrix of cell values.  Values
above the threshold are clamped, and the pass aborts once every tracked
cell exceeds the threshold, which on random text happens a couple of
rows past the band width.
"""

from __future__ import annotations

import numpy as np

_BIG = np.int16(4096)


def min_prefix_distances(
    patterns: np.ndarray, text: np.ndarray, k: int, starts: int
) -> tuple[np.ndarray, np.ndarray]:
    """For each pattern row and each start p in [0, starts): the minimum
    over L of the edit distance to text[p:p+L], and the smallest such L
    among the minima.

    patterns has shape (R, m).  Returns (R, starts) arrays; distances
    above k come back as a value > k, callers test <= k.  Prefixes are
    clipped at the end of `text`.
    """
    if patterns.ndim == 1:
        patterns = patterns[None, :]
    nrot, m = patterns.shape
    n = len(text)
    if starts <= 0 or nrot == 0:
        return (
            np.empty((nrot, 0), dtype=np.int16),
            np.empty((nrot, 0), dtype=np.int64),
        )
    width = 2 * k + 1
    pad = np.full(m + k + 2, 256, dtype=np.int16)
    tp = np.concatenate([text.astype(np.int16), pad])
    pat = patterns.astype(np.int16)
    band: list[np.ndarray] = []
    for b in range(-k, k + 1):
        fill = b if b >= 0 else _BIG
        band.append(np.full((nrot, starts), fill, dtype=np.int16))
    dead_check_from = k + 2
    dead = False
    for r in range(1, m + 1):
        pr = pat[:, r - 1 : r]  # (R, 1), broadcasts against the text slice
        new: list[np.ndarray] = []
        for bi, b in enumerate(range(-k, k + 1)):
            j = r + b
            if j < 0:
                new.append(np.full((nrot, starts), _BIG, dtype=np.int16))
                continue
            if j >= 1:
                lo = r - 1 + b
                cell = band[bi] + (tp[lo : lo + starts][None, :] != pr)
            else:
                cell = np.full((nrot, starts), _BIG, dtype=np.int16)
            if bi + 1 < width:
                np.minimum(cell, band[bi + 1] + 1, out=cell)
            if bi > 0 and j >= 1:
                np.minimum(cell, new[bi - 1] + 1, out=cell)
            np.minimum(cell, _BIG, out=cell)
            new.append(cell)
        band = new
        if r >= dead_check_from and r < m and (r - dead_check_from) % 4 == 0:
            if int(np.min(np.stack(band))) > k:
                dead = True
                break
    if dead:
        return (
            np.full((nrot, starts), _BIG, dtype=np.int16),
            np.full((nrot, starts), m, dtype=np.int64),
        )
    stack = np.stack(band)  # (width, R, starts)
    # ends beyond the text are not prefixes of anything real
    for bi, b in enumerate(range(-k, k + 1)):
        first_bad = max(0, n - m - b + 1)
        if first_bad < starts:
            stack[bi, :, first_bad:] = _BIG
    dmin = stack.min(axis=0)
    barg = stack.argmin(axis=0)  # first minimum: smallest offset, shortest prefix
    lmin = m + (barg.astype(np.int64) - k)
    return dmin, lmin
