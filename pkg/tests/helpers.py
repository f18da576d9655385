"""Shared brute-force references and instance generators for the tests.

Everything here goes through full_edit_distance (the plain quadratic DP)
so the fast engines are always compared against straight-line code.
"""

from __future__ import annotations

import random

from circmatch import Occurrence, dedup_occurrences, full_edit_distance, rotate
from circmatch.verifier import Block


def waves_via_full_dp(x: bytes, y: bytes, k: int) -> dict:
    """{(h, d): (i, j)} lowest-cell entries, read off the full matrix."""
    m, n = len(x), len(y)
    cells = full_edit_distance(x, y).cells
    out = {}
    for d in range(-k, k + 1):
        if d > n or -d > m:
            continue
        i0 = max(0, -d)
        i1 = min(m, n - d)
        for i in range(i0, i1 + 1):
            h = cells[i][i + d]
            if h > k:
                continue
            lowest = i == i1 or cells[i + 1][i + d + 1] == h + 1
            if lowest:
                out[(h, d)] = (i, i + d)
    return out


def brute_block_occurrences(x: bytes, k: int, block: Block) -> list[Occurrence]:
    """Every (start, rotation) in the block's candidate range with the
    minimal (distance, length) pair, straight from the full DP."""
    m = len(x)
    out = []
    limit = min(m - k, len(block.data))
    for p in range(limit):
        suffix = block.data[p:]
        for r in range(m):
            row = full_edit_distance(rotate(x, r), suffix).last_row()
            best = None
            for j, v in enumerate(row):
                if v <= k and (best is None or (v, j) < best):
                    best = (v, j)
            if best is not None:
                out.append(Occurrence(block.text_offset + p, best[1], r, best[0]))
    return dedup_occurrences(out)


def brute_search(t: bytes, x: bytes, k: int) -> list[Occurrence]:
    """Whole-text reference by exhaustive full DP per (start, rotation)."""
    m, n = len(x), len(t)
    out = []
    for p in range(n):
        chunk = t[p : p + m + k]
        for r in range(m):
            row = full_edit_distance(rotate(x, r), chunk).last_row()
            best = None
            for j, v in enumerate(row):
                if v <= k and (best is None or (v, j) < best):
                    best = (v, j)
            if best is not None:
                out.append(Occurrence(p, best[1], r, best[0]))
    return dedup_occurrences(out)


def letters_for(sigma: int) -> bytes:
    return bytes(range(97, 97 + sigma)) if sigma <= 26 else bytes(range(sigma))


def random_string(rng: random.Random, letters: bytes, length: int) -> bytes:
    return bytes(rng.choice(letters) for _ in range(length))


def plant_edited_rotation(
    rng: random.Random, t: bytearray, x: bytes, k: int, letters: bytes
) -> None:
    """Splice a rotation of x with exactly k random edits into t, in place."""
    m, n = len(x), len(t)
    rot = bytearray(rotate(x, rng.randrange(m)))
    for _ in range(k):
        op = rng.choice("ids")
        pos = rng.randrange(max(1, len(rot)))
        if op == "i":
            rot.insert(pos, rng.choice(letters))
        elif op == "d" and len(rot) > 1:
            del rot[pos]
        else:
            rot[pos] = rng.choice(letters)
    pos = rng.randint(0, max(0, n - len(rot)))
    t[pos : pos + len(rot)] = rot
    del t[n:]
