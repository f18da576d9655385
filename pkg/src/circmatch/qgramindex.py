"""Q-gram index: minimum edit distance from every q-gram to the short
factors of the doubled pattern.

The doubled pattern x + x[:-1] contains every rotation of x as a factor,
so its factors of length up to 2q are exactly the material any rotation
can align a q-gram against.  The index array M holds, for each of the
sigma^q grams, the minimum edit distance to any such factor (the empty
factor included, so entries never exceed q).  M[code] then lower-bounds
the distance between that gram and anything inside any rotation, which is
what makes discarding windows on summed lookups safe.

The builder walks the complete prefix trie of all grams level by level:
one DP row per trie node against each sliding window of the doubled
pattern, all nodes of a level advanced with vectorized minima.  Window
positions are processed in memory-bounded chunks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alphabet import Alphabet, encode_qgram, enumerate_qgrams, to_bytes
from .editcore import full_edit_distance

MAGIC = b"CIRCIDX1"
DEFAULT_MAX_ENTRIES = 1 << 26
DEFAULT_MAX_WORK = 1 << 29


class IndexBudgetError(MemoryError):
    """Raised when sigma^q does not fit the configured budget."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


def build_doubled(x: str | bytes) -> bytes:
    """x concatenated with x[:-1]; every rotation of x occurs inside it."""
    xb = to_bytes(x)
    if len(xb) < 1:
        raise ValueError("pattern must be non-empty")
    return xb + xb[:-1]


@dataclass
class QGramIndex:
    q: int
    alphabet: Alphabet
    entries: np.ndarray  # uint8, sigma**q values in [0, q]

    def lookup(self, code: int) -> int:
        return int(self.entries[code])

    def __eq__(self, other):
        return (
            isinstance(other, QGramIndex)
            and self.q == other.q
            and self.alphabet == other.alphabet
            and np.array_equal(self.entries, other.entries)
        )

    def to_bytes(self) -> bytes:
        sigma = self.alphabet.size
        return (
            MAGIC
            + bytes([sigma, self.q])
            + self.alphabet.letters
            + self.entries.tobytes()
        )

    def save(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(self.to_bytes())

    @classmethod
    def from_bytes(cls, blob: bytes) -> "QGramIndex":
        if blob[: len(MAGIC)] != MAGIC:
            raise ValueError("not an index file (bad magic)")
        sigma = blob[len(MAGIC)]
        q = blob[len(MAGIC) + 1]
        off = len(MAGIC) + 2
        letters = blob[off : off + sigma]
        off += sigma
        want = sigma**q
        body = blob[off:]
        if len(body) != want:
            raise ValueError(f"index body has {len(body)} entries, expected {want}")
        arr = np.frombuffer(body, dtype=np.uint8).copy()
        return cls(q=q, alphabet=Alphabet(letters), entries=arr)

    @classmethod
    def load(cls, path) -> "QGramIndex":
        with open(path, "rb") as fh:
            return cls.from_bytes(fh.read())


def build_index(
    x: str | bytes,
    q: int,
    a: Alphabet,
    max_entries: int = DEFAULT_MAX_ENTRIES,
    max_chunk_bytes: int = 48 << 20,
) -> QGramIndex:
    """Index of minimum distances from every q-gram to the factors of the
    doubled pattern of length at most 2q.

    Requires 1 <= q < len(x) and sigma^q within the entry budget.
    """
    xb = to_bytes(x)
    m = len(xb)
    if not 1 <= q < m:
        raise ValueError("need 1 <= q < len(pattern)")
    if q > 50:
        raise ValueError("index build supports q up to 50")
    sigma = a.size
    total = sigma**q
    if total > max_entries:
        raise IndexBudgetError(
            f"{sigma}^{q} = {total} index entries exceed the budget of {max_entries}",
            required=total,
        )
    xp = build_doubled(xb)
    width = 2 * q  # window length; every short factor is a window prefix
    n_windows = 2 * m - q  # starts 0 .. 2m-q-1, each window at least q long
    # windows padded to fixed width with an out-of-alphabet marker; padded
    # columns can never undercut the minimum over the real prefixes
    win = np.full((n_windows, width), 256, dtype=np.int16)
    for i in range(n_windows):
        chunk = xp[i : i + width]
        win[i, : len(chunk)] = np.frombuffer(chunk, dtype=np.uint8)
    m_arr = np.full(total, 255, dtype=np.uint8)
    wc = max(1, min(n_windows, max_chunk_bytes // (total * (width + 1))))
    # offset so the running prefix minimum stays non-negative in uint8:
    # scan(j) = min_{j' <= j} cell(j') + (j - j') done as a cumulative
    # minimum of cell(j) + (width - j)
    ramp = np.arange(width, 0, -1, dtype=np.uint8)  # width - j for j = 1..width
    for w0 in range(0, n_windows, wc):
        w1 = min(w0 + wc, n_windows)
        nw = w1 - w0
        mism = [
            (win[w0:w1] != np.int16(letter)).astype(np.uint8) for letter in a.letters
        ]
        rows = np.tile(np.arange(width + 1, dtype=np.uint8), (1, nw, 1))
        for level in range(q):
            parents = rows.shape[0]
            nxt = np.empty((parents * sigma, nw, width + 1), dtype=np.uint8)
            for li in range(sigma):
                child = nxt[li::sigma]
                body = child[:, :, 1:]
                np.minimum(rows[:, :, :-1] + mism[li], rows[:, :, 1:] + 1, out=body)
                child[:, :, 0] = level + 1
                body += ramp
                np.minimum(body[:, :, 0], np.uint8(level + 1 + width), out=body[:, :, 0])
                np.minimum.accumulate(body, axis=2, out=body)
                body -= ramp
            rows = nxt
        best = rows.min(axis=(1, 2))
        np.minimum(m_arr, best, out=m_arr)
    return QGramIndex(q=q, alphabet=a, entries=m_arr)


def brute_force_index(x: str | bytes, q: int, a: Alphabet) -> QGramIndex:
    """Reference index by exhaustive enumeration: for every gram, the full
    DP distance to every factor of the doubled pattern of length 0..2q.

    Desk-scale only (sigma^q <= 4096, len(x) <= 32).
    """
    xb = to_bytes(x)
    m = len(xb)
    if q < 1 or m < 1:
        raise ValueError("need q >= 1 and a non-empty pattern")
    if a.size**q > 4096 or m > 32:
        raise ValueError("brute-force index is limited to sigma^q <= 4096, m <= 32")
    xp = build_doubled(xb)
    factors = {b""}
    for i in range(len(xp)):
        for length in range(1, 2 * q + 1):
            if i + length <= len(xp):
                factors.add(xp[i : i + length])
    factors = sorted(factors)
    entries = np.empty(a.size**q, dtype=np.uint8)
    for gram in enumerate_qgrams(a, q):
        best = q  # the empty factor
        for v in factors:
            d = full_edit_distance(gram, v).distance
            if d < best:
                best = d
                if best == 0:
                    break
        entries[encode_qgram(gram, a)] = best
    return QGramIndex(q=q, alphabet=a, entries=entries)
