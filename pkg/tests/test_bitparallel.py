import itertools

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from circmatch._vectordp import min_prefix_distances
from circmatch.bitparallel import min_start_distances, score_stream
from circmatch.editcore import full_edit_distance


def dp_scores(p: bytes, t: bytes, free_start: bool) -> list[int]:
    m, n = len(p), len(t)
    rows = [[0] * (n + 1) if free_start else list(range(n + 1))]
    for i in range(1, m + 1):
        row = [i] * (n + 1)
        for j in range(1, n + 1):
            row[j] = min(
                rows[i - 1][j - 1] + (p[i - 1] != t[j - 1]),
                rows[i - 1][j] + 1,
                row[j - 1] + 1,
            )
        rows.append(row)
    return rows[m]


def test_exhaustive_small_binary():
    for m in range(1, 5):
        for n in range(0, 5):
            for p in itertools.product(b"ab", repeat=m):
                for t in itertools.product(b"ab", repeat=n):
                    pb, tb = bytes(p), bytes(t)
                    for free in (True, False):
                        assert score_stream(pb, tb, free) == dp_scores(pb, tb, free)


@settings(max_examples=250)
@given(
    st.binary(min_size=1, max_size=70).map(lambda b: bytes(ch % 3 + 97 for ch in b)),
    st.binary(min_size=0, max_size=90).map(lambda b: bytes(ch % 3 + 97 for ch in b)),
    st.booleans(),
)
def test_random_vs_dp(p, t, free):
    assert score_stream(p, t, free) == dp_scores(p, t, free)


def test_min_start_distances_definition():
    # mins[p] is the best distance to any factor starting at p
    p, t = b"abca", b"xabcaycab"
    mins = min_start_distances(p, t, len(t))
    for s in range(len(t)):
        want = min(
            full_edit_distance(p, t[s:e]).distance for e in range(s, len(t) + 1)
        )
        assert mins[s] == want


@settings(max_examples=150, deadline=None)
@given(
    st.binary(min_size=1, max_size=12).map(lambda b: bytes(ch % 2 + 97 for ch in b)),
    st.binary(min_size=1, max_size=24).map(lambda b: bytes(ch % 2 + 97 for ch in b)),
    st.integers(0, 5),
)
def test_vector_kernel_vs_dp(p, t, k):
    if k >= len(p):
        k = len(p) - 1
    rots = [p[r:] + p[:r] for r in range(len(p))]
    pat = np.array([list(r) for r in rots], dtype=np.uint8)
    dmin, lmin = min_prefix_distances(pat, np.frombuffer(t, dtype=np.uint8), k, len(t))
    for ri, rho in enumerate(rots):
        for s in range(len(t)):
            row = full_edit_distance(rho, t[s:]).last_row()
            best = None
            for j, v in enumerate(row):
                if v <= k and (best is None or (v, j) < best):
                    best = (v, j)
            if best is None:
                assert dmin[ri, s] > k
            else:
                assert (int(dmin[ri, s]), int(lmin[ri, s])) == best
