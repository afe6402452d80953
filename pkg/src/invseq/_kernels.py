"""Batch kernels for pattern and relation-triple detection.

Every kernel works on a 2-D int64 array of words (one word per row) and has two
implementations: a numba ``@njit`` one and a pure-numpy one.  The active backend
is chosen once at import; set ``INVSEQ_DISABLE_NUMBA=1`` to force numpy.

A length-k occurrence is encoded as ``sum(rank_i * k**(k-1-i))`` where rank_i
is the number of distinct smaller letters in the occurrence, so ``table`` arrays
of size k**k mark the codes of the patterns being searched for.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional extra
    numba = None

__all__ = [
    "BACKEND", "HAVE_NUMBA", "pattern_code", "pattern_hits", "occurrence_table",
    "triple_hits", "pattern_hits_numpy", "occurrence_table_numpy",
    "triple_hits_numpy",
]

HAVE_NUMBA = numba is not None
_disabled = os.environ.get("INVSEQ_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")
BACKEND = "numba" if HAVE_NUMBA and not _disabled else "numpy"


def pattern_code(letters) -> int:
    """Code of a single word, matching what the kernels compute."""
    k = len(letters)
    code = 0
    for a in range(k):
        code = code * k + len({x for x in letters if x < letters[a]})
    return code


# -- numpy path ------------------------------------------------------------

def _codes_numpy(sub: np.ndarray) -> np.ndarray:
    n, k = sub.shape
    first = np.ones((n, k), dtype=bool)
    for b in range(1, k):
        for c in range(b):
            first[:, b] &= sub[:, b] != sub[:, c]
    code = np.zeros(n, dtype=np.int64)
    for a in range(k):
        rank = np.zeros(n, dtype=np.int64)
        for b in range(k):
            rank += (sub[:, b] < sub[:, a]) & first[:, b]
        code = code * k + rank
    return code


def pattern_hits_numpy(words: np.ndarray, combos: np.ndarray, table: np.ndarray) -> np.ndarray:
    hit = np.zeros(words.shape[0], dtype=bool)
    for combo in combos:
        hit |= table[_codes_numpy(words[:, combo])]
    return hit


def occurrence_table_numpy(words: np.ndarray, combos: np.ndarray) -> np.ndarray:
    k = combos.shape[1]
    out = np.zeros((words.shape[0], k ** k), dtype=bool)
    rows = np.arange(words.shape[0])
    for combo in combos:
        out[rows, _codes_numpy(words[:, combo])] = True
    return out


def _rel_numpy(code: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if code == 0:
        return a < b
    if code == 1:
        return a > b
    if code == 2:
        return a <= b
    if code == 3:
        return a >= b
    if code == 4:
        return a == b
    if code == 5:
        return a != b
    return np.ones(a.shape, dtype=bool)


def triple_hits_numpy(words: np.ndarray, codes: np.ndarray, last_only: bool) -> np.ndarray:
    n, m = words.shape
    hit = np.zeros(n, dtype=bool)
    if m < 3:
        return hit
    r1, r2, r3 = (int(c) for c in codes)
    ks = [m - 1] if last_only else range(2, m)
    for k in ks:
        ek = words[:, k]
        for j in range(1, k):
            ej = words[:, j]
            mid = _rel_numpy(r2, ej, ek)
            if not mid.any():
                continue
            for i in range(j):
                ei = words[:, i]
                hit |= mid & _rel_numpy(r1, ei, ej) & _rel_numpy(r3, ei, ek)
    return hit


# -- numba path ------------------------------------------------------------

if HAVE_NUMBA:
    @numba.njit(cache=True)
    def _code_nb(row, combo):
        k = combo.shape[0]
        code = 0
        for a in range(k):
            x = row[combo[a]]
            rank = 0
            for b in range(k):
                y = row[combo[b]]
                if y < x:
                    dup = False
                    for c in range(b):
                        if row[combo[c]] == y:
                            dup = True
                            break
                    if not dup:
                        rank += 1
            code = code * k + rank
        return code

    @numba.njit(cache=True)
    def _pattern_hits_nb(words, combos, table):
        n = words.shape[0]
        hit = np.zeros(n, dtype=np.bool_)
        for r in range(n):
            row = words[r]
            for c in range(combos.shape[0]):
                if table[_code_nb(row, combos[c])]:
                    hit[r] = True
                    break
        return hit

    @numba.njit(cache=True)
    def _occurrence_table_nb(words, combos):
        k = combos.shape[1]
        out = np.zeros((words.shape[0], k ** k), dtype=np.bool_)
        for r in range(words.shape[0]):
            row = words[r]
            for c in range(combos.shape[0]):
                out[r, _code_nb(row, combos[c])] = True
        return out

    @numba.njit(cache=True)
    def _rel_nb(code, a, b):
        if code == 0:
            return a < b
        if code == 1:
            return a > b
        if code == 2:
            return a <= b
        if code == 3:
            return a >= b
        if code == 4:
            return a == b
        if code == 5:
            return a != b
        return True

    @numba.njit(cache=True)
    def _triple_hits_nb(words, codes, last_only):
        n, m = words.shape
        hit = np.zeros(n, dtype=np.bool_)
        r1, r2, r3 = codes[0], codes[1], codes[2]
        k_start = m - 1 if last_only else 2
        for r in range(n):
            row = words[r]
            found = False
            for k in range(k_start, m):
                for j in range(1, k):
                    if not _rel_nb(r2, row[j], row[k]):
                        continue
                    for i in range(j):
                        if _rel_nb(r1, row[i], row[j]) and _rel_nb(r3, row[i], row[k]):
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            hit[r] = found
        return hit


def _prep(words: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(words, dtype=np.int64)


def pattern_hits(words, combos, table, backend: str | None = None) -> np.ndarray:
    """Rows of ``words`` having an occurrence at some row of ``combos`` whose code is in ``table``."""
    words = _prep(words)
    combos = np.ascontiguousarray(combos, dtype=np.int64)
    if words.shape[0] == 0 or combos.shape[0] == 0:
        return np.zeros(words.shape[0], dtype=bool)
    if (backend or BACKEND) == "numba":
        return _pattern_hits_nb(words, combos, np.asarray(table, dtype=np.bool_))
    return pattern_hits_numpy(words, combos, np.asarray(table, dtype=bool))


def occurrence_table(words, combos, backend: str | None = None) -> np.ndarray:
    """Boolean matrix: row r, column c says word r contains an occurrence with code c."""
    words = _prep(words)
    combos = np.ascontiguousarray(combos, dtype=np.int64)
    if (backend or BACKEND) == "numba" and words.shape[0] and combos.shape[0]:
        return _occurrence_table_nb(words, combos)
    return occurrence_table_numpy(words, combos)


def triple_hits(words, codes, last_only: bool = False, backend: str | None = None) -> np.ndarray:
    """Rows containing i<j<k satisfying the three coded relations; ``last_only`` pins k to the last column."""
    words = _prep(words)
    codes = np.asarray(codes, dtype=np.int64)
    if words.shape[0] == 0 or words.shape[1] < 3:
        return np.zeros(words.shape[0], dtype=bool)
    if (backend or BACKEND) == "numba":
        return _triple_hits_nb(words, codes, last_only)
    return triple_hits_numpy(words, codes, last_only)
