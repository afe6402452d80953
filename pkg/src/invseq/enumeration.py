"""Exhaustive generation, generating trees, triangles and distributions."""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Iterator, Sequence, Union

import numpy as np

from . import _kernels
from .stats import INVSEQ_STATISTICS, PERM_STATISTICS, SUPPORTED_TRIPLES, critical_value
from .words import (
    ClassicalPattern, Pattern, Relation, RelationTriple, VincularPattern,
    avoids_all, violates_triple,
)

__all__ = [
    "AvoidSpec", "UNIVERSES", "gen_inversion_sequences", "gen_permutations",
    "universe_array", "avoider_array", "gen_avoiders", "Distribution",
    "distribution", "Triangle", "catalan_triangle", "cri_tree_triangle",
    "schroder_triangle", "brute_triangle", "baxter_params",
    "baxter_generating_tree", "brute_baxter_params", "baxter_closed_form",
    "is_simsun", "entringer_oracle", "euler_numbers", "large_schroder_numbers",
    "catalan_number", "CATALAN_TRIPLE", "SCHRODER_TRIPLE", "BAXTER_TRIPLE",
    "BAXTER_PATTERNS",
]

AvoidSpec = Union[RelationTriple, Sequence[Pattern], None]
UNIVERSES = ("perm", "invseq")

CATALAN_TRIPLE, SCHRODER_TRIPLE, BAXTER_TRIPLE = SUPPORTED_TRIPLES
BAXTER_PATTERNS = (
    VincularPattern((2, 4, 1, 3), frozenset({2})),
    VincularPattern((3, 1, 4, 2), frozenset({2})),
)


def gen_inversion_sequences(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(i) for i in range(1, n + 1)))


def gen_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def universe_array(n: int, universe: str) -> np.ndarray:
    gen = gen_permutations if universe == "perm" else gen_inversion_sequences
    rows = list(gen(n))
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


# -- batch avoidance ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _combos(m: int, k: int, adjacent: frozenset, last_only: bool) -> np.ndarray:
    if last_only:
        rows = [c + (m - 1,) for c in itertools.combinations(range(m - 1), k - 1)]
    else:
        rows = list(itertools.combinations(range(m), k))
    rows = [c for c in rows if all(c[a] == c[a - 1] + 1 for a in adjacent)]
    return np.array(rows, dtype=np.int64).reshape(-1, k)


def _pattern_groups(patterns: Sequence[Pattern]) -> list[tuple[int, frozenset, np.ndarray]]:
    groups: dict[tuple[int, frozenset], np.ndarray] = {}
    for p in patterns:
        letters = p.base if isinstance(p, VincularPattern) else p.letters
        adjacent = p.adjacent if isinstance(p, VincularPattern) else frozenset()
        k = len(letters)
        table = groups.setdefault((k, adjacent), np.zeros(k ** k, dtype=bool))
        table[_kernels.pattern_code(letters)] = True
    return [(k, adj, table) for (k, adj), table in groups.items()]


def _hits(words: np.ndarray, avoid: AvoidSpec, last_only: bool) -> np.ndarray:
    m = words.shape[1]
    if avoid is None:
        return np.zeros(words.shape[0], dtype=bool)
    if isinstance(avoid, RelationTriple):
        return _kernels.triple_hits(words, avoid.codes, last_only)
    hit = np.zeros(words.shape[0], dtype=bool)
    for k, adjacent, table in _pattern_groups(avoid):
        if k > m:
            continue
        hit |= _kernels.pattern_hits(words, _combos(m, k, adjacent, last_only), table)
    return hit


def _extend(prefixes: np.ndarray, n: int, universe: str) -> np.ndarray:
    rows, m = prefixes.shape
    if universe == "invseq":
        parent = np.repeat(np.arange(rows), m + 1)
        value = np.tile(np.arange(m + 1), rows)
    else:
        free = np.ones((rows, n + 1), dtype=bool)
        free[:, 0] = False
        free[np.arange(rows)[:, None], prefixes] = False
        parent, value = np.nonzero(free)
    return np.column_stack([prefixes[parent], value]).astype(np.int64)


def avoider_array(n: int, avoid: AvoidSpec, universe: str = "invseq", pruned: bool = True) -> np.ndarray:
    """All length-n objects of ``universe`` avoiding ``avoid``, one per row, in lexicographic order.

    The pruned path grows prefixes one letter at a time and drops a prefix as soon
    as an occurrence ending at its last letter appears.  This is sound for
    classical and vincular patterns alike: an occurrence inside a prefix is an
    occurrence in every extension, with the same adjacencies.
    """
    if universe not in UNIVERSES:
        raise ValueError(f"unknown universe {universe!r}")
    if not pruned:
        words = universe_array(n, universe)
        return words[~_hits(words, avoid, last_only=False)]
    words = np.zeros((1, 0), dtype=np.int64)
    for _ in range(n):
        words = _extend(words, n, universe)
        words = words[~_hits(words, avoid, last_only=True)]
    return words


def gen_avoiders(n: int, avoid: AvoidSpec, universe: str = "invseq", pruned: bool = True) -> Iterator[tuple[int, ...]]:
    for row in avoider_array(n, avoid, universe, pruned).tolist():
        yield tuple(row)


def filter_avoiders(n: int, avoid: AvoidSpec, universe: str = "invseq") -> Iterator[tuple[int, ...]]:
    """Reference path: scalar filter over the whole universe, no kernels involved."""
    gen = gen_permutations if universe == "perm" else gen_inversion_sequences
    for w in gen(n):
        if avoid is None:
            yield w
        elif isinstance(avoid, RelationTriple):
            if not violates_triple(w, avoid):
                yield w
        elif avoids_all(w, avoid):
            yield w


# -- distributions -----------------------------------------------------------------

@dataclass
class Distribution:
    """Multiset of statistic tuples; sets appear as sorted tuples."""
    stats: tuple[str, ...]
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "Distribution") -> "Distribution":
        if other.stats != self.stats:
            raise ValueError("cannot merge distributions of different statistics")
        return Distribution(self.stats, self.counts + other.counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.counts == other.counts

    def items(self) -> list[tuple[tuple, int]]:
        return sorted(self.counts.items())

    def marginal(self, index: int) -> dict:
        out: Counter = Counter()
        for key, c in self.counts.items():
            out[key[index]] += c
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "stats": list(self.stats),
            "total": self.total,
            "entries": [{"key": [list(v) if isinstance(v, tuple) else v for v in key], "count": c}
                        for key, c in self.items()],
        }


def statistic(name: str, universe: str) -> Callable:
    table = PERM_STATISTICS if universe == "perm" else INVSEQ_STATISTICS
    try:
        return table[name]
    except KeyError:
        raise KeyError(f"unknown statistic {name!r} for universe {universe!r}") from None


def distribution(objects: Iterable[Sequence[int]], stats: Sequence[Union[str, Callable]],
                 universe: str = "invseq") -> Distribution:
    """Joint distribution of ``stats``; entries may be selector names or callables."""
    fns = [s if callable(s) else statistic(s, universe) for s in stats]
    names = tuple(s if isinstance(s, str) else getattr(s, "__name__", "fn") for s in stats)
    counts: Counter = Counter()
    for w in objects:
        counts[tuple(f(w) for f in fns)] += 1
    return Distribution(names, counts)


# -- triangles ---------------------------------------------------------------------

@dataclass
class Triangle:
    """``rows[n-1][k]`` is the count for length n and last entry k."""
    name: str
    rows: list[list[int]]

    def row(self, n: int) -> list[int]:
        return self.rows[n - 1]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < 1 or n > len(self.rows) or not 0 <= k < n:
            return 0
        return self.rows[n - 1][k]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "count", "row_sum"])
        for n, r in enumerate(self.rows, 1):
            s = sum(r)
            for k, c in enumerate(r):
                writer.writerow([n, k, c, s])
        return buf.getvalue()

    def to_bfile(self) -> str:
        values = itertools.chain.from_iterable(self.rows)
        return "".join(f"{i} {v}\n" for i, v in enumerate(values, 1))

    def to_json(self) -> dict:
        return {"family": self.name, "max_n": len(self.rows), "rows": self.rows,
                "row_sums": self.row_sums()}


def catalan_triangle(N: int) -> Triangle:
    rows: list[list[int]] = []
    for n in range(1, N + 1):
        row = []
        for k in range(n):
            if n == 1:
                row.append(1)
                continue
            left = row[k - 1] if k else 0
            up = rows[-1][k] if k < n - 1 else 0
            row.append(left + up)
        rows.append(row)
    return Triangle("catalan", rows)


def _cri_child(triple: RelationTriple) -> Callable[[int, int, int], int]:
    # child cri after appending k to a sequence with label (cri, last)
    if triple == CATALAN_TRIPLE:
        return lambda cri, last, k: last + 1 if k <= last else cri
    if triple == SCHRODER_TRIPLE:
        return lambda cri, last, k: last if k <= last else cri
    raise ValueError(f"no (cri, last) succession rule for {triple}")


def cri_tree_triangle(triple: RelationTriple, N: int) -> Triangle:
    """Last-entry triangle grown from the critical-value succession rule.

    For both supported triples the entries at or above the critical value form a
    strictly increasing suffix, so (cri, last) is a complete label: children take
    every k in [cri, n], and the child's cri only depends on whether k <= last.
    """
    child = _cri_child(triple)
    level: dict[tuple[int, int], int] = {(0, 0): 1}
    rows = [[1]]
    for n in range(1, N):
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (cri, last), c in level.items():
            for k in range(cri, n + 1):
                nxt[child(cri, last, k), k] += c
        level = nxt
        row = [0] * (n + 1)
        for (_, k), c in level.items():
            row[k] += c
        rows.append(row)
    name = "catalan" if triple == CATALAN_TRIPLE else "schroder"
    return Triangle(name, rows[:N])


def schroder_triangle(N: int) -> Triangle:
    return cri_tree_triangle(SCHRODER_TRIPLE, N)


def brute_triangle(triple: RelationTriple, N: int, name: str = "brute") -> Triangle:
    rows = []
    for n in range(1, N + 1):
        arr = avoider_array(n, triple, "invseq")
        rows.append(np.bincount(arr[:, -1], minlength=n).tolist())
    return Triangle(name, rows)


# -- Baxter ------------------------------------------------------------------------

def baxter_params(e: Sequence[int]) -> tuple[int, int]:
    m = max(e)
    return m + 1 - critical_value(e, BAXTER_TRIPLE), len(e) - m


def _baxter_children(p: int, q: int) -> list[tuple[int, int]]:
    """Child labels in order of increasing appended last entry."""
    return ([(j, q + 1) for j in range(p - 1, 0, -1)] + [(1, q + 1)]
            + [(p + i, q + 1 - i) for i in range(1, q + 1)])


def baxter_generating_tree(N: int) -> tuple[dict[int, dict[tuple[int, int], int]], Triangle]:
    """Counts F[n][(p, q)] and the last-entry triangle for I_n(>=,>=,>), n <= N."""
    F = {1: {(1, 1): 1}}
    rows = [[1]]
    for n in range(1, N):
        level: dict[tuple[int, int], int] = defaultdict(int)
        row = [0] * (n + 1)
        for (p, q), c in F[n].items():
            start = n + 1 - (p + q)
            for offset, label in enumerate(_baxter_children(p, q)):
                level[label] += c
                row[start + offset] += c
        F[n + 1] = dict(level)
        rows.append(row)
    return {n: F[n] for n in range(1, N + 1)}, Triangle("baxter", rows[:N])


def brute_baxter_params(n: int) -> dict[tuple[int, int], int]:
    return dict(Counter(baxter_params(e) for e in gen_avoiders(n, BAXTER_TRIPLE)))


def baxter_closed_form(n: int) -> int:
    if n < 1:
        raise ValueError("Baxter numbers start at n = 1")
    num = sum(comb(n + 1, k) * comb(n + 1, k + 1) * comb(n + 1, k + 2) for k in range(n))
    den = comb(n + 1, 1) * comb(n + 1, 2)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division computing B_{n}")
    return q


# -- closed-form sequences and Euler/Entringer -------------------------------------

def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def large_schroder_numbers(N: int) -> list[int]:
    """1, 2, 6, 22, 90, ... for lengths 1..N (the n-th term counts length-n objects)."""
    r = [1]
    for m in range(1, N):
        r.append(r[-1] + sum(r[k] * r[m - 1 - k] for k in range(m)))
    return r[:N]


def entringer_oracle(N: int) -> list[list[int]]:
    """Rows 1..N; row n holds the boustrophedon numbers E(n-1, k) for k = 0..n-1."""
    tri = [[1]]
    for m in range(1, N):
        prev = tri[-1]
        row = [0]
        for k in range(1, m + 1):
            row.append(row[k - 1] + prev[m - k])
        tri.append(row)
    return tri


def euler_numbers(N: int) -> list[int]:
    """E_0..E_N (1, 1, 1, 2, 5, 16, 61, ...)."""
    return [r[-1] for r in entringer_oracle(N + 1)]


def is_simsun(pi: Sequence[int]) -> bool:
    for k in range(len(pi), 0, -1):
        w = [x for x in pi if x <= k]
        if any(w[i] > w[i + 1] > w[i + 2] for i in range(len(w) - 2)):
            return False
    return True
