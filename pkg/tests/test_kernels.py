import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from invseq import _kernels
from invseq.enumeration import _combos, avoider_array, filter_avoiders, universe_array
from invseq.words import RelationTriple, parse_avoid

from conftest import naive_contains

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")

AVOID_TEXTS = [
    "021", "000", "000,101,110", "2413,4213", "3142,3124", "123", "0102", "2_41_3,3_14_2",
    ">=,-,>=", ">=,-,>", ">=,>=,>", "<,>,<", ">=,!=,>=", ">,-,>=", "=,-,=",
]


def test_pattern_code_matches_rank_encoding():
    assert _kernels.pattern_code((0, 0, 0)) == 0
    assert _kernels.pattern_code((0, 2, 1)) == 0 * 9 + 2 * 3 + 1
    assert _kernels.pattern_code((5, 9, 5)) == _kernels.pattern_code((0, 1, 0))


def test_env_flag_forces_numpy():
    env = dict(os.environ, INVSEQ_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from invseq import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_occurrence_table_against_naive():
    words = universe_array(5, "perm")
    occ = _kernels.occurrence_table(words, _combos(5, 3, frozenset(), False), backend="numpy")
    for row, w in zip(occ, words.tolist()):
        for p in itertools.permutations(range(3)):
            assert row[_kernels.pattern_code(p)] == naive_contains(w, p)


@needs_numba
@pytest.mark.parametrize("universe,n", [("perm", 7), ("invseq", 7)])
def test_backends_agree(universe, n):
    rng = np.random.default_rng(7)
    words = universe_array(n, universe)
    for k, adjacent, last_only in [(3, frozenset(), False), (4, frozenset(), True),
                                   (4, frozenset({2}), False), (3, frozenset({1}), True)]:
        combos = _combos(n, k, adjacent, last_only)
        table = rng.random(k ** k) < 0.3
        assert np.array_equal(_kernels.pattern_hits(words, combos, table, backend="numba"),
                              _kernels.pattern_hits(words, combos, table, backend="numpy"))
        assert np.array_equal(_kernels.occurrence_table(words, combos, backend="numba"),
                              _kernels.occurrence_table(words, combos, backend="numpy"))
    for codes in itertools.product(range(7), repeat=3):
        codes = np.array(codes, dtype=np.int64)
        for last_only in (False, True):
            assert np.array_equal(_kernels.triple_hits(words, codes, last_only, backend="numba"),
                                  _kernels.triple_hits(words, codes, last_only, backend="numpy"))


@pytest.mark.parametrize("text", AVOID_TEXTS)
def test_pruned_unpruned_and_scalar_agree(text):
    avoid = parse_avoid(text)
    universes = ["invseq"] if isinstance(avoid, RelationTriple) else ["invseq", "perm"]
    for universe in universes:
        for n in range(0, 8):
            pruned = avoider_array(n, avoid, universe)
            assert np.array_equal(pruned, avoider_array(n, avoid, universe, pruned=False))
            if n <= 6:
                assert [tuple(r) for r in pruned.tolist()] == list(filter_avoiders(n, avoid, universe))


def test_rows_are_lexicographic():
    arr = avoider_array(7, parse_avoid("021"))
    rows = [tuple(r) for r in arr.tolist()]
    assert rows == sorted(rows) and len(set(rows)) == len(rows)
