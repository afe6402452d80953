import numpy as np
import pytest

from invseq.enumeration import SCHRODER_TRIPLE, avoider_array, distribution, gen_permutations
from invseq.theorems import (
    CONJECTURED_PAIRS, DEFAULT_MAX_N, THEOREMS, asc_coincidence, run_theorem,
    scan_schroder_pairs, schroder_recurrence,
)
from invseq.words import ClassicalPattern


@pytest.mark.parametrize("theorem", list(THEOREMS))
def test_theorem_holds_up_to_default_size(theorem):
    for n in range(1, DEFAULT_MAX_N[theorem] + 1):
        ok, detail = run_theorem(theorem, n)
        assert ok, (n, detail)


def test_schroder_last_identity_at_the_top_entries():
    for n in range(3, 10):
        sch = np.bincount(avoider_array(n, SCHRODER_TRIPLE)[:, -1], minlength=n)
        i021 = np.bincount(avoider_array(n, [ClassicalPattern((0, 2, 1))])[:, -1], minlength=n)
        for k in (n - 1, n - 2, n - 3):
            assert sch[k] == i021[(k + 1) % n]


@pytest.mark.parametrize("n", range(1, 13))
def test_schroder_four_term_recurrence(n):
    assert schroder_recurrence(n)[0]


@pytest.mark.parametrize("n", range(1, 10))
def test_asc_coincidence(n):
    assert asc_coincidence(n)[0]


def test_checks_are_not_vacuous():
    perms = list(gen_permutations(4))
    assert distribution(perms, ["DES"], "perm") != distribution(perms, ["VID"], "perm")
    assert distribution(perms, ["des", "DES"], "perm") != distribution(perms, ["ides", "DES"], "perm")
    # a wrong shift breaks the Schröder identity
    sch = np.bincount(avoider_array(5, SCHRODER_TRIPLE)[:, -1], minlength=5).tolist()
    i021 = np.bincount(avoider_array(5, [ClassicalPattern((0, 2, 1))])[:, -1], minlength=5).tolist()
    assert sch != i021


def test_scan_keeps_the_conjectured_pairs():
    early = {frozenset(p) for p in scan_schroder_pairs(6)}
    assert CONJECTURED_PAIRS <= early
    assert all(a > b for a, b in scan_schroder_pairs(6))
