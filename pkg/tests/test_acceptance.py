"""Acceptance gate: one test per criterion, each timed against its limit.

Every test records a PASS/FAIL line; the lines are printed as they happen
(visible with ``-s``) and again in the terminal summary.
"""

import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from invseq.bijections import (
    catalan_g, in_catalan_A, in_schroder_B, in_schroder_D, join_222, last_decrement, schroder_f,
    split_222, theta, theta_inverse,
)
from invseq.enumeration import (
    BAXTER_PATTERNS, BAXTER_TRIPLE, CATALAN_TRIPLE, SCHRODER_TRIPLE, avoider_array,
    baxter_closed_form, baxter_generating_tree, brute_baxter_params, brute_triangle,
    catalan_triangle, entringer_oracle, euler_numbers, gen_permutations, is_simsun,
)
from invseq.series import (
    baxter_fe_report, bousquet_side_report, dist_ogf_report, kernel_root_report,
    main_identity_report,
)
from invseq.theorems import (
    CONJECTURED_PAIRS, asc_coincidence, run_theorem, scan_schroder_pairs, schroder_recurrence,
)
from invseq.words import ClassicalPattern, violates_triple

from conftest import ACCEPTANCE_LINES

GOLDEN = Path(__file__).parent / "data" / "a009766_rows_1_10.csv"


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed <= limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:>2} {status}  {title}  ({elapsed:.2f}s of {limit:g}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def holds(theorem, max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        ok, detail = run_theorem(theorem, n)
        assert ok, f"{theorem} fails at n={n}: {detail}"


def rows(n, avoid, universe="invseq"):
    return [tuple(r) for r in avoider_array(n, avoid, universe).tolist()]


def test_criterion_01_catalan_counts():
    with criterion(1, "Catalan counts by brute force and recurrence", 10):
        expected = [1, 2, 5, 14, 42, 132, 429, 1430]
        brute = [len(avoider_array(n, CATALAN_TRIPLE, pruned=False)) for n in range(1, 9)]
        recurrence = catalan_triangle(8).row_sums()
        assert brute == recurrence == expected


def test_criterion_02_catalan_triangle_golden():
    golden = [[int(v) for v in line.split(",")] for line in GOLDEN.read_text().split()]
    with criterion(2, "Catalan triangle rows 1..10 match the ballot numbers", 1):
        assert catalan_triangle(10).rows == golden


def test_criterion_03_dist_vs_des():
    with criterion(3, "dist on the Catalan class vs des on 123-avoiders, n <= 9; o.g.f. at order 9", 60):
        holds("thm2.2", 9)
        report = dist_ogf_report(9)
        assert report.passed, report.failures


def test_criterion_04_schroder_identity():
    with criterion(4, "Schroder last-entry shift identity and four-term recurrence, n <= 9", 60):
        holds("thm3.1", 9)
        for n in range(1, 10):
            ok, detail = schroder_recurrence(n)
            assert ok, (n, detail)


def test_criterion_05_pair_scan():
    with criterion(5, "length-4 pattern pair scan at max-n 8 gives the nine pairs", 600):
        pairs = scan_schroder_pairs(8)
        assert len(pairs) == 9
        assert {frozenset(p) for p in pairs} == CONJECTURED_PAIRS


def test_criterion_06_sextuple():
    with criterion(6, "sextuple equidistribution and Schroder-family cardinalities, n <= 8", 120):
        holds("thm3.6", 8)
        expected = [1, 2, 6, 22, 90, 394, 1806, 8558]
        left = [len(avoider_array(n, [ClassicalPattern((0, 2, 1))])) for n in range(1, 9)]
        right = [len(avoider_array(n, [ClassicalPattern((1, 3, 0, 2)), ClassicalPattern((3, 1, 0, 2))], "perm"))
                 for n in range(1, 9)]
        assert left == right == expected


def test_criterion_07a_row_asc_last():
    with criterion(7, "(ROW, ASC, last) equidistribution, n <= 8", 120):
        holds("thm3.4", 8)


def test_criterion_07b_vid_des():
    with criterion(7, "(VID, DES) vs (DIST, ASC) equidistribution, n <= 8", 120):
        holds("thm3.5", 8)


def test_criterion_07c_asc_polynomials():
    with criterion(7, "asc coincidence on three classes n <= 9; palindromic asc polynomial n <= 10", 120):
        for n in range(1, 10):
            ok, detail = asc_coincidence(n)
            assert ok, (n, detail)
        holds("palindromic", 10)


def test_criterion_08_baxter():
    with criterion(8, "Baxter tree totals n <= 12, parameters, cri vs lma+rma, triangle vs Baxter permutations", 60):
        start = time.perf_counter()
        F, _ = baxter_generating_tree(12)
        assert [sum(F[n].values()) for n in range(1, 13)] == [baxter_closed_form(n) for n in range(1, 13)]
        assert time.perf_counter() - start < 1, "generating tree totals took over 1 s"
        for n in range(1, 9):
            assert F[n] == brute_baxter_params(n)
        assert baxter_generating_tree(8)[1].rows == brute_triangle(BAXTER_TRIPLE, 8).rows
        for n in range(1, 9):
            assert len(avoider_array(n, list(BAXTER_PATTERNS), "perm")) == baxter_closed_form(n)
        holds("thm4.1", 8)
        # the identity needs a permutation of length n-1 >= 1
        holds("cor4.2", 8, min_n=2)


@pytest.mark.parametrize("identity,order,report", [
    ("baxter-fe", 8, baxter_fe_report),
    ("kernel-root", 10, kernel_root_report),
    ("main-identity", 8, main_identity_report),
    ("bousquet-side", 7, bousquet_side_report),
])
def test_criterion_09_series(identity, order, report):
    with criterion(9, f"series identity {identity} at t-order {order}", 120):
        rep = report(order)
        assert rep.passed, rep.failures


def test_criterion_10_euler():
    with criterion(10, "Euler counts, Simsun equidistributions and Entringer rows, n <= 8", 120):
        euler = euler_numbers(9)
        p000 = [ClassicalPattern((0, 0, 0))]
        for n in range(1, 9):
            simsun = sum(1 for p in gen_permutations(n) if is_simsun(p))
            assert len(avoider_array(n, p000)) == simsun == euler[n + 1]
        holds("thm5.1", 8)
        holds("thm5.2", 8)
        holds("entringer", 8)
        tri = entringer_oracle(9)
        for n in range(1, 9):
            counts = np.bincount(avoider_array(n, p000)[:, -1] + 1, minlength=n + 1).tolist()
            assert counts == tri[n]


def test_criterion_11_foundations():
    with criterion(11, "des/asc and (ides, DES)/(dist, ASC) n <= 7; theta round trip on S_7", 60):
        holds("eq1", 7)
        holds("thm1.1", 7)
        images = set()
        for pi in gen_permutations(7):
            e = theta(pi)
            assert theta_inverse(e) == pi
            images.add(e)
        assert len(images) == 5040


def _catalan_maps(n):
    here, below = rows(n, CATALAN_TRIPLE), rows(n - 1, CATALAN_TRIPLE)
    for k in range(n):
        objs = [e for e in here if e[-1] == k]
        A = [e for e in objs if in_catalan_A(e)]
        B = [e for e in objs if not in_catalan_A(e)]
        assert sorted(map(catalan_g, A)) == sorted(e for e in below if e[-1] == k)
        assert sorted(last_decrement(e, CATALAN_TRIPLE) for e in B) == sorted(e for e in here if e[-1] == k - 1)


def _schroder_maps(n):
    here, below = rows(n, SCHRODER_TRIPLE), rows(n - 1, SCHRODER_TRIPLE)
    for k in range(n):
        objs = [e for e in here if e[-1] == k]
        B = [e for e in objs if in_schroder_B(e)]
        assert sorted(last_decrement(e, SCHRODER_TRIPLE) for e in B) == sorted(e for e in here if e[-1] == k - 1)
        if k <= n - 3:
            D = [e for e in objs if in_schroder_D(e)]
            assert sorted(map(schroder_f, D)) == sorted(e for e in below if e[-1] == k)


def _split_join(n):
    seen = set()
    for e in rows(n, CATALAN_TRIPLE):
        if e[-1] == n - 1:
            continue
        t, a, b = split_222(e)
        assert not violates_triple(a, CATALAN_TRIPLE) and not violates_triple(b, CATALAN_TRIPLE)
        assert join_222(t, a, b) == e
        seen.add((a, b))
    assert len(seen) == sum(1 for e in rows(n, CATALAN_TRIPLE) if e[-1] != n - 1)


def test_criterion_12_bijections():
    with criterion(12, "g, f, last-entry decrement and split/join bijective, n <= 8", 60):
        for n in range(2, 9):
            _catalan_maps(n)
            _schroder_maps(n)
        for n in range(1, 9):
            _split_join(n)
