"""Explicit maps between permutations and inversion sequences.

Each map checks its domain eagerly and raises ``ValueError`` outside of it; the
maps mirror proof steps, so quietly returning something for a bad input would
hide exactly the failures the test-suite is looking for.
"""

from __future__ import annotations

from typing import Sequence

from .enumeration import CATALAN_TRIPLE, SCHRODER_TRIPLE
from .stats import critical_value
from .words import RelationTriple, is_inversion_sequence, is_permutation, violates_triple

__all__ = [
    "theta", "theta_inverse", "in_catalan_A", "in_catalan_B", "catalan_g",
    "catalan_g_index", "in_schroder_A", "in_schroder_B", "in_schroder_C",
    "in_schroder_D", "schroder_f", "schroder_pivot", "split_222", "join_222",
    "last_decrement",
]

Seq = tuple[int, ...]


def theta(pi: Sequence[int]) -> Seq:
    """e_i = number of earlier entries larger than pi_i."""
    if not is_permutation(pi):
        raise ValueError(f"{tuple(pi)} is not a permutation")
    return tuple(sum(1 for j in range(i) if pi[j] > pi[i]) for i in range(len(pi)))


def theta_inverse(e: Sequence[int]) -> Seq:
    if not is_inversion_sequence(e):
        raise ValueError(f"{tuple(e)} is not an inversion sequence")
    ranks: list[int] = []
    for i, x in enumerate(e, 1):
        r = i - x  # rank of the new entry among the first i
        ranks = [y + 1 if y >= r else y for y in ranks]
        ranks.append(r)
    return tuple(ranks)


def _split_last(e: Sequence[int], triple: RelationTriple) -> tuple[Seq, int, int]:
    e = tuple(e)
    if not e or not is_inversion_sequence(e) or violates_triple(e, triple):
        raise ValueError(f"{e} is not in I_n({triple})")
    prefix = e[:-1]
    return prefix, e[-1], critical_value(prefix, triple)


# -- Catalan -----------------------------------------------------------------

def in_catalan_A(e: Sequence[int]) -> bool:
    _, k, cri = _split_last(e, CATALAN_TRIPLE)
    return cri == k


def in_catalan_B(e: Sequence[int]) -> bool:
    return not in_catalan_A(e)


def catalan_g_index(e: Sequence[int]) -> int:
    """The 1-based index i with e_i = k-1 and e_{i+1} <= k-1; must be unique."""
    k = e[-1]
    found = [i for i in range(1, len(e)) if e[i - 1] == k - 1 and e[i] <= k - 1]
    if len(found) != 1:
        raise ValueError(f"expected a unique index for {tuple(e)}, found {found}")
    return found[0]


def catalan_g(e: Sequence[int]) -> Seq:
    e = tuple(e)
    n = len(e)
    if n < 2 or not in_catalan_A(e):
        raise ValueError(f"{e} is not in the cri(prefix) = last part of the Catalan class")
    if e[n - 2] == n - 2:
        drop = n - 1
    else:
        drop = catalan_g_index(e)
    return e[:drop - 1] + e[drop:]


def last_decrement(e: Sequence[int], triple: RelationTriple) -> Seq:
    prefix, k, cri = _split_last(e, triple)
    if cri > k - 1:
        raise ValueError(f"cannot decrement last entry of {tuple(e)}: cri(prefix) = {cri}")
    return prefix + (k - 1,)


# -- Schröder ------------------------------------------------------------------

def in_schroder_A(e: Sequence[int]) -> bool:
    _, k, cri = _split_last(e, SCHRODER_TRIPLE)
    return cri == k


def in_schroder_B(e: Sequence[int]) -> bool:
    return not in_schroder_A(e)


def in_schroder_C(e: Sequence[int]) -> bool:
    e = tuple(e)
    n = len(e)
    if n < 2 or not in_schroder_A(e) or e[n - 2] != n - 2:
        return False
    return critical_value(e[:n - 2], SCHRODER_TRIPLE) == e[-1]


def in_schroder_D(e: Sequence[int]) -> bool:
    return in_schroder_A(e) and not in_schroder_C(e)


def schroder_pivot(e: Sequence[int]) -> int:
    """1-based position of the left-most entry equal to cri(prefix) = last."""
    k = e[-1]
    return e.index(k) + 1


def schroder_f(e: Sequence[int]) -> Seq:
    """Delete the right-most entry equal to k among positions i..n-1."""
    e = tuple(e)
    n = len(e)
    if not in_schroder_D(e) or e[-1] > n - 3:
        raise ValueError(f"{e} is not in the D part of the Schröder class with k <= n-3")
    k = e[-1]
    i = schroder_pivot(e)
    js = [j for j in range(i, n) if e[j - 1] == k]
    if not js:
        raise ValueError(f"no entry equal to {k} between {i} and {n - 1} in {e}")
    j = js[-1]
    return e[:j - 1] + e[j:]


# -- decomposition used for the dist generating function --------------------------

def split_222(e: Sequence[int]) -> tuple[int, Seq, Seq]:
    e = tuple(e)
    n = len(e)
    if not e or not is_inversion_sequence(e) or violates_triple(e, CATALAN_TRIPLE):
        raise ValueError(f"{e} is not in I_n({CATALAN_TRIPLE})")
    t = max(i for i in range(1, n + 1) if e[i - 1] == i - 1)
    if t == n:
        raise ValueError(f"{e} ends on its ceiling; no decomposition")
    a = e[:t - 1] + (e[t],)
    b = tuple(x - t for x in e[t + 1:])
    return t, a, b


def join_222(t: int, a: Sequence[int], b: Sequence[int]) -> Seq:
    a, b = tuple(a), tuple(b)
    if len(a) != t:
        raise ValueError("first part must have length t")
    return a[:t - 1] + (t - 1, a[t - 1]) + tuple(x + t for x in b)
