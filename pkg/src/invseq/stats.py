"""Statistics on permutations and inversion sequences.

Set-valued statistics are returned as sorted tuples of 1-based positions (or
values, for ROW); the lowercase name of a statistic is its cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .words import ClassicalPattern, Relation, RelationTriple, contains_classical, violates_triple

__all__ = [
    "SUPPORTED_TRIPLES", "TwoColoredDyckPath", "inverse", "descent_set",
    "ascent_set", "vid_set", "lma_set", "lmi_set", "rma_set", "rmi_set",
    "dist_set", "zero_set", "ema_set", "row_set", "inversions", "last",
    "perm_stats", "invseq_stats", "appendable", "critical_value", "outline",
    "covered_zeros", "expo", "PERM_STATISTICS", "INVSEQ_STATISTICS",
]

GE, GT, ANY = Relation.GE, Relation.GT, Relation.ANY

# triples for which the appendable last entries form the interval [cri, n]
SUPPORTED_TRIPLES = (
    RelationTriple(GE, ANY, GE),
    RelationTriple(GE, ANY, GT),
    RelationTriple(GE, GE, GT),
)

_P021 = ClassicalPattern((0, 2, 1))

Positions = tuple[int, ...]


def inverse(pi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for i, v in enumerate(pi, 1):
        inv[v - 1] = i
    return tuple(inv)


def descent_set(w: Sequence[int]) -> Positions:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def ascent_set(w: Sequence[int]) -> Positions:
    return tuple(i for i in range(1, len(w)) if w[i - 1] < w[i])


def vid_set(pi: Sequence[int]) -> Positions:
    """Positions i >= 2 such that the value pi_i + 1 sits left of pi_i."""
    pos = {v: i for i, v in enumerate(pi, 1)}
    return tuple(i for i, v in enumerate(pi, 1) if i >= 2 and pos.get(v + 1, len(pi) + 1) < i)


def lma_set(w: Sequence[int]) -> Positions:
    out, best = [], None
    for i, x in enumerate(w, 1):
        if best is None or x > best:
            out.append(i)
            best = x
    return tuple(out)


def lmi_set(w: Sequence[int]) -> Positions:
    out, best = [], None
    for i, x in enumerate(w, 1):
        if best is None or x < best:
            out.append(i)
            best = x
    return tuple(out)


def rma_set(w: Sequence[int]) -> Positions:
    out, best = [], None
    for i in range(len(w), 0, -1):
        if best is None or w[i - 1] > best:
            out.append(i)
            best = w[i - 1]
    return tuple(reversed(out))


def rmi_set(w: Sequence[int]) -> Positions:
    """Positions whose entry is strictly below every later entry."""
    out, best = [], None
    for i in range(len(w), 0, -1):
        if best is None or w[i - 1] < best:
            out.append(i)
            best = w[i - 1]
    return tuple(reversed(out))


def dist_set(e: Sequence[int]) -> Positions:
    """Positions of the last occurrence of each distinct positive entry."""
    seen: set[int] = set()
    out = []
    for i in range(len(e), 0, -1):
        x = e[i - 1]
        if x and x not in seen:
            out.append(i)
        seen.add(x)
    return tuple(sorted(i for i in out if i >= 2))


def zero_set(e: Sequence[int]) -> Positions:
    return tuple(i for i, x in enumerate(e, 1) if x == 0)


def ema_set(e: Sequence[int]) -> Positions:
    return tuple(i for i, x in enumerate(e, 1) if x == i - 1)


def row_set(e: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(set(e) - {0}))


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def last(w: Sequence[int]) -> int:
    if not w:
        raise ValueError("last entry of an empty sequence is undefined")
    return w[-1]


def perm_stats(pi: Sequence[int]) -> dict:
    n = len(pi)
    des = descent_set(pi)
    ides = len(descent_set(inverse(pi)))
    rec = {
        "DES": des,
        "VID": vid_set(pi),
        "LMA": lma_set(pi),
        "LMI": lmi_set(pi),
        "RMA": rma_set(pi),
        "RMI": rmi_set(pi),
        "des": len(des),
        "ides": ides,
        "asc": max(n - 1, 0) - len(des),
        "iasc": max(n - 1, 0) - ides,
    }
    rec["lma"] = len(rec["LMA"])
    rec["rma"] = len(rec["RMA"])
    rec["last"] = pi[-1] if n else None
    return rec


def invseq_stats(e: Sequence[int]) -> dict:
    rec = {
        "ASC": ascent_set(e),
        "DIST": dist_set(e),
        "ZERO": zero_set(e),
        "EMA": ema_set(e),
        "RMI": rmi_set(e),
        "ROW": row_set(e),
    }
    rec["asc"] = len(rec["ASC"])
    rec["dist"] = len(rec["ROW"])
    rec["last"] = e[-1] if e else None
    return rec


# -- critical value ----------------------------------------------------------

def appendable(e: Sequence[int], r: RelationTriple, c: int) -> bool:
    """Whether appending ``c`` creates no new forbidden triple (only triples ending at c are checked)."""
    r1, r2, r3 = r.rho1, r.rho2, r.rho3
    for j in range(1, len(e)):
        if not r2(e[j], c):
            continue
        for i in range(j):
            if r1(e[i], e[j]) and r3(e[i], c):
                return False
    return True


def critical_value(e: Sequence[int], r: RelationTriple) -> int:
    """Least c with (e_1, ..., e_n, c) still avoiding ``r``."""
    if r not in SUPPORTED_TRIPLES:
        raise ValueError(f"critical value is not defined for triple {r}")
    if violates_triple(e, r):
        raise ValueError(f"{tuple(e)} does not avoid {r}")
    for c in range(len(e) + 1):
        if appendable(e, r, c):
            return c
    raise AssertionError(f"no appendable value for {tuple(e)} under {r}")


# -- outline / EXPO ------------------------------------------------------------

@dataclass(frozen=True)
class TwoColoredDyckPath:
    """East-step heights d_1..d_n; ``red`` are the positions coloured red."""
    heights: tuple[int, ...]
    red: Positions

    def __post_init__(self):
        for i, d in enumerate(self.heights, 1):
            if not 0 <= d <= i - 1:
                raise ValueError(f"height {d} at step {i} passes above the diagonal")
        if any(b < a for a, b in zip(self.heights, self.heights[1:])):
            raise ValueError("east-step heights must be weakly increasing")


def _require_021_avoider(e: Sequence[int]) -> None:
    if contains_classical(e, _P021):
        raise ValueError(f"{tuple(e)} contains 021")


def outline(e: Sequence[int]) -> TwoColoredDyckPath:
    _require_021_avoider(e)
    heights, top = [], 0
    for x in e:
        top = max(top, x)
        heights.append(x if x else top)
    return TwoColoredDyckPath(tuple(heights), zero_set(e))


def covered_zeros(e: Sequence[int]) -> Positions:
    """Zero positions lying strictly between two equal positive entries."""
    n = len(e)
    out = []
    for i in range(n):
        if e[i] == 0:
            before = {x for x in e[:i] if x}
            if any(x in before for x in e[i + 1:]):
                out.append(i + 1)
    return tuple(out)


def expo(e: Sequence[int]) -> Positions:
    d = outline(e).heights
    covered = set(covered_zeros(e))
    gap = [i - h for i, h in enumerate(d, 1)]
    n = len(e)
    return tuple(
        i for i in range(1, n + 1)
        if i not in covered and all(gap[i - 1] < gap[j - 1] for j in range(i + 1, n + 1))
    )


# -- statistic selectors ---------------------------------------------------------

def _card(f: Callable) -> Callable:
    return lambda w: len(f(w))


PERM_STATISTICS: dict[str, Callable[[Sequence[int]], object]] = {
    "DES": descent_set,
    "VID": vid_set,
    "LMA": lma_set,
    "LMI": lmi_set,
    "RMA": rma_set,
    "RMI": rmi_set,
    "des": _card(descent_set),
    "vid": _card(vid_set),
    "ides": lambda p: len(descent_set(inverse(p))),
    "asc": lambda p: max(len(p) - 1, 0) - len(descent_set(p)),
    "iasc": lambda p: max(len(p) - 1, 0) - len(descent_set(inverse(p))),
    "lma": _card(lma_set),
    "lmi": _card(lmi_set),
    "rma": _card(rma_set),
    "rmi": _card(rmi_set),
    "inv": inversions,
    "last": last,
}

INVSEQ_STATISTICS: dict[str, Callable[[Sequence[int]], object]] = {
    "ASC": ascent_set,
    "DIST": dist_set,
    "ZERO": zero_set,
    "EMA": ema_set,
    "RMI": rmi_set,
    "ROW": row_set,
    "EXPO": expo,
    "asc": _card(ascent_set),
    "dist": _card(row_set),
    "zero": _card(zero_set),
    "ema": _card(ema_set),
    "rmi": _card(rmi_set),
    "expo": _card(expo),
    "last": last,
    "sum": sum,
}
