"""Sequence types and pattern containment.

Words are plain tuples of non-negative ints.  Positions are 1-based in every
public contract (``adjacent`` indices, statistic sets) and 0-based inside loops.

>>> contains_classical((3, 2, 4, 2, 1), ClassicalPattern.parse("231"))
True
>>> contains_classical((3, 2, 4, 2, 1), ClassicalPattern.parse("101"))
False
"""

from __future__ import annotations

import enum
import itertools
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "Word", "PatternError", "Relation", "RelationTriple", "ClassicalPattern",
    "VincularPattern", "Pattern", "flatten", "order_isomorphic",
    "contains_classical", "contains_vincular", "contains", "violates_triple",
    "avoids_all", "is_permutation", "is_inversion_sequence", "parse_pattern",
    "parse_pattern_list", "parse_avoid",
]

Word = tuple[int, ...]


class PatternError(ValueError):
    """Malformed pattern or relation text."""


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def is_inversion_sequence(e: Sequence[int]) -> bool:
    return all(0 <= x < i for i, x in enumerate(e, 1))


def flatten(w: Iterable[int]) -> Word:
    """Relabel values to 0..m keeping order and equalities, e.g. 352 -> 120."""
    w = tuple(w)
    rank = {v: r for r, v in enumerate(sorted(set(w)))}
    return tuple(rank[x] for x in w)


def order_isomorphic(u: Sequence[int], v: Sequence[int]) -> bool:
    if len(u) != len(v):
        return False
    for a, b in itertools.combinations(range(len(u)), 2):
        if (u[a] < u[b]) != (v[a] < v[b]) or (u[a] == u[b]) != (v[a] == v[b]):
            return False
    return True


# -- relations -------------------------------------------------------------

class Relation(enum.Enum):
    LT = "<"
    GT = ">"
    LE = "<="
    GE = ">="
    EQ = "="
    NE = "!="
    ANY = "-"

    def __call__(self, a: int, b: int) -> bool:
        return _REL_OPS[self](a, b)

    @property
    def code(self) -> int:
        return _REL_CODES[self]

    @classmethod
    def parse(cls, text: str) -> "Relation":
        text = text.strip()
        aliases = {"≤": "<=", "≥": ">=", "≠": "!=", "−": "-"}
        try:
            return cls(aliases.get(text, text))
        except ValueError:
            raise PatternError(f"unknown relation {text!r}") from None


_REL_OPS = {
    Relation.LT: operator.lt,
    Relation.GT: operator.gt,
    Relation.LE: operator.le,
    Relation.GE: operator.ge,
    Relation.EQ: operator.eq,
    Relation.NE: operator.ne,
    Relation.ANY: lambda a, b: True,
}
# integer codes shared with the compiled kernels
_REL_CODES = {r: i for i, r in enumerate(Relation)}


@dataclass(frozen=True)
class RelationTriple:
    """(rho1, rho2, rho3): forbids i<j<k with e_i rho1 e_j, e_j rho2 e_k, e_i rho3 e_k."""
    rho1: Relation
    rho2: Relation
    rho3: Relation

    @classmethod
    def parse(cls, text: str) -> "RelationTriple":
        parts = text.split(",")
        if len(parts) != 3:
            raise PatternError(f"relation triple needs three parts: {text!r}")
        return cls(*(Relation.parse(p) for p in parts))

    @property
    def codes(self) -> tuple[int, int, int]:
        return (self.rho1.code, self.rho2.code, self.rho3.code)

    def __str__(self) -> str:
        return ",".join(r.value for r in (self.rho1, self.rho2, self.rho3))


# -- patterns --------------------------------------------------------------

@dataclass(frozen=True)
class ClassicalPattern:
    letters: Word

    def __post_init__(self):
        if not self.letters:
            raise PatternError("empty pattern")
        object.__setattr__(self, "letters", flatten(self.letters))

    @classmethod
    def parse(cls, text: str) -> "ClassicalPattern":
        if not text.isdigit():
            raise PatternError(f"classical pattern must be digits: {text!r}")
        return cls(tuple(int(c) for c in text))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(map(str, self.letters))


@dataclass(frozen=True)
class VincularPattern:
    """A pattern whose letters i and i+1 (1-based) must sit side by side for i in ``adjacent``."""
    base: Word
    adjacent: frozenset[int]

    def __post_init__(self):
        if not self.base:
            raise PatternError("empty pattern")
        object.__setattr__(self, "base", flatten(self.base))
        adj = frozenset(self.adjacent)
        if not all(1 <= i < len(self.base) for i in adj):
            raise PatternError(f"adjacency {sorted(adj)} out of range for {self.base}")
        object.__setattr__(self, "adjacent", adj)

    @classmethod
    def parse(cls, text: str) -> "VincularPattern":
        """``"2_41_3"``: underscores separate blocks; letters inside a block are adjacent."""
        blocks = text.split("_")
        if not all(b.isdigit() for b in blocks):
            raise PatternError(f"malformed vincular pattern {text!r}")
        letters, adjacent = [], set()
        for block in blocks:
            for j, c in enumerate(block):
                if j:
                    adjacent.add(len(letters))
                letters.append(int(c))
        return cls(tuple(letters), frozenset(adjacent))

    def __len__(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        out = []
        for i, c in enumerate(self.base):
            if i and i not in self.adjacent:
                out.append("_")
            out.append(str(c))
        return "".join(out)


Pattern = Union[ClassicalPattern, VincularPattern]


def _search(w: Sequence[int], p: Word, adjacent: frozenset[int]) -> bool:
    """Backtracking occurrence search; ``adjacent`` is 1-based as in VincularPattern."""
    n, k = len(w), len(p)
    if k > n:
        return False
    chosen: list[int] = []

    def consistent(pos: int) -> bool:
        j = len(chosen)
        x = w[pos]
        for a, prev in enumerate(chosen):
            y = w[prev]
            if (p[a] < p[j]) != (y < x) or (p[a] == p[j]) != (y == x):
                return False
        return True

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        if j in adjacent:
            candidates: Iterable[int] = (chosen[-1] + 1,) if chosen[-1] + 1 < n else ()
        else:
            candidates = range(start, n - (k - j) + 1)
        for pos in candidates:
            if consistent(pos):
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def contains_classical(w: Sequence[int], p: ClassicalPattern) -> bool:
    return _search(w, p.letters, frozenset())


def contains_vincular(w: Sequence[int], p: VincularPattern) -> bool:
    return _search(w, p.base, p.adjacent)


def contains(w: Sequence[int], p: Pattern) -> bool:
    if isinstance(p, VincularPattern):
        return contains_vincular(w, p)
    return contains_classical(w, p)


def avoids_all(w: Sequence[int], ps: Iterable[Pattern]) -> bool:
    return not any(contains(w, p) for p in ps)


def violates_triple(e: Sequence[int], r: RelationTriple) -> bool:
    r1, r2, r3 = r.rho1, r.rho2, r.rho3
    n = len(e)
    for j in range(1, n - 1):
        left = [e[i] for i in range(j) if r1(e[i], e[j])]
        if not left:
            continue
        for k in range(j + 1, n):
            if r2(e[j], e[k]) and any(r3(a, e[k]) for a in left):
                return True
    return False


# -- text syntax -----------------------------------------------------------

def parse_pattern(text: str) -> Pattern:
    text = text.strip()
    if "_" in text:
        return VincularPattern.parse(text)
    return ClassicalPattern.parse(text)


def parse_pattern_list(text: str) -> list[Pattern]:
    return [parse_pattern(t) for t in text.split(",") if t.strip()]


def parse_avoid(text: str) -> Union[RelationTriple, list[Pattern]]:
    """A relation triple if every comma-separated token is a relation symbol, else patterns."""
    tokens = [t.strip() for t in text.split(",")]
    symbols = {r.value for r in Relation} | {"≤", "≥", "≠", "−"}
    if tokens and all(t in symbols for t in tokens):
        return RelationTriple.parse(text)
    return parse_pattern_list(text)
