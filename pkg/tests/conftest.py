import itertools

import pytest

ACCEPTANCE_LINES: list[str] = []


def naive_contains(w, letters, adjacent=()):
    """Independent oracle: every position tuple, compared through pairwise relations."""
    k = len(letters)
    for pos in itertools.combinations(range(len(w)), k):
        if any(pos[a] != pos[a - 1] + 1 for a in adjacent):
            continue
        sub = [w[i] for i in pos]
        if all((sub[a] < sub[b]) == (letters[a] < letters[b])
               and (sub[a] == sub[b]) == (letters[a] == letters[b])
               for a in range(k) for b in range(k)):
            return True
    return False


def naive_violates(e, rels):
    ops = {
        "<": lambda a, b: a < b, ">": lambda a, b: a > b, "<=": lambda a, b: a <= b,
        ">=": lambda a, b: a >= b, "=": lambda a, b: a == b, "!=": lambda a, b: a != b,
        "-": lambda a, b: True,
    }
    r1, r2, r3 = (ops[r] for r in rels)
    return any(r1(e[i], e[j]) and r2(e[j], e[k]) and r3(e[i], e[k])
               for i, j, k in itertools.combinations(range(len(e)), 3))


def inversion_sequences(n):
    return itertools.product(*(range(i) for i in range(1, n + 1)))


@pytest.fixture
def oracle():
    class _Oracle:
        contains = staticmethod(naive_contains)
        violates = staticmethod(naive_violates)
        invseqs = staticmethod(inversion_sequences)
    return _Oracle


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
