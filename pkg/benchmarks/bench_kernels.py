"""Compare the numba and numpy kernel backends on full S_n / I_n batches.

    python3 benchmarks/bench_kernels.py [--n 8] [--repeat 3]

Both backends must return identical arrays; the script exits non-zero otherwise.
"""

import argparse
import sys
import time

import numpy as np

from invseq import _kernels
from invseq.enumeration import _combos, universe_array
from invseq.words import RelationTriple


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1

    perms = universe_array(args.n, "perm")
    invseqs = universe_array(args.n + 1, "invseq")
    table = np.zeros(256, dtype=bool)
    for p in ((1, 3, 0, 2), (3, 1, 0, 2)):
        table[_kernels.pattern_code(p)] = True
    triple = RelationTriple.parse(">=,>=,>").codes

    cases = {
        f"pattern_hits S_{args.n} k=4": lambda b: _kernels.pattern_hits(
            perms, _combos(args.n, 4, frozenset(), False), table, backend=b),
        f"occurrence_table S_{args.n} k=4": lambda b: _kernels.occurrence_table(
            perms, _combos(args.n, 4, frozenset(), False), backend=b),
        f"triple_hits I_{args.n + 1}": lambda b: _kernels.triple_hits(invseqs, triple, False, backend=b),
        f"triple_hits I_{args.n + 1} last only": lambda b: _kernels.triple_hits(invseqs, triple, True, backend=b),
    }

    status = 0
    print(f"{'kernel':<34}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  equal")
    for name, fn in cases.items():
        fn("numba")  # compile outside the timed runs
        t_nb, out_nb = best_of(lambda: fn("numba"), args.repeat)
        t_np, out_np = best_of(lambda: fn("numpy"), args.repeat)
        equal = np.array_equal(out_nb, out_np)
        status |= not equal
        print(f"{name:<34}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}x  {equal}")
    return status


if __name__ == "__main__":
    sys.exit(main())
