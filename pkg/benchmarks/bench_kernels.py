"""Time the coset search on both backends.

Each case is reduced once (LLL and unit splitting) and then only the search
kernel is timed, so the numbers compare the compiled and pure-Python loops.

    python benchmarks/bench_kernels.py [--repeat N] [--case NAME ...]
"""

import argparse
import statistics
import time

from splice_d import SeifertData
from splice_d.kernels import available_backends, min_coset_norm
from splice_d.lattice import GramLattice, characteristic_rep, direct_sum
from splice_d.plumbing import seifert_lattice
from splice_d.reduction import decompose

CASES = {
    "sigma(2,3,5)": (2, 3, 5),
    "sigma(2,3,11)": (2, 3, 11),
    "sigma(3,11,13,20)": (3, 11, 13, 20),
    "sigma(13,20,227)": (13, 20, 227),
    "sigma(4,5,19)": (4, 5, 19),
    "sigma(5,6,29)": (5, 6, 29),
    "sigma(6,7,41)": (6, 7, 41),
    "sigma(7,10,69)": (7, 10, 69),
}


def components(L):
    """Components left for the search after reduction, with their parity classes."""
    neg = [[-x for x in row] for row in L.matrix]
    _, comps = decompose(neg)
    out = []
    for gram, basis in comps:
        # parity class of the restriction of a characteristic vector
        sub = GramLattice(tuple(tuple(-x for x in row) for row in gram))
        out.append((gram, characteristic_rep(sub)))
    return out


def bench(comps, backend, repeat):
    times, nodes = [], 0
    for _ in range(repeat):
        t = time.perf_counter()
        nodes = sum(min_coset_norm(g, p, backend=backend).nodes for g, p in comps)
        times.append(time.perf_counter() - t)
    return statistics.median(times), nodes


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--case", action="append", choices=sorted(CASES) + ["e8+e8"])
    args = parser.parse_args()
    names = args.case or list(CASES) + ["e8+e8"]
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'case':<20}{'rank':>5}{'nodes':>10}" + "".join(f"{b + ' s':>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in names:
        if name == "e8+e8":
            e8 = seifert_lattice(SeifertData((2, 3, 5)))
            L = direct_sum(e8, e8)
        else:
            L = seifert_lattice(SeifertData(CASES[name]))
        comps = components(L)
        row = [bench(comps, b, args.repeat) for b in backends]
        nodes = row[0][1]
        line = f"{name:<20}{L.rank:>5}{nodes:>10}" + "".join(f"{t:>12.4f}" for t, _ in row)
        if len(backends) == 2:
            line += f"{row[1][0] / max(row[0][0], 1e-9):>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
