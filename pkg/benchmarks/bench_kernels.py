"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from spinquandle import kernels
from spinquandle.quandle import core_cyclic
from spinquandle.search import core_table, direct_product, cyclic, element_invariants


def cases():
    rng = np.random.default_rng(0)
    dim = 1 << 8
    am = rng.choice(dim, size=40, replace=False).astype(np.int64)
    bm = rng.choice(dim, size=40, replace=False).astype(np.int64)
    ac, bc = rng.standard_normal(40), rng.standard_normal(40)
    table = core_cyclic(24).array()
    g = direct_product(cyclic(4), cyclic(4))
    q = core_table(g)
    perm = rng.permutation(q.size)
    inv = np.argsort(perm)
    t2 = perm[q.array()[np.ix_(inv, inv)]]
    labels = element_invariants(q)
    codes = {v: i for i, v in enumerate(sorted(set(labels)))}
    l1 = np.array([codes[v] for v in labels], dtype=np.int64)
    l2 = l1[inv]
    return {
        "blade_sign x4096": lambda m: [m.blade_sign(a, b) for a in range(64) for b in range(64)],
        "gp_float 40x40 in Cl(8)": lambda m: m.gp_float(am, ac, bm, bc, dim),
        "quandle_witness k=24": lambda m: m.quandle_witness(table),
        "find_isomorphism Core(Z4xZ4)": lambda m: m.find_isomorphism(q.array(), t2, l1, l2),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = kernels.backends()
    names = sorted(backends)
    print(f"{'kernel':<32}" + "".join(f"{n + ' (ms)':>16}" for n in names) + f"{'speedup':>10}")
    for label, fn in cases().items():
        times = {}
        for n in names:
            mod = backends[n]
            number = 3
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat))
            times[n] = 1000 * best / number
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<32}" + "".join(f"{times[n]:>16.3f}" for n in names) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
