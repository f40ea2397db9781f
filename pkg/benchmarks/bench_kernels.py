"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N wall time of each backend and
the speedup, after checking that both return identical results.
"""

import argparse
import timeit

import numpy as np

from oodd import _fallback as py

try:
    from oodd import _kernels as cy
except ImportError:  # pragma: no cover
    raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")


def cases(rng):
    x = rng.normal(size=20000)
    scores = np.sort(np.round(rng.normal(size=20000), 2))
    labels = rng.integers(0, 2, 20000)
    X = rng.normal(size=(10000, 16))
    y = X[:, 0] - X[:, 5] ** 2 + 0.1 * rng.normal(size=10000)
    idx = rng.integers(0, 10000, 10000)
    tree = py.build_tree(X, y, idx, 4, 12, 5, 1)
    trees = [py.build_tree(X, y, rng.integers(0, 10000, 10000), 4, 12, 5, s) for s in range(10)]
    Xq = rng.normal(size=(2000, 16))
    return {
        "cusum_scan (n=20000)": lambda m: m.cusum_scan(x, 0.01, 0.0018),
        "auc_sorted (n=20000)": lambda m: m.auc_sorted(scores, labels),
        "build_tree (n=10000, p=16, depth 12)": lambda m: m.build_tree(X, y, idx, 4, 12, 5, 1),
        "tree_predict (2000 rows)": lambda m: m.tree_predict(*tree, Xq),
        "forest_predict (10 trees, 2000 rows)": lambda m: m.forest_predict(trees, Xq),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(same(u, v) for u, v in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in cases(rng).items():
        assert same(fn(py), fn(cy)), name
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:40s} {t_py * 1e3:8.2f}ms {t_cy * 1e3:8.2f}ms {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
