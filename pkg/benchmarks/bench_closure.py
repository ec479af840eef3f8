"""Compare the compiled Weyl-group closure kernel with the pure-Python fallback.

Usage: python3 benchmarks/bench_closure.py [--repeat N]
"""

import argparse
import time

from twistfold import _closure_py
from twistfold.rootdata import build_root_datum, simple_reflection_permutations

try:
    from twistfold import _kernel
except ImportError:
    _kernel = None

CASES = [("A", 5), ("B", 5), ("D", 5), ("F", 4), ("E", 6)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'type':<6}{'|W|':>10}{'python s':>12}{'compiled s':>12}{'speedup':>9}")
    for letter, n in CASES:
        gens = simple_reflection_permutations(build_root_datum(letter, n, "sc"))
        cap = 10**7
        py_elems = _closure_py.perm_closure(gens, cap)[0]
        t_py = best_of(lambda: _closure_py.perm_closure(gens, cap), args.repeat)
        if _kernel is not None:
            c_elems = _kernel.perm_closure(gens, cap)[0]
            assert list(map(tuple, c_elems)) == list(py_elems), "kernels disagree"
            t_c = best_of(lambda: _kernel.perm_closure(gens, cap), args.repeat)
            print(f"{letter}{n:<5}{len(py_elems):>10}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>8.1f}x")
        else:
            print(f"{letter}{n:<5}{len(py_elems):>10}{t_py:>12.4f}{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()
