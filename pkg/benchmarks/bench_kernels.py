"""Time the compiled and pure-Python integer kernels on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from wps_lab import kernels

CASES = [
    ("survey n=3 [2,13]", kernels.survey_counts, (3, 2, 13, 2, 13)),
    ("survey n=4 [2,13]", kernels.survey_counts, (4, 2, 13, 2, 13)),
    ("survey n=5 [2,7]", kernels.survey_counts, (5, 2, 7, 2, 7)),
    ("excluded bound=30", kernels.excluded_search, (30, 1, 31)),
    ("excluded bound=50", kernels.excluded_search, (50, 1, 51)),
]


def best_of(func, args, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'case':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, func, fargs in CASES:
        py_t, py_r = best_of(func, fargs, "python", args.repeat)
        if kernels.BACKEND == "cython":
            cy_t, cy_r = best_of(func, fargs, "cython", args.repeat)
            assert py_r == cy_r, f"backends disagree on {name}"
            print(f"{name:<22}{py_t:>12.4f}{cy_t:>12.4f}{py_t / cy_t:>9.1f}x")
        else:
            print(f"{name:<22}{py_t:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
