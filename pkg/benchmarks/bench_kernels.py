"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from fdbseries import _kernels_py

try:
    from fdbseries import _kernels
except ImportError:
    _kernels = None


def cases(rng):
    a = [rng.randint(-10**12, 10**12) for _ in range(120)]
    b = [rng.randint(-10**12, 10**12) for _ in range(120)]
    weights = [0] + [rng.randint(-9, 9) for _ in range(18)]
    return {
        "convolve (len 120)": lambda k: k.convolve(a, b, 120),
        "compositions (n=18)": lambda k: sum(1 for _ in k.compositions(18)),
        "composition_part_sums (n=18)": lambda k: k.composition_part_sums(18, weights),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled extension not built; timing the fallback only")

    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in cases(random.Random(0)).items():
        results = [fn(k) for _, k in backends]
        assert all(r == results[0] for r in results), label
        times = [min(timeit.repeat(lambda k=k: fn(k), number=1, repeat=args.repeat))
                 for _, k in backends]
        row = f"{label:32s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
