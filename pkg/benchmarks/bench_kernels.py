"""Time the compiled and numpy kernels on the workloads the library runs.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import math
import timeit

import numpy as np

from wignerlab import kernels
from wignerlab.quadrature import composite_gauss_legendre


def workloads(backend):
    rng = np.random.default_rng(0)
    z, t = rng.uniform(-8, 8, (2, 200_000))
    # panel counts of the eta = 2 transform on the 41x41 acceptance grid
    a, wa_ = composite_gauss_legendre(-9.0, 9.0, 120)
    b, wb_ = composite_gauss_legendre(-9.0, 9.0, 18)
    f = np.outer(wa_, wb_) * kernels.psi_points(0, 0.0, (a[:, None] + b) / math.sqrt(2), (a[:, None] - b) / math.sqrt(2))
    wa, wb = rng.uniform(-40, 40, (2, 1681))
    return {
        "hermite n=12, 2e5 points": lambda: backend.hermite_functions(12, z),
        "hermite n=200, 2e5 points": lambda: backend.hermite_functions(200, z),
        "psi n=8 eta=1.5, 2e5 points": lambda: backend.psi_points(8, 1.5, z, t),
        f"fourier sum {a.size}x{b.size} nodes, 1681 q": lambda: backend.fourier_tensor_sum(f, a, b, wa, wb),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = {"python": kernels.pure}
    if kernels.compiled is not None:
        backends["cython"] = kernels.compiled
    else:
        print("compiled extension not built; timing the numpy kernels only")
    timings = {}
    for name, backend in backends.items():
        for label, fn in workloads(backend).items():
            timings.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    width = max(map(len, timings))
    print(f"{'workload':<{width}}  {'python [s]':>10}  {'cython [s]':>10}  {'speedup':>8}")
    for label, row in timings.items():
        py, cy = row["python"], row.get("cython")
        if cy is None:
            print(f"{label:<{width}}  {py:10.4f}  {'-':>10}  {'-':>8}")
        else:
            print(f"{label:<{width}}  {py:10.4f}  {cy:10.4f}  {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
