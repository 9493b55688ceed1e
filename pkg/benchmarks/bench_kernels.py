"""Time the numpy and numba implementations of each hot kernel.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both paths are called directly, so the CHAINGRAY_NUMBA flag does not matter
here.  The first numba call (compilation) is excluded from the timings.
"""

import argparse
import timeit

import numpy as np

from chaingray import _kernels
from chaingray.chain_ring import all_words, make_ring
from chaingray.gray_map import gray, gray_table


def workloads():
    f4u3 = make_ring("f4u3")
    z27 = make_ring("z27")
    words = all_words(f4u3, 3)  # 262144 words
    images = gray(z27, all_words(z27, 2))  # 729 x 18
    keys = np.random.default_rng(0).integers(0, 27, size=(1 << 18, 8))
    return {
        "gray_gather": (gray_table(f4u3), words),
        "hamming_rows": (images, images[0]),
        "distance_histograms": (images,),
        "row_keys": (keys, 27),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"{'kernel':22s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, inputs in workloads().items():
        np_fn, nb_fn = _kernels.KERNELS[name]
        nb_inputs = [np.ascontiguousarray(a, dtype=np.int64) if isinstance(a, np.ndarray) else a for a in inputs]
        assert np.array_equal(np_fn(*inputs), nb_fn(*nb_inputs))
        t_np = min(timeit.repeat(lambda: np_fn(*inputs), number=1, repeat=args.repeat))
        t_nb = min(timeit.repeat(lambda: nb_fn(*nb_inputs), number=1, repeat=args.repeat))
        print(f"{name:22s} {t_np * 1e3:10.2f} {t_nb * 1e3:10.2f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
