"""Numba kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--repeat 5]

Times a single view render, a full 180-view visibility table and the
im2col/col2im pair used by the CNN, once with ``ACTIVEVIEW_NUMBA=1`` and once
with ``0``, and checks that both paths give identical results.
"""
import argparse
import os
import time

import numpy as np

from activeview import _accel
from activeview.nn import col2im, im2col
from activeview.render import ViewpointIndex, build_viewpoint_lattice, render_view
from activeview.scene import compute_visibility_table, generate_scene


def best_of(fn, repeat):
    fn()  # warm-up (includes jit compilation on the first numba call)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.numba_available():
        raise SystemExit("numba is not installed; nothing to compare")
    lattice = build_viewpoint_lattice()
    scene = generate_scene(3, lattice=lattice)
    x = np.random.default_rng(0).normal(size=(64, 2, 30, 40)).astype(np.float32)
    cases = {
        "render_view (1 view)": lambda: render_view(scene, ViewpointIndex(7, 2), lattice).depth,
        "visibility table (180 views)": lambda: compute_visibility_table(scene, lattice).psi,
        "im2col+col2im (64x2x30x40, k10 s2)": lambda: col2im(im2col(x, 10, 10, 2, 0),
                                                             x.shape, 10, 10, 2, 0),
    }
    print(f"{'kernel':38s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}  identical")
    for name, fn in cases.items():
        results = {}
        for flag in ("1", "0"):
            os.environ["ACTIVEVIEW_NUMBA"] = flag
            repeat = args.repeat if flag == "1" or "table" not in name else 1
            results[flag] = best_of(fn, repeat)
        (tn, on), (tp, op) = results["1"], results["0"]
        print(f"{name:38s} {tn * 1e3:9.1f}ms {tp * 1e3:9.1f}ms {tp / tn:7.1f}x  "
              f"{np.array_equal(on, op)}")
    os.environ.pop("ACTIVEVIEW_NUMBA")


if __name__ == "__main__":
    main()
