"""Compare the numpy and Cython kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--batch 8]

Prints per-sample conv3d forward/backward times for a few channel widths and
the Biot-Savart coil-map sum, plus the max abs difference between backends.
"""

import argparse
import time

import numpy as np

from tempoflow._kernels import backends


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=8)
    args = ap.parse_args()
    impls = backends()
    rng = np.random.default_rng(0)
    print(f"backends: {', '.join(impls)}")

    print(f"\nconv3d 3x3x3, batch {args.batch}, 16x16x32 voxels (ms per sample)")
    print(f"{'F':>4} {'backend':>8} {'fwd':>8} {'bwd':>8} {'GF/s fwd':>9} {'max diff':>10}")
    for f in (8, 16, 32):
        x = rng.standard_normal((args.batch, f, 16, 16, 32)).astype(np.float32)
        w = (rng.standard_normal((f, f, 3, 3, 3)) * 0.1).astype(np.float32)
        b = rng.standard_normal(f).astype(np.float32)
        gy = rng.standard_normal(x.shape).astype(np.float32)
        ref = None
        for name, mod in impls.items():
            y = mod.conv3d_forward(x, w, b)
            diff = 0.0 if ref is None else float(np.abs(y - ref).max())
            ref = y if ref is None else ref
            tf = best_of(lambda: mod.conv3d_forward(x, w, b), args.repeat) / args.batch
            tb = best_of(lambda: mod.conv3d_backward(x, w, gy), args.repeat) / args.batch
            flops = 2.0 * f * f * 27 * 16 * 16 * 32
            print(f"{f:>4} {name:>8} {tf * 1e3:8.2f} {tb * 1e3:8.2f} {flops / tf / 1e9:9.2f} {diff:10.2e}")

    print("\nbiot_savart, 48x48x24 points, 64 segments (ms)")
    pts = rng.uniform(0, 96, size=(48 * 48 * 24, 3))
    mids = rng.uniform(-20, 120, size=(64, 3))
    dl = rng.standard_normal((64, 3))
    ref = None
    for name, mod in impls.items():
        out = mod.biot_savart(pts, mids, dl)
        diff = 0.0 if ref is None else float(np.abs(out - ref).max() / np.abs(ref).max())
        ref = out if ref is None else ref
        t = best_of(lambda: mod.biot_savart(pts, mids, dl), args.repeat)
        print(f"{name:>8} {t * 1e3:9.1f}   rel diff {diff:.1e}")


if __name__ == "__main__":
    main()
