"""Compare the numba and numpy kernel families on corpus-sized inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Both families are called directly through ``kernels.KERNELS`` so a single
process times both; each kernel is warmed up once (numba compilation or
cache load) before timing.  Outputs are cross-checked for equality.
"""

import argparse
import json
import time

import numpy as np

from invsemi import kernels
from invsemi.constructions import brandt_extension, cyclic_group, inverse_symmetric_monoid, symmetric_group


def _cases():
    b3s3 = brandt_extension(symmetric_group(3), 3).table  # order 55
    b4z8 = brandt_extension(cyclic_group(8), 4).table  # order 129
    i3 = inverse_symmetric_monoid(3).table  # order 34
    rng = np.random.default_rng(0)

    def pairs(n, k):
        return np.sort(rng.choice(n, size=(k, 2), replace=True), axis=1).astype(np.int64)

    ident = lambda t: np.arange(t.shape[0], dtype=np.int64)  # noqa: E731
    return [
        ("assoc_violation", "B3(S3) n=55", (b3s3,)),
        ("assoc_violation", "B4(Z8) n=129", (b4z8,)),
        ("closure", "B4(Z8) one pair", (b4z8, ident(b4z8), np.array([[1, 2]], dtype=np.int64))),
        ("closure", "I3 ten pairs", (i3, ident(i3), pairs(34, 10))),
        ("principal_batch", "I3 all 561 pairs", (i3, np.array([(x, y) for x in range(34) for y in range(x + 1, 34)],
                                                              dtype=np.int64))),
        ("principal_batch", "B3(S3) 200 pairs", (b3s3, pairs(55, 200))),
    ]


def _time(fn, args, repeat):
    fn(*args)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    rows = []
    for kernel, label, inputs in _cases():
        t_numba, out_numba = _time(kernels.KERNELS["numba"][kernel], inputs, args.repeat)
        t_numpy, out_numpy = _time(kernels.KERNELS["numpy"][kernel], inputs, args.repeat)
        if not np.array_equal(np.asarray(out_numba), np.asarray(out_numpy)):
            raise SystemExit(f"backends disagree on {kernel} / {label}")
        rows.append({"kernel": kernel, "case": label, "numba_s": t_numba, "numpy_s": t_numpy,
                     "speedup": t_numpy / t_numba if t_numba else float("inf")})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<17} {'case':<20} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for r in rows:
        print(f"{r['kernel']:<17} {r['case']:<20} {r['numba_s'] * 1e3:>8.2f}ms {r['numpy_s'] * 1e3:>8.2f}ms "
              f"{r['speedup']:>7.1f}x")


if __name__ == "__main__":
    main()
