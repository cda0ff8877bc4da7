"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Each workload is run on both backends; results must agree exactly before a
timing is reported.
"""

from __future__ import annotations

import argparse
import json
import statistics
import time

from superdirac import kernels
from superdirac.charring import RationalCharacter, expand, odd_denominator, weyl_denominator, weyl_numerator
from superdirac.rootdata import Kind, Weight, rho


def _workloads():
    n = 3
    lam = Weight((7, 5, 3)) + rho(Kind.OSP, n)
    num = (weyl_numerator(lam) * odd_denominator(n)).terms
    den = weyl_denominator(Kind.C, n).terms
    big = weyl_numerator(Weight((11, 7, 3))).terms
    db = weyl_denominator(Kind.B, n)
    dc = weyl_denominator(Kind.C, n)
    ser = expand(RationalCharacter(db, dc), 24).coeffs
    return {
        "laurent_mul (n=3 numerator x D_C)": lambda: kernels.laurent_mul(big, den),
        "laurent_divide (osp character, n=3)": lambda: kernels.laurent_divide(num, den),
        "series_mul (order 24, n=3)": lambda: kernels.series_mul(ser, ser, 24),
        "expand D_B/D_C (order 20, n=3)": lambda: expand(RationalCharacter(db, dc), 20).coeffs,
    }


def bench(repeat: int):
    rows = []
    for name, fn in _workloads().items():
        results, times = {}, {}
        for backend in kernels.available_backends():
            prev = kernels.use_backend(backend)
            try:
                results[backend] = fn()
                samples = []
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    fn()
                    samples.append(time.perf_counter() - t0)
                times[backend] = statistics.median(samples)
            finally:
                kernels.use_backend(prev)
        values = list(results.values())
        if any(v != values[0] for v in values[1:]):
            raise AssertionError(f"backends disagree on {name}")
        row = {"workload": name, **{f"{b}_s": round(t, 6) for b, t in times.items()}}
        if "cython" in times and "python" in times:
            row["speedup"] = round(times["python"] / times["cython"], 2)
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = bench(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"backends: {', '.join(kernels.available_backends())}")
    for r in rows:
        cy = r.get("cython_s")
        py = r.get("python_s")
        extra = f"  x{r['speedup']}" if "speedup" in r else ""
        print(f"{r['workload']:<40} python {py:.5f}s" + (f"  cython {cy:.5f}s" if cy is not None else "") + extra)


if __name__ == "__main__":
    main()
