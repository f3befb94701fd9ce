#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the raw term workloads (merge-add, convolution, comparison) and two
end-to-end workloads that dominate the property suites: Euclidean division
and automorphism probe validation.

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import importlib
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lexarith import _kernel_py  # noqa: E402

try:
    from lexarith import _kernel as _kernel_cy
except ImportError:
    _kernel_cy = None


def _sample_terms(kernel, seed: int, count: int):
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n_terms = rng.randint(1, 4)
        exps = set()
        while len(exps) < n_terms:
            exps.add((rng.randint(0, 8), rng.randint(1, 3)))
        terms = []
        for e in sorted(exps, key=lambda r: r[0] / r[1], reverse=True):
            coeff = kernel.rat(rng.randint(1, 9), rng.choice((1, 1, 2)))
            terms.append(((kernel.rat(*e),), coeff))
        out.append(tuple(terms))
    return out


def bench_kernel(kernel, repeat: int) -> dict:
    data = _sample_terms(kernel, 42, 300)
    timings = {}

    def run(name, fn):
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        timings[name] = best

    def adds():
        for i in range(len(data) - 1):
            kernel.terms_add(data[i], data[i + 1])

    def muls():
        for i in range(len(data) - 1):
            kernel.terms_mul(data[i], data[i + 1])

    def cmps():
        for i in range(len(data) - 1):
            kernel.terms_cmp(data[i], data[i + 1])

    run("terms_add x299", adds)
    run("terms_mul x299", muls)
    run("terms_cmp x299", cmps)
    return timings


def bench_model(backend: str, repeat: int) -> dict:
    """End-to-end workloads through the public API on a chosen backend."""
    import os

    os.environ["LEXARITH_PURE"] = "1" if backend == "pure" else ""
    for mod in [m for m in list(sys.modules) if m.startswith("lexarith")]:
        del sys.modules[mod]
    import lexarith
    from lexarith import automorph, divmod_floor
    from lexarith.sampler import SampleProfile, Sampler

    assert lexarith.backend_name() == backend, lexarith.backend_name()

    s = Sampler(SampleProfile(dim=1, seed=9))
    elems = [s.nonstandard() for _ in range(120)]
    timings = {}

    def run(name, fn):
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        timings[name] = best

    def division():
        for i in range(len(elems) - 1):
            divmod_floor(elems[i] * elems[i + 1] + 7, elems[i + 1])

    a = elems[0]
    b = a * 3 + 5
    d = automorph.build_from_e2(a, b)
    probes = sorted(set(elems))

    def validation():
        automorph.validate(d, probes, anchors=((a, b),))

    run("euclidean division x119", division)
    run("probe validation (119 probes)", validation)
    return timings


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    kernels = {"pure": _kernel_py}
    if _kernel_cy is not None:
        kernels["compiled"] = _kernel_cy
    else:
        print("compiled kernel not built; benchmarking the pure kernel only")

    raw = {name: bench_kernel(k, args.repeat) for name, k in kernels.items()}
    e2e = {name: bench_model(name, args.repeat) for name in kernels}

    print(f"{'workload':36s}" + "".join(f"{n:>12s}" for n in kernels) + ("     speedup" if len(kernels) == 2 else ""))
    for section in (raw, e2e):
        for work in next(iter(section.values())):
            row = f"{work:36s}"
            vals = [section[n][work] for n in kernels]
            for v in vals:
                row += f"{v * 1e3:10.2f}ms"
            if len(vals) == 2 and vals[1] > 0:
                row += f"{vals[0] / vals[1]:10.1f}x"
            print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
