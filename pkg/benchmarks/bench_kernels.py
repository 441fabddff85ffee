#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-Python fallback.

Runs the same workloads twice in subprocesses: once with numba enabled
(the default) and once with IDEALCORE_PURE_PYTHON=1.  Each workload exercises
the hot paths (field arithmetic, normal forms, Buchberger) through the public
API so the comparison reflects end-to-end behavior, and asserts that both
paths produce identical results.

Usage: python benchmarks/bench_kernels.py
"""
import json
import os
import subprocess
import sys

WORKER = r"""
import json
import time

import numpy as np

from idealcore import (
    GeneralElementConfig,
    RingSpec,
    buchberger,
    gf,
    kn_binomial,
    parse_poly,
    power,
    reduction_number,
)
from idealcore import _kernels

results = {"numba": _kernels.NUMBA_ENABLED, "timings": {}, "digests": {}}


def bench(name, func, repeat=3):
    best = float("inf")
    digest = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        digest = func()
        best = min(best, time.perf_counter() - t0)
    results["timings"][name] = round(best, 4)
    results["digests"][name] = digest


def field_arith():
    field = gf(2, 16)
    rng = np.random.default_rng(0)
    a = field.random_elements(rng, 1_000_000)
    b = field.random_elements(rng, 1_000_000)
    acc = field.mul(field.add(a, b), b[::-1])
    nz = acc[acc != 0]
    return int(field.inv(nz).sum() % (1 << 31))

def groebner_quotient_ring():
    R = RingSpec(gf(2, 16), ("x", "y", "z"), quotient=("z^3",))
    I = R.ideal("x^2", "y^2", "x*z", "y*z")
    p4 = power(I, 5)
    return sorted(p4.groebner_strings())


def kn_closed_form():
    R = RingSpec(gf(3, 8), ("x", "y", "z"))
    J = R.ideal("x^3", "y^3", "z^3")
    I = R.ideal("x^3", "y^3", "z^3", "x*y*z", "x^2*y")
    return sorted(kn_binomial(J, I, 3).groebner_strings())


def rednum_general():
    R = RingSpec(gf(2, 16), ("x", "y", "z"), quotient=("z^3",))
    I = R.ideal("x^2", "y^2", "x*z", "y*z")
    return reduction_number(R.ideal("x^2", "y^2"), I)


bench("field_arith_1m", field_arith)
bench("power_I5_quotient_ring", groebner_quotient_ring)
bench("kn_binomial_n3", kn_closed_form)
bench("reduction_number", rednum_general)
print(json.dumps(results))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["IDEALCORE_PURE_PYTHON"] = "1"
    else:
        env.pop("IDEALCORE_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        sys.stderr.write(out.stderr)
        raise SystemExit(out.returncode)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    jit = run(pure=False)
    pure = run(pure=True)
    assert jit["numba"] is True, "numba path did not activate"
    assert pure["numba"] is False, "pure path did not activate"
    if jit["digests"] != pure["digests"]:
        raise SystemExit("kernel paths disagree; this is a bug")
    print(f"{'workload':<28}{'numba (s)':>12}{'pure (s)':>12}{'speedup':>10}")
    for name, t_jit in jit["timings"].items():
        t_pure = pure["timings"][name]
        ratio = t_pure / t_jit if t_jit > 0 else float("inf")
        print(f"{name:<28}{t_jit:>12.4f}{t_pure:>12.4f}{ratio:>9.1f}x")
    print("identical results on both paths")


if __name__ == "__main__":
    main()
