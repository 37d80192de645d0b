"""Benchmark the compiled kernel backend against the pure-Python fallback.

Runs the primitive kernels (multiply, exact divide, gcd) on synthetic
inputs and one end-to-end minimal-relation solve, importing both backend
modules directly so a single process can compare them.

    python benchmarks/bench_kernel.py
"""

import random
import time

from pseudolin._kernel import _zkernel_py

try:
    from pseudolin._kernel import _zkernel
    BACKENDS = [("python", _zkernel_py), ("cython", _zkernel)]
except ImportError:
    print("compiled backend not built; benchmarking pure Python only")
    BACKENDS = [("python", _zkernel_py)]


def rand_zpoly(rng, deg, bits=64):
    return [rng.getrandbits(bits) - (1 << (bits - 1))
            for _ in range(deg)] + [rng.getrandbits(bits) + 1]


def bench(label, fn, repeat=5):
    best = min(_timed(fn) for _ in range(repeat))
    print(f"  {label:<28} {best * 1000:9.2f} ms")
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def kernel_suite(mod):
    rng = random.Random(12345)
    a = rand_zpoly(rng, 150, bits=32)
    b = rand_zpoly(rng, 150, bits=32)
    g = rand_zpoly(rng, 25, bits=16)
    ag = mod.zp_mul(rand_zpoly(rng, 60, bits=16), g)
    bg = mod.zp_mul(rand_zpoly(rng, 60, bits=16), g)
    prod = mod.zp_mul(a, b)
    bench("zp_mul deg 150 x 150", lambda: mod.zp_mul(a, b))
    bench("zp_divexact deg 300 / 150", lambda: mod.zp_divexact(prod, a))
    bench("zp_gcd deg 85 (gcd deg 25)", lambda: mod.zp_gcd(ag, bg))
    bench("zp_addmul deg 150", lambda: mod.zp_addmul(prod, a, b))


def solver_suite():
    """End-to-end: LCLM of three order-3 operators (the heaviest instance
    shape in the acceptance suite)."""
    from pseudolin.instances import build_lclm, lclm
    from pseudolin.randgen import rand_operator

    rng = random.Random(42)
    ops = [rand_operator(rng, 3, 3, regular_infinity=True) for _ in range(3)]
    inst = build_lclm(ops)
    t0 = time.perf_counter()
    L = lclm(inst)
    dt = time.perf_counter() - t0
    print(f"  lclm of 3 order-3 operators  {dt * 1000:9.2f} ms "
          f"(order {L.order})")


def main():
    for name, mod in BACKENDS:
        print(f"backend: {name}")
        kernel_suite(mod)
    # the solver picks its backend at import time (PSEUDOLIN_PURE_PYTHON=1
    # forces the fallback); report which one is active
    from pseudolin import BACKEND
    print(f"backend: {BACKEND} (active for the solver)")
    solver_suite()


if __name__ == "__main__":
    main()
