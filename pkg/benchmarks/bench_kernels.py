"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Micro benchmarks call both kernel modules directly.  End-to-end workloads
run in subprocesses so that backend selection happens at import time, with
``TERMFAN_PURE_PYTHON=1`` forcing the fallback.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from termfan import _pykernels

try:
    from termfan import _ckernels
except ImportError:
    _ckernels = None


def profile_case(n, seed=1):
    rng = random.Random(seed)
    return [tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(n)]


def micro(repeat):
    gens = profile_case(18)
    lms = profile_case(40, seed=2)
    probes = profile_case(200, seed=3)
    rows = ((1, 1, 1), (0, 0, -1), (0, -1, 0))
    cases = {
        "lcm profile, 18 generators": lambda k: k.lcm_degree_profile(gens),
        "first_divisor x200": lambda k: [k.first_divisor(m, lms) for m in probes],
        "matrix_key x200": lambda k: [k.matrix_key(rows, m) for m in probes],
        "mono_lcm x200": lambda k: [k.mono_lcm(a, b) for a, b in zip(probes, probes[1:])],
    }
    print(f"{'kernel':32s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=repeat))
        if _ckernels is None:
            print(f"{name:32s} {tp:10.4f} {'n/a':>10s}")
            continue
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=repeat))
        print(f"{name:32s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


WORKLOAD = r"""
import random, time
from termfan import kernels
from termfan.algebra import commutative
from termfan.fan import enumerate_leading_ideals_admissible, universal_gb, verify_universal
from termfan.groebner import IdealSpec
from termfan.ideals import MonomialIdeal, hilbert_polynomial_and_index
from termfan.orderings import random_admissible_ordering
from termfan.parsing import parse_polynomial
from termfan.poly import RingSignature

sig = RingSignature(("x", "y", "z"))
L = IdealSpec(commutative(sig), tuple(parse_polynomial(s, sig) for s in ("x^2 - y*z", "y^2 - x*z", "z^2 - x*y")))
t0 = time.perf_counter()
F = enumerate_leading_ideals_admissible(L, 3)
U = universal_gb(L, F)
rng = random.Random(0)
rep = verify_universal(U, L, [random_admissible_ordering(3, rng) for _ in range(300)])
t1 = time.perf_counter()
rng = random.Random(5)
sextics = [(a, b, 6 - a - b) for a in range(7) for b in range(7 - a)]
for _ in range(10):
    # same-degree generators stay minimal, so all 16 enter the inclusion-exclusion
    hilbert_polynomial_and_index(MonomialIdeal(sig, rng.sample(sextics, 16)))
t2 = time.perf_counter()
print(kernels.BACKEND, len(F), rep.passed, f"{t1 - t0:.3f}", f"{t2 - t1:.3f}")
"""


def end_to_end():
    print()
    print(f"{'backend':10s} {'fan ideals':>10s} {'fan+verify s':>13s} {'hilbert s':>10s}")
    for pure in ("1", "0"):
        env = dict(os.environ, TERMFAN_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        backend, n, ok, t_fan, t_hilb = out.stdout.split()
        print(f"{backend:10s} {n:>10s} {t_fan:>13s} {t_hilb:>10s}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    micro(args.repeat)
    end_to_end()


if __name__ == "__main__":
    main()
