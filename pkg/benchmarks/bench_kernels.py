"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""

import argparse
import json
import random
import timeit

from gmpy2 import mpq

from revlexgin._kernels import ckernels, pykernels
from revlexgin.order import RingContext


def workloads(rng):
    ring = RingContext.standard(6)
    deg4 = ring.terms_of_degree(4)
    some = rng.sample(deg4, 60)
    gens = [e for t in (2, 3, 4) for e in rng.sample(ring.terms_of_degree(t), 15)]
    standard = sorted(rng.sample(deg4, 80), key=pykernels.desc_key, reverse=True)
    deg5 = set(rng.sample(ring.terms_of_degree(5), 40))

    # a normal-form problem: reduce a dense quartic against monic quadrics
    quad = ring.terms_of_degree(2)
    basis = []
    for lm in quad[:8]:
        tail = [(e, mpq(rng.randint(-9, 9), rng.randint(1, 9))) for e in quad[8:] if rng.random() < 0.5]
        basis.append((lm, tail))
    f = {e: mpq(rng.randint(-50, 50)) for e in deg4 if rng.random() < 0.6}

    rows = [[rng.randint(-20, 20) if rng.random() < 0.7 else 0 for _ in range(120)] for _ in range(30)]

    return {
        "expand": lambda K: K.expand(list(some)),
        "minimalize": lambda K: K.minimalize(gens),
        "sous_escalier_next": lambda K: K.sous_escalier_next(list(standard), deg5),
        "normal_form": lambda K: K.normal_form(f, basis, K.desc_key, True),
        "rref": lambda K: K.rref(rows, 120),
        "divides": lambda K: [K.divides(a, b) for a in some[:30] for b in some[:30]],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if ckernels is None:
        raise SystemExit("compiled kernels are not built; run: pip install -e . --no-build-isolation")
    jobs = workloads(random.Random(0))
    results = {}
    for name, job in jobs.items():
        assert job(pykernels) == job(ckernels), f"backends disagree on {name}"
        py = min(timeit.repeat(lambda: job(pykernels), number=3, repeat=args.repeat)) / 3
        cy = min(timeit.repeat(lambda: job(ckernels), number=3, repeat=args.repeat)) / 3
        results[name] = {"python_ms": py * 1e3, "cython_ms": cy * 1e3, "speedup": py / cy}
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
        return
    print(f"{'kernel':<20}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, r in results.items():
        print(f"{name:<20}{r['python_ms']:>12.3f}{r['cython_ms']:>12.3f}{r['speedup']:>9.2f}x")


if __name__ == "__main__":
    main()
