"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads through flagrep._speedups and flagrep._kernels_py
directly (bypassing the import-time selection and the character cache) and
prints wall times with the speedup ratio.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

from flagrep import _kernels_py, cartan_from_tag
from flagrep.characters import _dominant_support

try:
    from flagrep import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def character_workload(tag, lam):
    cd = cartan_from_tag(tag)
    support = _dominant_support(cd, lam)

    def run(mod):
        dom = mod.freudenthal(
            cd.cartan_matrix, cd.gram_scaled, cd.positive_roots, lam, support
        )
        return mod.orbit_terms(cd.cartan_matrix, dom, 10**7)

    return f"character {tag} {lam}", run


def orbit_workload(tag):
    cd = cartan_from_tag(tag)

    def run(mod):
        return mod.weyl_orbit(cd.cartan_matrix, cd.weyl_vector, 10**7)

    return f"orbit of the regular weight in {tag}", run


def product_workload(tag, lam):
    cd = cartan_from_tag(tag)
    support = _dominant_support(cd, lam)
    dom = _kernels_py.freudenthal(
        cd.cartan_matrix, cd.gram_scaled, cd.positive_roots, lam, support
    )
    terms = _kernels_py.orbit_terms(cd.cartan_matrix, dom, 10**7)

    def run(mod):
        return mod.poly_mul(terms, terms)

    return f"square of the {tag} {lam} character ({len(terms)} terms)", run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; nothing to compare")
        return

    workloads = [
        character_workload("A2", (16, 16)),
        character_workload("A3", (5, 5, 5)),
        character_workload("B3", (2, 2, 2)),
        character_workload("G2", (3, 3)),
        orbit_workload("A6"),
        orbit_workload("B5"),
        product_workload("A2", (8, 8)),
        product_workload("A3", (3, 3, 3)),
    ]

    name_w = max(len(name) for name, _ in workloads)
    print(f"{'workload':<{name_w}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, run in workloads:
        t_pure, r_pure = best_of(lambda: run(_kernels_py), args.repeats)
        t_fast, r_fast = best_of(lambda: run(_speedups), args.repeats)
        assert r_pure == r_fast, f"backend mismatch on {name}"
        print(
            f"{name:<{name_w}}  {t_pure * 1e3:>8.2f}ms  {t_fast * 1e3:>8.2f}ms"
            f"  {t_pure / t_fast:>7.2f}x"
        )


if __name__ == "__main__":
    main()
