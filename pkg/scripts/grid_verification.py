#!/usr/bin/env python3
"""Run the full verification grid and print a timing/result table.

For every (r, n) cell, random targets over Q and over F_5 are constructed
and both verification suites run; the table reports per-cell timings, the
arithmetic window used, and the dominant iterate sizes.
"""
import argparse
import random
import time

from iterroot import (
    Poly,
    PrimeField,
    QQ,
    build_family,
    smallest_prime_at_least,
    verify_key_congruence,
    verify_lemma_suite,
)


def run_cell(field, r, n, samples, seed):
    rng = random.Random(seed)
    t0 = time.perf_counter()
    window = None
    all_ok = True
    for _ in range(samples):
        if field is QQ:
            coeffs = [rng.randint(-9, 9) for _ in range(n)]
        else:
            coeffs = [rng.randrange(field.p) for _ in range(n)]
        data = build_family(Poly.from_ints(field, coeffs), r, n=n)
        key = verify_key_congruence(data)
        lemmas = verify_lemma_suite(data)
        window = key.window
        all_ok = all_ok and key.passed and lemmas.passed
    return all_ok, window, time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", default="2,3,4", help="orders, comma-separated")
    parser.add_argument("--n", default="2,3,4,5", help="degree parameters")
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    orders = [int(t) for t in args.r.split(",")]
    degrees = [int(t) for t in args.n.split(",")]
    print(f"{'r':>3} {'n':>3} {'field':>6} {'window':>7} {'status':>7} {'seconds':>8}")
    total = time.perf_counter()
    failures = 0
    for r in orders:
        p = smallest_prime_at_least(max(r, 5))
        for n in degrees:
            for field in (QQ, PrimeField(p)):
                ok, window, elapsed = run_cell(
                    field, r, n, args.samples, args.seed + 97 * r + n
                )
                failures += 0 if ok else 1
                print(
                    f"{r:>3} {n:>3} {field.name:>6} {str(window):>7} "
                    f"{'ok' if ok else 'FAIL':>7} {elapsed:>8.2f}"
                )
    print(f"total {time.perf_counter() - total:.1f}s, {failures} failing cells")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
