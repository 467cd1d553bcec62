#!/usr/bin/env python3
"""Show the error of specialized iterates shrinking at several places.

Builds the family for a target over Q, specializes at a shrinking schedule
of rational epsilons, and prints exact error norms with their float
renderings, at the archimedean place and a few p-adic ones.
"""
import argparse
from fractions import Fraction

from iterroot import (
    ApproximationTarget,
    Place,
    Poly,
    QQ,
    convergence_table,
    find_epsilon_multi_place,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poly", default="1,0,1", help="target, ascending coefficients")
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--eta", default="1/100")
    args = parser.parse_args()

    target = Poly(QQ, [Fraction(t) for t in args.poly.split(",")])

    print(f"archimedean convergence for target {args.poly}, order {args.r}:")
    e_list = [Fraction(1, 10**m) for m in (2, 3, 4, 5)]
    for row in convergence_table(target, args.r, Place.archimedean(), e_list):
        print(
            f"  e = {str(row.epsilon):>9}  error = {float(row.error_norm):.3e}"
            f"  error/|e| = {float(row.ratio):.6f}"
        )

    print("3-adic convergence along e = 3^m:")
    e_list = [Fraction(3**m) for m in (2, 4, 6)]
    for row in convergence_table(target, args.r, Place.p_adic(3), e_list):
        print(
            f"  e = {str(row.epsilon):>9}  |error|_3 = {float(row.error_norm):.3e}"
        )

    places = (Place.archimedean(), Place.p_adic(3), Place.p_adic(5))
    spec = ApproximationTarget(target, args.r, places, Fraction(args.eta))
    epsilon = find_epsilon_multi_place(spec)
    print(f"single epsilon meeting eta = {args.eta} at inf, 3-adic, 5-adic: {epsilon}")


if __name__ == "__main__":
    main()
