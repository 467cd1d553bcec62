#!/usr/bin/env python3
"""Sweep the iterate census over a prime field and emit CSV.

Produces the density table for a range of degree bounds, plus the
normalized sequence q^(-d-1) * |Iterates(d^r, r)| that the open asymptotic
question is about.
"""
import argparse
import csv
import sys

from iterroot import density_report, normalized_iterate_sequence


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--d", default="1,4,9,16,25", help="degree bounds")
    parser.add_argument("--sequence", default="1,2,3,4",
                        help="d values for the normalized d^r sequence")
    parser.add_argument("--limit", type=int, default=None)
    args = parser.parse_args()

    d_list = [int(t) for t in args.d.split(",")]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["q", "r", "d", "count", "total", "ratio_num", "ratio_den", "bound"])
    for row in density_report(args.q, args.r, d_list, cap=args.limit):
        writer.writerow(
            [row.q, row.r, row.d, row.count, row.total,
             row.ratio.numerator, row.ratio.denominator, row.bound]
        )

    seq_d = [int(t) for t in args.sequence.split(",")]
    writer.writerow([])
    writer.writerow(["d", "count_at_d_power_r", "normalized_num", "normalized_den"])
    for d, count, value in normalized_iterate_sequence(args.q, args.r, seq_d, cap=args.limit):
        writer.writerow([d, count, value.numerator, value.denominator])


if __name__ == "__main__":
    main()
