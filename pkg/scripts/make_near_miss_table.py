#!/usr/bin/env python3
"""Rebuild the near-miss table with certified digits.

Columns: p, q, r, beta (largest real root of Phi_pq - Phi_r), alpha
(largest root of the reference polynomial psi_{p+1}), inverse gap
(alpha-beta)^-1, and the 2^q-scaled gap.
"""
import argparse
import sys

from cyclolab.nearmiss import TABLE_ROWS, find_triples, table1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=15)
    ap.add_argument("--extend", type=int, default=0, metavar="QMAX",
                    help="also include all triples with q up to QMAX for p in {3,5,7,11,13}")
    args = ap.parse_args()

    rows = list(TABLE_ROWS)
    if args.extend:
        rows = []
        for p in (3, 5, 7, 11, 13):
            rows.extend((p, q) for q, _ in find_triples(p, args.extend))

    print("p,q,r,beta,alpha,inv_gap,scaled_gap")
    for rec in table1(rows=rows, digits=args.digits):
        print(",".join([
            str(rec.p), str(rec.q), str(rec.r),
            rec.beta.significant(args.digits),
            rec.alpha.significant(args.digits),
            rec.inv_gap.significant(args.digits),
            rec.scaled_gap.significant(args.digits),
        ]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
