#!/usr/bin/env python3
"""Scan nonreal coincidence roots and summarize their moduli.

Evidence gathering for the modulus-window behaviour of nonreal roots of
Phi_m - Phi_n: certified moduli, a histogram, exact sqrt(2) attainments,
and any root certifiably outside (1/sqrt2, sqrt2].
"""
import argparse
import sys
import time

from cyclolab.roots import scan_complex


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-index", type=int, default=30)
    ap.add_argument("--coprime", action="store_true")
    ap.add_argument("--precision-bits", type=int, default=256)
    ap.add_argument("--jobs", type=int, default=None)
    args = ap.parse_args()

    t0 = time.time()
    rep = scan_complex(
        args.max_index,
        coprime_only=args.coprime,
        precision_bits=args.precision_bits,
        jobs=args.jobs,
    )
    dt = time.time() - t0
    total = sum(len(r.roots) for r in rep.records)
    print(f"pairs: {len(rep.records)}, nonreal roots: {total}, {dt:.1f}s")
    print("modulus histogram (bin -> count):")
    for b, c in rep.histogram:
        print(f"  {b}: {c}")
    print("exact sqrt(2) attainments:", list(rep.boundary_upper))
    if rep.outside:
        print("OUTSIDE the window:")
        for item in rep.outside:
            print("  ", item)
        return 1
    print("all moduli certified inside (1/sqrt2, sqrt2]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
