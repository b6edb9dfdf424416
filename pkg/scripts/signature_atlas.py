#!/usr/bin/env python3
"""Sweep ambient dimensions and tabulate which signatures subspaces realize.

For each n in the requested range, enumerates every subspace of GF(p)^n,
counts the subspaces behind each realized signature, and checks that the
realized set coincides with the parenthesis-matching feasibility predicate.
"""

import argparse
import itertools
import time

from redlime import (Mark, Signature, enumerate_subspaces, is_feasible,
                     signature, subspace_count)


def realized_table(n: int, p: int, budget: int) -> dict:
    counts: dict = {}
    for w in enumerate_subspaces(n, p, budget=budget):
        key = str(signature(w))
        counts[key] = counts.get(key, 0) + 1
    return counts


def feasible_strings(n: int) -> set:
    return {"".join(m.value for m in marks)
            for marks in itertools.product(tuple(Mark), repeat=n)
            if is_feasible(Signature(marks))}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("-p", type=int, default=2, help="field size (prime)")
    ap.add_argument("--budget", type=int, default=10 ** 6)
    ap.add_argument("--table", action="store_true", help="print every signature row")
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        counts = realized_table(n, args.p, args.budget)
        elapsed = time.perf_counter() - start
        feasible = feasible_strings(n)
        status = "OK" if set(counts) == feasible else "MISMATCH"
        print(f"n={n}: {subspace_count(n, args.p)} subspaces, "
              f"{len(counts)} signatures, characterization {status} ({elapsed:.2f}s)")
        if args.table:
            for key in sorted(counts):
                print(f"  {key} {counts[key]}")


if __name__ == "__main__":
    main()
