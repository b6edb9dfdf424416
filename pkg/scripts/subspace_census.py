#!/usr/bin/env python3
"""Census of GF(p)^n: compare enumerated subspace counts, per dimension,
against the product-formula counts, and report how dimensions distribute."""

import argparse
from collections import Counter

from redlime import enumerate_subspaces, gaussian_binomial, subspace_count


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("-p", type=int, default=2, help="field size (prime)")
    ap.add_argument("--budget", type=int, default=10 ** 6)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        by_dim = Counter(w.dimension for w in
                         enumerate_subspaces(n, args.p, budget=args.budget))
        formula = {k: gaussian_binomial(n, k, args.p) for k in range(n + 1)}
        ok = by_dim == Counter(formula)
        dist = " ".join(f"{k}:{by_dim[k]}" for k in range(n + 1))
        print(f"n={n}: total {subspace_count(n, args.p)}  [{dist}]  "
              f"{'matches formula' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
