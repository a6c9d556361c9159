"""Schur expansion of Delta(x_1..x_n)^(2k): coefficients and vanishing shapes."""

import argparse

from hyperjack.exact import rational_str
from hyperjack.identities import schur_expand_vandermonde, vanishing_schur_coefficients


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", default="2:1,3:1,2:2,4:1,3:2", help="comma separated n:k")
    ap.add_argument("--method", default="alternant", choices=("alternant", "scalar", "both"))
    args = ap.parse_args()
    for item in args.pairs.split(","):
        n, k = (int(x) for x in item.split(":"))
        coeffs = schur_expand_vandermonde(n, k, args.method)
        vanish = vanishing_schur_coefficients(n, k)
        print(f"n={n} k={k}: {len(coeffs)} nonzero, {len(vanish)} vanishing")
        for lam, c in coeffs.items():
            print(f"    {list(lam)!s:<20} {rational_str(c)}")
        if vanish:
            print("    zero at: " + " ".join(str(list(lam)) for lam in vanish))


if __name__ == "__main__":
    main()
