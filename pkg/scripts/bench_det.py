"""Compare hyperdeterminant strategies on Hankel tensors and random rational tensors."""

import argparse
import math
import random
from fractions import Fraction

from hyperjack.hyperdet import STRATEGIES, HyperTensor, LambdaGenerator, det_strategy_bench, hankel
from hyperjack.symfunc import Alphabet


def row(label, report):
    cells = "  ".join(f"{s}={r['seconds']:.3f}s" for s, r in report.items())
    print(f"{label:<28} {cells}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for n, k in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2)]:
        for name, alphabet in [("formal", Alphabet.formal()), ("values", Alphabet.finite([1, 2, 3, 4, 5, 6]))]:
            T = hankel(k, n, None, LambdaGenerator(alphabet))
            # the naive sum has (n!)^(2k) terms; keep it to small cases
            strategies = STRATEGIES if math.factorial(n) ** (2 * k) <= 20000 else ("reduced", "collect", "parallel")
            _, report = det_strategy_bench(T, strategies, workers=args.workers)
            row(f"hankel n={n} k={k} {name}", report)

    for order, dim in [(2, 3), (4, 2), (4, 3)]:
        T = HyperTensor.from_function(order, dim, lambda idx: Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        _, report = det_strategy_bench(T, STRATEGIES, workers=args.workers)
        row(f"random order={order} dim={dim}", report)


if __name__ == "__main__":
    main()
