"""Empirical constants Theta_n^alpha = max_l theta_{n,l} for a few Gegenbauer indices."""

from __future__ import annotations

import argparse

from spectral_tail.quadrature import theta_profile


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alphas", default="0,0.5,1.5,5", help="comma-separated alpha values")
    p.add_argument("--L", type=int, default=1000)
    args = p.parse_args()

    alphas = [float(a) for a in args.alphas.split(",")]
    print(f"{'n':>4} " + " ".join(f"{'alpha=' + format(a, 'g'):>12}" for a in alphas))
    for n in (5, 10, 20, 40, 80):
        vals = [theta_profile(n, a, args.L).theta_max for a in alphas]
        print(f"{n:4d} " + " ".join(f"{v:12.6f}" for v in vals))


if __name__ == "__main__":
    main()
