"""Gegenbauer-Gauss remainders of u1 and u2 next to the a-priori bounds."""

from __future__ import annotations

import argparse

from spectral_tail.expand import TEST_FUNCTIONS
from spectral_tail.quadrature import (
    bound_quad_computable,
    bound_quad_gegenbauer,
    bound_quad_literature,
    quad_remainder,
)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--rho", type=float, default=1.9)
    p.add_argument("--function", choices=tuple(TEST_FUNCTIONS), default="u2")
    p.add_argument("--nmax", type=int, default=12)
    args = p.parse_args()

    tf = TEST_FUNCTIONS[args.function]
    M = tf.max_modulus(args.rho)
    a = args.alpha
    cols = ["|E_n|", "computable", "series", "Hunter"] + (["unit"] if a != -0.5 else [])
    print(f"{args.function}, alpha = {a}, rho = {args.rho}, M = {M:.4f}")
    print(f"{'n':>3} " + " ".join(f"{c:>11}" for c in cols))
    for n in range(2, args.nmax + 1):
        row = [
            abs(quad_remainder(tf.function, n, a)),
            bound_quad_computable(n, a, args.rho, M).value,
            bound_quad_computable(n, a, args.rho, M, form="series").value,
            bound_quad_literature("hunter_general", n, a, args.rho, M).value,
        ]
        if a != -0.5:
            row.append(bound_quad_gegenbauer(n, a, args.rho, M, mode="unit").value)
        print(f"{n:3d} " + " ".join(f"{v:11.3e}" for v in row))


if __name__ == "__main__":
    main()
