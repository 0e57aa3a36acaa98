"""Exact Chebyshev/Legendre coefficients of the two test functions against their bounds."""

from __future__ import annotations

import argparse

from spectral_tail.coeffbounds import (
    bound_chebyshev,
    bound_jacobi,
    bound_legendre,
    bound_xiang,
    bound_xiang_legendre,
)
from spectral_tail.expand import TEST_FUNCTIONS, basis_rescale, exact_coeffs, expansion_coeffs


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--rho", type=float, default=1.98)
    p.add_argument("--nmax", type=int, default=20)
    args = p.parse_args()

    rho, N = args.rho, args.nmax + 1
    M1, M2 = TEST_FUNCTIONS["u1"].max_modulus(rho), TEST_FUNCTIONS["u2"].max_modulus(rho)
    c1 = exact_coeffs("u1", N).coefficients
    c2 = exact_coeffs("u2", N).coefficients
    n1 = basis_rescale(expansion_coeffs(TEST_FUNCTIONS["u1"].function, -0.5, -0.5, N), "T_basis").coefficients
    n2 = expansion_coeffs(TEST_FUNCTIONS["u2"].function, 0.0, 0.0, N).coefficients

    print(f"rho = {rho}, M(u1) = {M1:.4f}, M(u2) = {M2:.4f}")
    print(f"{'n':>3} {'u1 exact':>11} {'|err|':>8} {'Cheb bound':>11} | {'u2 exact':>11} {'|err|':>8} {'Leg bound':>11} {'Xiang':>11}")
    for n in range(1, N):
        print(
            f"{n:3d} {c1[n]:11.4e} {abs(n1[n] - c1[n]):8.1e} {bound_chebyshev(n, rho, M1).value:11.4e} | "
            f"{c2[n]:11.4e} {abs(n2[n] - c2[n]):8.1e} {bound_legendre(n, rho, M2).value:11.4e} "
            f"{bound_xiang_legendre(n, rho, M2).value:11.4e}"
        )
    # Jacobi-type comparison for an unsymmetric weight
    print("\nratio bound_xiang / bound_jacobi at (alpha, beta) = (1, 0):")
    for n in (1, 5, 20, 60):
        r = bound_xiang(n, 1.0, 0.0, rho, 1.0).value / bound_jacobi(n, 1.0, 0.0, rho, 1.0).value
        print(f"  n={n:3d}: {r:.4f}")


if __name__ == "__main__":
    main()
