#!/usr/bin/env python3
"""Tabulate Hamilton-Jacobi and Klein-Gordon residuals (relative to k0^2) against the grid step.

The last column extrapolates, from the measured order, the divisor lambda0 / h at
which the Klein-Gordon residual would drop to --target * k0^2.
"""

import argparse

from wftlab.core import PARTICLE_MASSES, rest_wavelength
from wftlab.waves import WaveField, hamilton_jacobi_residual, klein_gordon_residual, wavelength_grid


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", type=float, nargs="+", default=[0.0, 0.3, 0.6, 0.9])
    ap.add_argument("--divisors", type=float, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--target", type=float, default=1e-6)
    args = ap.parse_args(argv)

    lam0 = rest_wavelength(PARTICLE_MASSES["electron"])
    print("beta,h_divisor,hj_rel,kg_rel,kg_order,divisor_for_target")
    for beta in args.beta:
        field = WaveField.create(lam0, beta)
        k02 = field.k0**2
        for n in args.divisors:
            grid = wavelength_grid(field, lam0 / n)
            hj = hamilton_jacobi_residual(field, grid)
            kg = klein_gordon_residual(field, grid)
            rel = kg.residual_h / k02
            needed = n * (rel / args.target) ** (1 / kg.order)
            print(f"{beta},{n:g},{hj / k02:.3e},{rel:.3e},{kg.order:.4f},{needed:.0f}")


if __name__ == "__main__":
    main()
