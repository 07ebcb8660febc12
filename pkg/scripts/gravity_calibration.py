#!/usr/bin/env python3
"""Print the wave-gravity calibration: force ratio to Newton, the implied G and the N factorization."""

import argparse

import numpy as np

from wftlab.core import load_constants
from wftlab.gravity import MassPair, decompose_N, effective_G, maximass, wave_gravity_force


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--constants", help="constants file")
    args = ap.parse_args(argv)
    const = load_constants(args.constants)

    unit = wave_gravity_force(MassPair.from_masses(1.0, 1.0, 1.0, const), const)
    print(f"F(1 kg, 1 kg, 1 m)   = {unit.force:.10e} N")
    print(f"Newton               = {unit.newton:.10e} N")
    print(f"ratio                = {unit.ratio:.15f}  ({unit.rel_dev:+.4%})")
    print(f"effective G          = {effective_G(const):.10e}")

    ratios = np.array([
        wave_gravity_force(MassPair.from_masses(ma, mb, r, const), const).ratio
        for ma in np.logspace(-30, 40, 6)
        for mb in np.logspace(-30, 40, 6)
        for r in np.logspace(-10, 20, 6)
    ])
    print(f"ratio spread over {ratios.size} (m_a, m_b, r): {np.ptp(ratios) / unit.ratio:.2e}")

    d = decompose_N(const)
    print(f"N_coeff              = {d.N_coeff:.10e}")
    print(f"alpha_inv^2 * 100^5  = {d.reconstruction:.10e}")
    print(d.note)
    print(f"maximass h/(L c)     = {maximass(const):.6e} kg")


if __name__ == "__main__":
    main()
