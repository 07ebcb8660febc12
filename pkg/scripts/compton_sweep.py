#!/usr/bin/env python3
"""Sweep the two-push Compton pipeline over lambda_i / lambda0 and compare with the standard shift."""

import argparse
import math
import sys

import numpy as np

from wftlab.compton import run_pipeline
from wftlab.core import PARTICLE_MASSES, rest_wavelength


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--particle", choices=sorted(PARTICLE_MASSES), default="electron")
    ap.add_argument("--alpha", type=float, default=math.pi / 2, help="deflection angle in rad")
    ap.add_argument("--decades", type=float, nargs=2, default=(0.0, 4.0), metavar=("LO", "HI"),
                    help="log10 range of lambda_i / lambda0")
    ap.add_argument("--points", type=int, default=17)
    args = ap.parse_args(argv)

    lam0 = rest_wavelength(PARTICLE_MASSES[args.particle])
    out = sys.stdout
    out.write("ratio,lambda_i,v1,v2,dlambda_paper,dlambda_total,oracle,rel_dev_total\n")
    for ratio in np.logspace(*args.decades, args.points):
        tr = run_pipeline(float(ratio) * lam0, lam0, args.alpha)
        out.write(
            f"{ratio:.6g},{tr.lambda_i:.10e},{tr.v1:.10e},{tr.v2:.10e},"
            f"{tr.dlambda_paper:.10e},{tr.dlambda_total:.10e},{tr.dlambda_oracle:.10e},{tr.rel_dev_total:+.6e}\n"
        )


if __name__ == "__main__":
    main()
