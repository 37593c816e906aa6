#!/usr/bin/env python3
"""Print the spectral thresholds that force matching structure, per order n.

Columns: the fractional-perfect-matching threshold, the perfect-matching
threshold (even n), and the extremal-family value they both come from.
"""

from __future__ import annotations

import argparse

from specmatch import HalfIntegral, spectral_radius, theta_n
from specmatch.certify import fpm_threshold, pm_threshold
from specmatch.extremal import build_extremal, ExtremalSpec


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=24)
    args = parser.parse_args()

    print(f"{'n':>4} {'fpm threshold':>16} {'pm threshold':>16} {'rho of extremal':>16}")
    for n in range(3, args.n_max + 1):
        fpm = fpm_threshold(n)
        pm = pm_threshold(n)
        if n >= 8 and n != 9:
            witness = build_extremal(ExtremalSpec(n, HalfIntegral(n - 1), 1))
            rho = spectral_radius(witness).value
        else:
            rho = fpm
        pm_text = f"{pm:16.10f}" if pm is not None else " " * 16
        print(f"{n:>4} {fpm:16.10f} {pm_text} {rho:16.10f}")
        if n >= 8 and n != 9:
            assert abs(rho - theta_n(n)) < 1e-8


if __name__ == "__main__":
    main()
