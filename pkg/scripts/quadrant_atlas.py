#!/usr/bin/env python3
"""Atlas of the four (M, N) sign quadrants.

Takes a base config, flips the sign of the Clausius-Clapeyron coefficient and
the ordering of the water/ice specific heats to visit all four quadrants,
then prints the regime classification, every root found, and the residual
verification verdict for each root.

Usage: python3 scripts/quadrant_atlas.py configs/thaw_convective.cfg
"""

import argparse
import dataclasses

from stefan_thaw.errors import NoRootFound, VerificationFailed
from stefan_thaw.model import load_config, reduce_params
from stefan_thaw.profiles import build_convective_solution
from stefan_thaw.solver import solve_xi
from stefan_thaw.verification import verify_convective

QUADRANTS = {
    # (M sign, N sign) -> (gamma_cc sign flip, swap c_i above c_w)
    "M>0, N>0": (False, False),
    "M>0, N<0": (False, True),
    "M<0, N>0": (True, True),
    "M<0, N<0": (True, False),
}


def variant(phys, flip_gamma, hot_ice):
    changes = {}
    if flip_gamma:
        changes["gamma_cc"] = -phys.gamma_cc
    if hot_ice:
        changes["c_i"] = 1.5 * phys.c_w
    return dataclasses.replace(phys, **changes) if changes else phys


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("config")
    args = ap.parse_args()
    base = load_config(args.config)
    if base.gamma_cc <= 0:
        ap.error("base config must have gamma_cc > 0")

    for label, (flip_gamma, hot_ice) in QUADRANTS.items():
        phys = variant(base, flip_gamma, hot_ice)
        dl = reduce_params(phys)
        print(f"\n=== {label}:  M = {dl.m_par:.5g}, N = {dl.n_par:.5g}, "
              f"p = {dl.p_par:.5g} ===")
        try:
            roots, report = solve_xi(dl)
        except NoRootFound as err:
            print(f"guarantee: {err.report.guarantee or 'none'} "
                  f"[{err.report.citation}]")
            print(f"no root: {err}")
            continue
        print(f"guarantee: {report.guarantee} [{report.citation}]")
        if report.root_range:
            print(f"root range: (0, {report.root_range[1]:.6g})")
        for r in roots.roots:
            sol = build_convective_solution(phys, dl, r)
            try:
                verify_convective(sol)
                verdict = "verified"
            except VerificationFailed as err:
                verdict = f"verification failed: {err}"
            print(f"  root xi = {r:.12g}  wall = {sol.wall_temp:.6g}  "
                  f"interface = {sol.interface_temp:.6g}  [{verdict}]")


if __name__ == "__main__":
    main()
