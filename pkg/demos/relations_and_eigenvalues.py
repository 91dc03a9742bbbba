#!/usr/bin/env python3
"""Edge relations, angle relations and the sqrt(N) eigenvalue, on three tilings.

A quadratic tiling of a generic triangle forces nothing on the tile.  The
5-tiling forces 2a = b and a right angle.  The 25-tiling with a retiled
rhombus forces 3a = 2b without the tile being right-angled.
"""
from __future__ import annotations

from tritile import biquadratic, catalog, compute_dmatrix, eigen_check, quadratic, relations
from tritile.geometry import Triangle


def show(name, t) -> None:
    rel = [str(r) for r in relations(t)] or ["none"]
    print(f"{name}: N={t.N}")
    print(f"  d-matrix  {compute_dmatrix(t).tolist()}")
    print(f"  relations {', '.join(rel)}")
    print(f"  d (a,b,c) = sqrt(N) (a,b,c): {eigen_check(t)}")


def main() -> None:
    show("quadratic 9-tiling", quadratic(Triangle.of((0, 0), (7, 1), (2, 5)), 3))
    show("biquadratic 5-tiling", biquadratic(1, 2))
    show("nonquadratic 25-tiling", catalog("nonquadratic_3a2b"))


if __name__ == "__main__":
    main()
