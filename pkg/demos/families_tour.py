#!/usr/bin/env python3
"""Build each tiling family, verify it exactly and draw it.

    python3 demos/families_tour.py [output-dir]

Every tiling is checked with exact arithmetic; the SVG files are written to
the output directory (default: ./figures).
"""
from __future__ import annotations

import sys
from pathlib import Path

from tritile import biquadratic, catalog, hexagonal, pythagorean, quadratic, triple_square, verify
from tritile.geometry import Triangle
from tritile.svg import render_svg


def main() -> None:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
    out.mkdir(parents=True, exist_ok=True)
    generic = Triangle.of((0, 0), (7, 1), (2, 5))
    tilings = {
        "quadratic-4": quadratic(generic, 4),
        "biquadratic-1-2": biquadratic(1, 2),
        "biquadratic-5-7": biquadratic(5, 7),
        "triple-square-2": triple_square(2),
        "hexagonal-2": hexagonal(2),
        "pythagorean-3-4-5": pythagorean(3, 4, 5),
        "thirteen": catalog("thirteen"),
    }
    for name, t in tilings.items():
        r = verify(t)
        c = r.census
        print(f"{name:<20} N={t.N:<4} ok={r.ok}  N_b={c.boundary} N_n={c.nonstrict} N_s={c.strict_interior}"
              f"  d={r.dmatrix.tolist()}")
        (out / f"{name}.svg").write_text(render_svg(t), encoding="utf-8")
    print(f"figures written to {out}/")


if __name__ == "__main__":
    main()
