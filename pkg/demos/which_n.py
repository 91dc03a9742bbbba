#!/usr/bin/env python3
"""For which N can a triangle be N-tiled?  A table from the classifier.

Each admissible entry is backed by a witness construction that is built and
verified on the spot.
"""
from __future__ import annotations

from tritile import classify, realize, verify
from tritile.classifier import TargetKind, TileDescriptor, TileKind

CASES = [
    ("tan 1/2, similar", TileDescriptor.right_tan(1, 2), TargetKind.SIMILAR),
    ("30-60-90, similar", TileDescriptor(TileKind.RIGHT_306090), TargetKind.SIMILAR),
    ("oblique, similar", TileDescriptor(TileKind.OBLIQUE_OTHER), TargetKind.SIMILAR),
    ("30-30-120, equilateral", TileDescriptor(TileKind.ISOSCELES_3030120), TargetKind.EQUILATERAL),
    ("30-60-90, equilateral", TileDescriptor(TileKind.RIGHT_306090), TargetKind.EQUILATERAL),
    ("tan 3/4, isosceles half", TileDescriptor.right_tan(3, 4), TargetKind.ISOSCELES_HALF),
]


def main(limit: int = 60) -> None:
    for label, tile, target in CASES:
        ns = []
        for n in range(1, limit + 1):
            v = classify(tile, target, n)
            if not v.admissible:
                continue
            if v.witness is not None:
                t = realize(v.witness)
                assert t.N == n and verify(t).ok
                ns.append(str(n))
            else:
                ns.append(f"{n}*")
        print(f"{label:<26} {' '.join(ns)}")
    print("* admissible by the necessary conditions, no construction implemented")


if __name__ == "__main__":
    main()
