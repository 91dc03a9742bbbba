"""Exact construction and verification of N-tilings of triangles."""
from __future__ import annotations

from .catalog import catalog, catalog_names
from .classifier import TargetKind, TileDescriptor, Verdict, classify, classify_tiling, realize
from .exact import DomainError, FieldMismatch, QuadNum, parse_number
from .fileformat import dumps, loads, read_tiling, write_tiling
from .generators import (
    biquadratic,
    bisect_isosceles,
    compose,
    equilateral_six,
    hexagonal,
    pythagorean,
    quadratic,
    rect_flip,
    right_306090_three,
    triple_square,
)
from .geometry import Point, Shape, Triangle
from .tiling import Report, Tiling, TilingError, compute_dmatrix, eigen_check, relations, verify, vertex_census

__version__ = "0.1.0"
